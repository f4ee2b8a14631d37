use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use fishburn::ascent::count_by_zeros;
use fishburn::matrices::{enumerate_i, enumerate_pm};
use fishburn::posets::count_free_by_min_with_limit;
use fishburn::series::{product_form, product_form_pt, sum_form};

use crate::{io_err, CliError, CliResult, Form, Format, MatrixClass, Source};

pub const MAX_ASCENT_N: usize = 12;
pub const MAX_MATRIX_N: usize = 8;
pub const MAX_SERIES_DEG: usize = 60;

pub struct Limits {
    pub posets: usize,
}

pub struct CountRow {
    pub n: usize,
    pub k: usize,
    pub count: BigInt,
}

fn bound(what: &str, n: usize, max: usize) -> CliResult<()> {
    if n > max {
        Err(CliError::Usage(format!("{what} bound is {max}, got {n}")))
    } else {
        Ok(())
    }
}

fn rows_from(n: usize, m: BTreeMap<usize, u64>) -> impl Iterator<Item = CountRow> {
    m.into_iter().map(move |(k, c)| CountRow {
        n,
        k,
        count: BigInt::from(c),
    })
}

fn by_rsum1(ms: &[fishburn::UpperTriMatrix]) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for m in ms {
        *out.entry(m.weight_exponent() as usize).or_insert(0) += 1;
    }
    out
}

/// Nonzero `(n, k, count)` entries for `n = 0..=n_max`.
pub fn count_table(
    source: Source,
    class: MatrixClass,
    n_max: usize,
    limits: &Limits,
) -> CliResult<Vec<CountRow>> {
    let mut rows = Vec::new();
    match source {
        Source::Ascent => {
            bound("ascent", n_max, MAX_ASCENT_N)?;
            for n in 0..=n_max {
                rows.extend(rows_from(n, count_by_zeros(n)));
            }
        }
        Source::Matrices => {
            bound("matrix", n_max, MAX_MATRIX_N)?;
            for n in 0..=n_max {
                let ms = match class {
                    MatrixClass::Pm => enumerate_pm(n as u64),
                    MatrixClass::I => enumerate_i(n as u64),
                };
                rows.extend(rows_from(n, by_rsum1(&ms)));
            }
        }
        Source::Posets => {
            for n in 0..=n_max {
                let counts = count_free_by_min_with_limit(n, limits.posets)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                rows.extend(rows_from(n, counts));
            }
        }
        Source::Series => {
            bound("series", n_max, MAX_SERIES_DEG)?;
            rows.extend(product_form(n_max).terms().map(|(n, k, c)| CountRow {
                n,
                k,
                count: c.clone(),
            }));
        }
    }
    Ok(rows)
}

pub fn big_json(c: &BigInt) -> Value {
    Value::Number(
        c.to_string()
            .parse::<Number>()
            .expect("decimal integers are valid JSON numbers"),
    )
}

pub fn write_counts(out: &mut impl Write, rows: &[CountRow], format: Format) -> CliResult<()> {
    match format {
        Format::Csv => {
            writeln!(out, "n,k,count").map_err(io_err)?;
            for r in rows {
                writeln!(out, "{},{},{}", r.n, r.k, r.count).map_err(io_err)?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| json!({"n": r.n, "k": r.k, "count": big_json(&r.count)}))
                .collect();
            writeln!(out, "{}", Value::Array(v)).map_err(io_err)?;
        }
    }
    Ok(())
}

/// Bivariate forms print `n,k,coefficient`; the univariate form prints
/// `n,coefficient`.
pub fn write_series(
    out: &mut impl Write,
    form: Form,
    max_deg: usize,
    format: Format,
) -> CliResult<()> {
    bound("series", max_deg, MAX_SERIES_DEG)?;
    match form {
        Form::Product | Form::Sum => {
            let s = match form {
                Form::Product => product_form(max_deg),
                _ => sum_form(max_deg),
            };
            match format {
                Format::Csv => {
                    writeln!(out, "n,k,coefficient").map_err(io_err)?;
                    for (n, k, c) in s.terms() {
                        writeln!(out, "{n},{k},{c}").map_err(io_err)?;
                    }
                }
                Format::Json => {
                    let v: Vec<Value> = s
                        .terms()
                        .map(|(n, k, c)| json!({"n": n, "k": k, "coefficient": big_json(c)}))
                        .collect();
                    writeln!(out, "{}", Value::Array(v)).map_err(io_err)?;
                }
            }
        }
        Form::Pt => {
            let s = product_form_pt(max_deg);
            match format {
                Format::Csv => {
                    writeln!(out, "n,coefficient").map_err(io_err)?;
                    for (n, c) in s.coeffs().iter().enumerate() {
                        writeln!(out, "{n},{c}").map_err(io_err)?;
                    }
                }
                Format::Json => {
                    let v: Vec<Value> = s
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(n, c)| json!({"n": n, "coefficient": big_json(c)}))
                        .collect();
                    writeln!(out, "{}", Value::Array(v)).map_err(io_err)?;
                }
            }
        }
    }
    Ok(())
}
