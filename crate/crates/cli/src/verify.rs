use std::io::Write;

use serde_json::{Map, Value};

use fishburn::bijection::verify_bijection;
use fishburn::involution::{orbits, verify_involution};
use fishburn::reference;
use fishburn::verify::{count_agreement, verify_composition_sum, verify_conjecture};

use crate::tables::{Limits, MAX_MATRIX_N, MAX_SERIES_DEG};
use crate::{io_err, CliError, CliResult, Target};

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Runs the selected suites and writes one JSON object. Per-suite summaries
/// go to stderr.
pub fn run(
    out: &mut impl Write,
    target: Target,
    n_max: usize,
    max_deg: usize,
    limits: &Limits,
) -> CliResult<()> {
    if n_max > MAX_MATRIX_N {
        return Err(CliError::Usage(format!(
            "--n-max bound is {MAX_MATRIX_N}, got {n_max}"
        )));
    }
    if max_deg > MAX_SERIES_DEG {
        return Err(CliError::Usage(format!(
            "--max-deg bound is {MAX_SERIES_DEG}, got {max_deg}"
        )));
    }
    let wants = |t: Target| target == t || target == Target::All;
    let mut report = Map::new();
    report.insert("target".into(), to_value(&target_name(target)));
    let mut failed = Vec::new();

    if wants(Target::Involution) {
        let mut runs = Vec::new();
        for n in 1..=n_max as u64 {
            let r = verify_involution(n);
            eprintln!(
                "involution n={n}: {} improper, {} split, {} merge, identity {}",
                r.improper_count,
                r.case1_count,
                r.case2_count,
                if r.identity_ok { "ok" } else { "FAILED" }
            );
            if !r.passed() {
                failed.push(format!("involution n={n}"));
            }
            runs.push(to_value(&r));
        }
        report.insert("involution".into(), Value::Array(runs));
        if n_max >= 6 {
            let pair = (reference::phi_case1(), reference::phi_case2());
            let found = orbits(6).contains(&pair);
            eprintln!("involution: reference orbit in M_6 pairing: {found}");
            if !found {
                failed.push("reference orbit".into());
            }
            report.insert("reference_orbit_found".into(), Value::Bool(found));
        }
    }

    if wants(Target::Bijection) {
        let mut runs = Vec::new();
        for n in 1..=n_max as u64 {
            let r = verify_bijection(n);
            eprintln!(
                "bijection n={n}: |PM|={} |I|={} {}",
                r.proper_count,
                r.i_count,
                if r.passed() { "ok" } else { "FAILED" }
            );
            if !r.passed() {
                failed.push(format!("bijection n={n}"));
            }
            runs.push(to_value(&r));
        }
        report.insert("bijection".into(), Value::Array(runs));
    }

    if wants(Target::Conjecture) {
        let r = verify_conjecture(max_deg);
        eprintln!(
            "conjecture D={max_deg}: {} terms compared, {}",
            r.terms_compared,
            if r.identity_ok {
                "identical"
            } else {
                "MISMATCH"
            }
        );
        if !r.identity_ok {
            failed.push("conjecture".into());
        }
        report.insert("conjecture".into(), to_value(&r));
    }

    if wants(Target::Composition) {
        let mut runs = Vec::new();
        for n in 1..=n_max as u64 {
            let r = verify_composition_sum(n);
            eprintln!(
                "composition n={n}: A_n(z) = {} {}",
                r.composition_sum,
                if r.passed() { "ok" } else { "FAILED" }
            );
            if !r.passed() {
                failed.push(format!("composition n={n}"));
            }
            runs.push(to_value(&r));
        }
        report.insert("composition".into(), Value::Array(runs));
    }

    if wants(Target::Counts) {
        let poset_max = n_max.min(limits.posets);
        let rows = count_agreement(n_max, poset_max, limits.posets)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        for r in &rows {
            eprintln!(
                "counts n={}: {}",
                r.n,
                if r.agree() { "agree" } else { "DISAGREE" }
            );
            if !r.agree() {
                failed.push(format!("counts n={}", r.n));
            }
        }
        report.insert("counts".into(), to_value(&rows));
    }

    report.insert("passed".into(), Value::Bool(failed.is_empty()));
    writeln!(out, "{}", Value::Object(report)).map_err(io_err)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(failed.join(", ")))
    }
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Involution => "involution",
        Target::Bijection => "bijection",
        Target::Conjecture => "conjecture",
        Target::Composition => "composition",
        Target::Counts => "counts",
        Target::All => "all",
    }
}
