use std::io::Write;

use serde_json::{json, Value};

use fishburn::bijection::{addition_trace, removal_trace};
use fishburn::involution::phi_step;
use fishburn::reference;
use fishburn::UpperTriMatrix;

use crate::{io_err, Algorithm, CliError, CliResult};

struct Outcome {
    name: &'static str,
    ok: bool,
    detail: String,
    chain: Vec<UpperTriMatrix>,
}

fn improper_m8() -> Outcome {
    let a = reference::improper_m8();
    let mins: Vec<usize> = a.stats().mins.iter().flatten().copied().collect();
    let cols = a.improper_columns();
    let index = a.index_improper().ok();
    let ok = a.is_member_m(8)
        && mins == reference::IMPROPER_M8_MINS
        && cols == reference::IMPROPER_M8_COLUMNS
        && index == Some(reference::IMPROPER_M8_INDEX);
    Outcome {
        name: "improper_m8",
        ok,
        detail: format!("mins {mins:?}, improper columns {cols:?}, index {index:?}"),
        chain: vec![a],
    }
}

fn involution_orbit() -> Outcome {
    let a = reference::phi_case1();
    let b = reference::phi_case2();
    let fwd = phi_step(&a, 6);
    let back = phi_step(&b, 6);
    let ok = matches!((&fwd, &back), (Ok(f), Ok(g))
        if f.image.to_text() == reference::PHI_CASE2
            && g.image.to_text() == reference::PHI_CASE1
            && f.index == 3 && g.index == 4);
    let detail = match (&fwd, &back) {
        (Ok(f), Ok(g)) => format!(
            "index(A)={}, index(B)={}, phi(A)=B: {}, phi(B)=A: {}",
            f.index,
            g.index,
            f.image == b,
            g.image == a
        ),
        (Err(e), _) | (_, Err(e)) => format!("phi failed: {e}"),
    };
    Outcome {
        name: "involution_orbit",
        ok,
        detail,
        chain: vec![a, b],
    }
}

fn removal_chain() -> Outcome {
    let source = reference::removal_source();
    match removal_trace(&source, 6) {
        Ok(chain) => {
            let text: Vec<String> = chain.iter().map(UpperTriMatrix::to_text).collect();
            let target = chain.last().expect("chain is non-empty");
            let inverted = addition_trace(target, 6)
                .map(|back| back.iter().rev().eq(chain.iter()))
                .unwrap_or(false);
            Outcome {
                name: "removal_chain",
                ok: text.join("\n") == reference::REMOVAL_CHAIN && inverted,
                detail: format!(
                    "{} removal steps to dim {}, addition inverts: {inverted}",
                    chain.len() - 1,
                    target.dim()
                ),
                chain,
            }
        }
        Err(e) => Outcome {
            name: "removal_chain",
            ok: false,
            detail: format!("removal failed: {e}"),
            chain: vec![source],
        },
    }
}

fn write_chain(out: &mut impl Write, label: &str, chain: &[UpperTriMatrix]) -> std::io::Result<()> {
    for (i, m) in chain.iter().enumerate() {
        writeln!(out, "# {label} step {i}")?;
        write!(out, "{m}")?;
        writeln!(out)?;
    }
    Ok(())
}

/// Rebuilds the three reference examples and compares against the embedded
/// expected outputs.
pub fn run(out: &mut impl Write, trace: bool) -> CliResult<()> {
    let outcomes = [improper_m8(), involution_orbit(), removal_chain()];
    let mut err = std::io::stderr().lock();
    for o in &outcomes {
        let _ = writeln!(
            err,
            "{}: {} ({})",
            o.name,
            if o.ok { "ok" } else { "MISMATCH" },
            o.detail
        );
        if !trace {
            let _ = write_chain(&mut err, o.name, &o.chain);
        }
    }
    if trace {
        for o in &outcomes {
            write_chain(out, o.name, &o.chain).map_err(io_err)?;
        }
    } else {
        let v: Vec<Value> = outcomes
            .iter()
            .map(|o| json!({"name": o.name, "ok": o.ok, "detail": o.detail}))
            .collect();
        writeln!(out, "{}", json!({"examples": v})).map_err(io_err)?;
    }
    let bad: Vec<&str> = outcomes.iter().filter(|o| !o.ok).map(|o| o.name).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "example mismatch: {}",
            bad.join(", ")
        )))
    }
}

/// Applies `algorithm` to the matrix in `text`, with `n` taken as its entry
/// sum, and prints every intermediate matrix.
pub fn trace(
    out: &mut impl Write,
    algorithm: Algorithm,
    text: &str,
    final_only: bool,
) -> CliResult<()> {
    let m = UpperTriMatrix::parse_text(text).map_err(|e| CliError::Usage(e.to_string()))?;
    let n = m.total();
    let (label, chain) = match algorithm {
        Algorithm::Removal => ("removal", removal_trace(&m, n)),
        Algorithm::Addition => ("addition", addition_trace(&m, n)),
        Algorithm::Phi => ("phi", phi_step(&m, n).map(|s| vec![m.clone(), s.image])),
    };
    let chain = chain.map_err(|e| CliError::Usage(e.to_string()))?;
    eprintln!(
        "{label}: {} step(s), n={n}, rsum_1={}",
        chain.len() - 1,
        m.weight_exponent()
    );
    let shown = if final_only {
        &chain[chain.len() - 1..]
    } else {
        &chain[..]
    };
    write_chain(out, label, shown).map_err(io_err)
}
