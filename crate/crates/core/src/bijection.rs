//! Removal (PM_{n,k} → I_{n,k}) and addition (I_{n,k} → PM_{n,k}).
//!
//! Both loops rescan the current matrix after every step, since inserting or
//! deleting a row and column shifts all later indices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::involution::Witness;
use crate::matrices::{enumerate_i, enumerate_pm, MatrixError, UpperTriMatrix};

/// Runs the removal algorithm, returning every intermediate matrix starting
/// with `a` itself and ending with the member of I_n.
pub fn removal_trace(a: &UpperTriMatrix, n: u64) -> Result<Vec<UpperTriMatrix>, MatrixError> {
    if !a.is_member_m(n) || !a.is_proper() {
        return Err(MatrixError::NotProper);
    }
    let mut chain = vec![a.clone()];
    loop {
        let cur = chain.last().expect("chain starts non-empty");
        let stats = cur.stats();
        let Some(i) = stats.rsums.iter().position(|&r| r == 0).map(|r| r + 1) else {
            break;
        };
        if i == 1 {
            return Err(MatrixError::ZeroFirstRow);
        }
        // row i is zero, so column i lives in rows 1..i and fits in column i-1
        let mut merged = cur.clone();
        for r in 1..i {
            let v = cur.get(r, i);
            if v > 0 {
                merged.set(r, i - 1, cur.get(r, i - 1) + v);
            }
        }
        chain.push(merged.delete_row_col(i));
    }
    Ok(chain)
}

pub fn removal(a: &UpperTriMatrix, n: u64) -> Result<UpperTriMatrix, MatrixError> {
    removal_trace(a, n).map(|mut c| c.pop().expect("chain is non-empty"))
}

/// Runs the addition algorithm, returning every intermediate matrix starting
/// with `b` itself and ending with the proper member of M_n.
pub fn addition_trace(b: &UpperTriMatrix, n: u64) -> Result<Vec<UpperTriMatrix>, MatrixError> {
    if !b.is_member_i(n) {
        return Err(MatrixError::NotInI { n });
    }
    let mut chain = vec![b.clone()];
    loop {
        let cur = chain.last().expect("chain starts non-empty");
        let stats = cur.stats();
        let Some(i) = stats.csums.iter().rposition(|&c| c >= 2).map(|c| c + 1) else {
            break;
        };
        let m = stats.maxs[i - 1].expect("column sum >= 2");
        let mut lowered = cur.clone();
        lowered.set(m, i, cur.get(m, i) - 1);
        chain.push(lowered.insert_after(i, m));
    }
    Ok(chain)
}

pub fn addition(b: &UpperTriMatrix, n: u64) -> Result<UpperTriMatrix, MatrixError> {
    addition_trace(b, n).map(|mut c| c.pop().expect("chain is non-empty"))
}

#[derive(Debug, Clone, Serialize)]
pub struct BijectionReport {
    pub n: u64,
    pub proper_count: usize,
    pub i_count: usize,
    /// `|PM_{n,k}|` keyed by `k`.
    pub proper_by_k: BTreeMap<u64, usize>,
    /// `|I_{n,k}|` keyed by `k`.
    pub i_by_k: BTreeMap<u64, usize>,
    pub witnesses: Vec<Witness>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty() && self.proper_by_k == self.i_by_k
    }
}

fn by_k(ms: &[UpperTriMatrix]) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for m in ms {
        *out.entry(m.weight_exponent()).or_insert(0) += 1;
    }
    out
}

/// Checks that removal and addition are mutually inverse on PM_n and I_n,
/// land in the right classes with the expected number of steps, and
/// preserve `rsum_1` and the entry sum.
pub fn verify_bijection(n: u64) -> BijectionReport {
    let pm = enumerate_pm(n);
    let im = enumerate_i(n);
    let mut witnesses = Vec::new();

    for a in &pm {
        match removal_trace(a, n) {
            Ok(chain) => {
                let b = chain.last().expect("chain is non-empty");
                let zero_rows = a.stats().rsums.iter().filter(|&&r| r == 0).count();
                if chain.len() != zero_rows + 1
                    || chain.windows(2).any(|w| w[1].dim() + 1 != w[0].dim())
                {
                    witnesses.push(Witness::new("removal step count", a));
                }
                if !b.is_member_i(n) || b.weight_exponent() != a.weight_exponent() {
                    witnesses.push(Witness::new("removal output not in I_{n,k}", a));
                }
                match addition(b, n) {
                    Ok(back) if back == *a => {}
                    _ => witnesses.push(Witness::new("addition(removal(A)) != A", a)),
                }
            }
            Err(e) => witnesses.push(Witness::new(format!("removal failed: {e}"), a)),
        }
    }
    for b in &im {
        match addition_trace(b, n) {
            Ok(chain) => {
                let a = chain.last().expect("chain is non-empty");
                let excess: u64 = b.stats().csums.iter().map(|c| c - 1).sum();
                if chain.len() as u64 != excess + 1
                    || chain.windows(2).any(|w| w[1].dim() != w[0].dim() + 1)
                {
                    witnesses.push(Witness::new("addition step count", b));
                }
                if !a.is_member_m(n) || !a.is_proper() || a.weight_exponent() != b.weight_exponent()
                {
                    witnesses.push(Witness::new("addition output not in PM_{n,k}", b));
                }
                match removal(a, n) {
                    Ok(back) if back == *b => {}
                    _ => witnesses.push(Witness::new("removal(addition(B)) != B", b)),
                }
            }
            Err(e) => witnesses.push(Witness::new(format!("addition failed: {e}"), b)),
        }
    }

    BijectionReport {
        n,
        proper_count: pm.len(),
        i_count: im.len(),
        proper_by_k: by_k(&pm),
        i_by_k: by_k(&im),
        witnesses,
    }
}
