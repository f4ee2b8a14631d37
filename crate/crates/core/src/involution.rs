//! The parity-reversing, weight-preserving involution on the improper
//! members of M_n, and an exhaustive checker for it.

use std::collections::HashSet;

use serde::Serialize;

use crate::matrices::{
    class_weight, enumerate_m, MatrixError, ParityFilter, UpperTriMatrix, WeightPoly,
};

/// Which branch of the involution applies at the index column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PhiCase {
    /// Index column has sum at least 2; the image gains a row and column.
    Split,
    /// Index column has sum 1 over a zero row; the image loses a row and
    /// column.
    Merge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiStep {
    pub index: usize,
    pub case: PhiCase,
    pub image: UpperTriMatrix,
}

/// Applies the involution to an improper `a` in M_n, reporting the index
/// column and the branch taken.
pub fn phi_step(a: &UpperTriMatrix, n: u64) -> Result<PhiStep, MatrixError> {
    if !a.is_member_m(n) {
        return Err(MatrixError::NotInM { n });
    }
    let i = match a.index_improper() {
        Ok(i) => i,
        Err(MatrixError::NoImproperColumn) => return Err(MatrixError::PhiOnProper),
        Err(e) => return Err(e),
    };
    let m = a.col_min(i).expect("members of M_n have no zero column");
    if a.col_sum(i) >= 2 {
        let mut cleared = a.clone();
        cleared.set(m, i, 0);
        Ok(PhiStep {
            index: i,
            case: PhiCase::Split,
            image: cleared.insert_after(i, m),
        })
    } else {
        // index_improper guarantees i > 1, a zero row i and min_i < min_{i-1}
        let mut moved = a.clone();
        moved.set(m, i - 1, 1);
        Ok(PhiStep {
            index: i,
            case: PhiCase::Merge,
            image: moved.delete_row_col(i),
        })
    }
}

/// The involution itself.
pub fn phi(a: &UpperTriMatrix, n: u64) -> Result<UpperTriMatrix, MatrixError> {
    phi_step(a, n).map(|s| s.image)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub reason: String,
    pub matrix: String,
}

impl Witness {
    pub(crate) fn new(reason: impl Into<String>, matrix: &UpperTriMatrix) -> Self {
        Witness {
            reason: reason.into(),
            matrix: matrix.to_text(),
        }
    }
}

/// Outcome of [`verify_involution`].
#[derive(Debug, Clone, Serialize)]
pub struct InvolutionReport {
    pub n: u64,
    pub improper_count: usize,
    pub case1_count: usize,
    pub case2_count: usize,
    pub identity_ok: bool,
    pub witnesses: Vec<Witness>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.identity_ok && self.witnesses.is_empty()
    }
}

/// Every orbit `{A, Φ(A)}` of the improper members of M_n, listed once
/// with the split-side matrix first.
pub fn orbits(n: u64) -> Vec<(UpperTriMatrix, UpperTriMatrix)> {
    enumerate_m(n)
        .into_iter()
        .filter(|a| !a.is_proper())
        .filter_map(|a| match phi_step(&a, n) {
            Ok(PhiStep {
                case: PhiCase::Split,
                image,
                ..
            }) => Some((a, image)),
            _ => None,
        })
        .collect()
}

/// Checks, over every improper member of M_n, that Φ is a fixed-point-free
/// involution on the improper set that flips parity, preserves the entry
/// sum and `rsum_1`, and moves the index column by one; then checks
/// `W(EM_n) - W(OM_n) = W(PM_n)`.
pub fn verify_involution(n: u64) -> InvolutionReport {
    let all = enumerate_m(n);
    let (proper, improper): (Vec<_>, Vec<_>) = all.iter().cloned().partition(|a| a.is_proper());
    let improper_set: HashSet<&UpperTriMatrix> = improper.iter().collect();

    let mut witnesses = Vec::new();
    let mut split = 0;
    let mut merge = 0;
    for a in &improper {
        let step = match phi_step(a, n) {
            Ok(s) => s,
            Err(e) => {
                witnesses.push(Witness::new(format!("phi failed: {e}"), a));
                continue;
            }
        };
        let b = &step.image;
        match step.case {
            PhiCase::Split => split += 1,
            PhiCase::Merge => merge += 1,
        }
        if !improper_set.contains(b) {
            witnesses.push(Witness::new("image not an improper member of M_n", a));
            continue;
        }
        if b == a {
            witnesses.push(Witness::new("fixed point", a));
        }
        if a.parity(n) == b.parity(n) || a.dim().abs_diff(b.dim()) != 1 {
            witnesses.push(Witness::new("parity not reversed", a));
        }
        if a.weight_exponent() != b.weight_exponent() || b.total() != n {
            witnesses.push(Witness::new("weight or entry sum not preserved", a));
        }
        let expected_index = match step.case {
            PhiCase::Split => step.index + 1,
            PhiCase::Merge => step.index - 1,
        };
        match phi_step(b, n) {
            Ok(back) => {
                if back.image != *a {
                    witnesses.push(Witness::new("phi(phi(A)) != A", a));
                }
                if back.index != expected_index || back.case == step.case {
                    witnesses.push(Witness::new("index of image not shifted by one", a));
                }
            }
            Err(e) => witnesses.push(Witness::new(format!("phi failed on image: {e}"), a)),
        }
        if step.case == PhiCase::Split && b.col_sum(step.index) == 0 {
            witnesses.push(Witness::new("split left an empty column", a));
        }
    }
    if split != merge {
        witnesses.push(Witness::new(
            format!("pairing unbalanced: {split} split vs {merge} merge"),
            &UpperTriMatrix::empty(),
        ));
    }

    let signed = class_weight(&all, ParityFilter::Signed);
    let identity_ok = signed == class_weight(&proper, ParityFilter::All);
    InvolutionReport {
        n,
        improper_count: improper.len(),
        case1_count: split,
        case2_count: merge,
        identity_ok,
        witnesses,
    }
}

/// `W(EM_n) - W(OM_n)`, computed by enumeration.
pub fn signed_weight(n: u64) -> WeightPoly {
    class_weight(&enumerate_m(n), ParityFilter::Signed)
}
