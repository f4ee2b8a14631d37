//! Cross-checks between the generating functions and the enumerators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::ascent::count_by_zeros;
use crate::involution::signed_weight;
use crate::matrices::{class_weight, enumerate_i, enumerate_pm, ParityFilter};
use crate::posets::{count_free_by_min_with_limit, PosetError};
use crate::series::{a_n_composition, product_form, product_form_pt, sum_form};

/// One coefficient where two computations disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub k: usize,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub max_deg: usize,
    pub terms_compared: usize,
    pub identity_ok: bool,
    pub mismatches: Vec<Mismatch>,
}

/// Compares the product form and the sum form coefficient by coefficient
/// through `t`-degree `max_deg`.
pub fn verify_conjecture(max_deg: usize) -> ConjectureReport {
    let product = product_form(max_deg);
    let sum = sum_form(max_deg);
    let mut keys: Vec<(usize, usize)> = product.terms().map(|(t, z, _)| (t, z)).collect();
    keys.extend(sum.terms().map(|(t, z, _)| (t, z)));
    keys.sort_unstable();
    keys.dedup();
    let mismatches: Vec<Mismatch> = keys
        .iter()
        .filter_map(|&(n, k)| {
            let (l, r) = (product.coeff(n, k), sum.coeff(n, k));
            (l != r).then(|| Mismatch {
                n,
                k,
                left: l.to_string(),
                right: r.to_string(),
            })
        })
        .collect();
    ConjectureReport {
        max_deg,
        terms_compared: keys.len(),
        identity_ok: mismatches.is_empty(),
        mismatches,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CollapseReport {
    pub max_deg: usize,
    pub coefficients: Vec<String>,
    pub collapse_ok: bool,
}

/// `z = 1` specialization of the product form against the univariate
/// product.
pub fn verify_z_one_collapse(max_deg: usize) -> CollapseReport {
    let pt = product_form_pt(max_deg);
    let collapsed = product_form(max_deg).at_z_one();
    CollapseReport {
        max_deg,
        coefficients: pt.coeffs().iter().map(BigInt::to_string).collect(),
        collapse_ok: collapsed == pt,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionReport {
    pub n: u64,
    pub composition_sum: crate::matrices::WeightPoly,
    pub matches_signed_weight: bool,
    pub matches_series_slice: bool,
    pub matches_proper_weight: bool,
}

impl CompositionReport {
    pub fn passed(&self) -> bool {
        self.matches_signed_weight && self.matches_series_slice && self.matches_proper_weight
    }
}

/// Composition-sum `A_n(z)` against the signed weight of M_n, the
/// `t^n` slice of the product form, and `W(PM_n)`.
pub fn verify_composition_sum(n: u64) -> CompositionReport {
    let a_n = a_n_composition(n.max(1)).expect("n >= 1");
    let slice = product_form(n as usize).t_slice(n as usize);
    let proper = class_weight(&enumerate_pm(n), ParityFilter::All);
    CompositionReport {
        n,
        matches_signed_weight: a_n == signed_weight(n),
        matches_series_slice: a_n == slice,
        matches_proper_weight: a_n == proper,
        composition_sum: a_n,
    }
}

/// `(n, k) -> count` from each independent source.
#[derive(Debug, Clone, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub ascent: BTreeMap<usize, u64>,
    pub i_matrices: BTreeMap<usize, u64>,
    pub proper_matrices: BTreeMap<usize, u64>,
    pub series: BTreeMap<usize, u64>,
    /// Absent when the poset oracle was not run for this `n`.
    pub posets: Option<BTreeMap<usize, u64>>,
}

impl CountRow {
    pub fn agree(&self) -> bool {
        self.ascent == self.i_matrices
            && self.ascent == self.proper_matrices
            && self.ascent == self.series
            && self.posets.as_ref().is_none_or(|p| *p == self.ascent)
    }
}

fn by_rsum1(ms: &[crate::matrices::UpperTriMatrix]) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for m in ms {
        *out.entry(m.weight_exponent() as usize).or_insert(0) += 1;
    }
    out
}

/// Counts by `(n, k)` from ascent sequences, I_n, PM_n and the product form
/// for `n = 0..=n_max`, plus unlabeled (2+2)-free posets for `n <= poset_max`.
pub fn count_agreement(
    n_max: usize,
    poset_max: usize,
    poset_limit: usize,
) -> Result<Vec<CountRow>, PosetError> {
    let series = product_form(n_max);
    (0..=n_max)
        .map(|n| {
            let series_row: BTreeMap<usize, u64> = series
                .t_slice(n)
                .terms()
                .map(|(k, c)| {
                    let c = u64::try_from(c).expect("coefficient is a small non-negative count");
                    (k as usize, c)
                })
                .collect();
            let posets = if n <= poset_max {
                Some(count_free_by_min_with_limit(n, poset_limit)?)
            } else {
                None
            };
            Ok(CountRow {
                n,
                ascent: count_by_zeros(n),
                i_matrices: by_rsum1(&enumerate_i(n as u64)),
                proper_matrices: by_rsum1(&enumerate_pm(n as u64)),
                series: series_row,
                posets,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjecture_small() {
        let r = verify_conjecture(8);
        assert!(r.identity_ok, "{:?}", r.mismatches);
        assert!(r.terms_compared > 0);
    }

    #[test]
    fn collapse_small() {
        let r = verify_z_one_collapse(7);
        assert!(r.collapse_ok);
        assert_eq!(
            r.coefficients,
            ["1", "1", "2", "5", "15", "53", "217", "1014"]
        );
    }

    #[test]
    fn composition_sum_checks() {
        for n in 1..=6 {
            assert!(verify_composition_sum(n).passed(), "n={n}");
        }
    }

    #[test]
    fn counts_agree_small() {
        // independently tabulated from the ascent-sequence generator
        let expected_n4 = BTreeMap::from([(1, 5), (2, 6), (3, 3), (4, 1)]);
        let rows = count_agreement(5, 5, 7).unwrap();
        assert!(rows.iter().all(CountRow::agree));
        assert_eq!(rows[4].ascent, expected_n4);
        assert_eq!(rows[0].ascent, BTreeMap::from([(0, 1)]));
    }
}
