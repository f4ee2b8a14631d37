//! Exhaustive enumeration of M_n, I_n and PM_n.
//!
//! For each dimension `d` the columns are filled left to right; column `j`
//! receives a vector of `j` entries whose sum is at least 1 and leaves at
//! least one unit for every later column. Entries are tried in increasing
//! order, so each dimension is produced in lexicographic column-major order.

use super::UpperTriMatrix;

struct Filler<'a, F: FnMut(&[u32])> {
    dim: usize,
    binary: bool,
    buf: Vec<u32>,
    emit: &'a mut F,
}

impl<F: FnMut(&[u32])> Filler<'_, F> {
    // `remaining` is the unit budget not yet placed in columns before `col`.
    fn column(&mut self, col: usize, row: usize, col_sum: u64, remaining: u64) {
        let later = (self.dim - col) as u64;
        if row > col {
            let ok = col_sum >= 1
                && if col == self.dim {
                    col_sum == remaining
                } else {
                    remaining - col_sum >= later
                };
            if !ok {
                return;
            }
            if col == self.dim {
                (self.emit)(&self.buf);
            } else {
                self.column(col + 1, 1, 0, remaining - col_sum);
            }
            return;
        }
        let room = remaining - later - col_sum;
        let cap = if self.binary { room.min(1) } else { room };
        for v in 0..=cap {
            self.buf.push(v as u32);
            self.column(col, row + 1, col_sum + v, remaining);
            self.buf.pop();
        }
    }
}

/// Calls `emit` on the column-major entry list of every upper-triangular
/// matrix with entry sum `n` and no zero column (0/1 entries when `binary`).
fn for_each_columnwise(n: u64, binary: bool, mut emit: impl FnMut(usize, &[u32])) {
    if n == 0 {
        emit(0, &[]);
        return;
    }
    for dim in 1..=n as usize {
        let mut sink = |entries: &[u32]| emit(dim, entries);
        let mut filler = Filler {
            dim,
            binary,
            buf: Vec::with_capacity(dim * (dim + 1) / 2),
            emit: &mut sink,
        };
        filler.column(1, 1, 0, n);
    }
}

/// Every member of M_n, by ascending dimension then column-major order.
pub fn enumerate_m(n: u64) -> Vec<UpperTriMatrix> {
    let mut out = Vec::new();
    for_each_columnwise(n, true, |dim, e| {
        out.push(UpperTriMatrix::from_column_major(dim, e.to_vec()))
    });
    out
}

/// Every member of I_n, by ascending dimension then column-major order.
pub fn enumerate_i(n: u64) -> Vec<UpperTriMatrix> {
    let mut out = Vec::new();
    let mut row_sums = Vec::new();
    for_each_columnwise(n, false, |dim, e| {
        row_sums.clear();
        row_sums.resize(dim, 0u64);
        let mut k = 0;
        for col in 0..dim {
            for rs in row_sums.iter_mut().take(col + 1) {
                *rs += u64::from(e[k]);
                k += 1;
            }
        }
        if row_sums.iter().all(|&r| r > 0) {
            out.push(UpperTriMatrix::from_column_major(dim, e.to_vec()));
        }
    });
    out
}

/// Every proper member of M_n, in the order of [`enumerate_m`].
pub fn enumerate_pm(n: u64) -> Vec<UpperTriMatrix> {
    enumerate_m(n)
        .into_iter()
        .filter(|a| a.is_proper())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, HashSet};

    // Independent brute force: every 0/1 (or bounded) upper-triangular
    // matrix of each dimension, filtered by the membership predicates.
    fn brute(
        n: u64,
        max_entry: u32,
        keep: impl Fn(&UpperTriMatrix) -> bool,
    ) -> Vec<UpperTriMatrix> {
        let mut out = Vec::new();
        let lim = if n == 0 { 0 } else { n as usize };
        for dim in 0..=lim {
            let len = dim * (dim + 1) / 2;
            let base = u64::from(max_entry) + 1;
            let total = base.pow(len as u32);
            for code in 0..total {
                let mut c = code;
                let entries: Vec<u32> = (0..len)
                    .map(|_| {
                        let v = (c % base) as u32;
                        c /= base;
                        v
                    })
                    .collect();
                let m = UpperTriMatrix::from_column_major(dim, entries);
                if keep(&m) {
                    out.push(m);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn m_matches_brute_force() {
        for n in 0..=4 {
            assert_eq!(enumerate_m(n), brute(n, 1, |m| m.is_member_m(n)), "n={n}");
        }
    }

    #[test]
    fn i_matches_brute_force() {
        for n in 0..=3 {
            assert_eq!(
                enumerate_i(n),
                brute(n, n as u32, |m| m.is_member_i(n)),
                "n={n}"
            );
        }
    }

    #[test]
    fn i_of_two() {
        let got = enumerate_i(2);
        assert_eq!(
            got,
            vec![
                UpperTriMatrix::from_rows(&[[2]]).unwrap(),
                UpperTriMatrix::from_rows(&[[1, 0], [0, 1]]).unwrap(),
            ]
        );
    }

    #[test]
    fn m_of_one() {
        assert_eq!(
            enumerate_m(1),
            vec![UpperTriMatrix::from_rows(&[[1]]).unwrap()]
        );
    }

    #[test]
    fn empty_class_at_zero() {
        for v in [enumerate_m(0), enumerate_i(0), enumerate_pm(0)] {
            assert_eq!(v, vec![UpperTriMatrix::empty()]);
        }
    }

    #[test]
    fn pm_of_three_by_weight() {
        let mut by_k = BTreeMap::new();
        for a in enumerate_pm(3) {
            *by_k.entry(a.weight_exponent()).or_insert(0) += 1;
        }
        assert_eq!(by_k, BTreeMap::from([(1, 2), (2, 2), (3, 1)]));
    }

    #[test]
    fn sorted_and_duplicate_free() {
        for n in 0..=6 {
            for v in [enumerate_m(n), enumerate_i(n)] {
                assert!(v.windows(2).all(|w| w[0] < w[1]), "n={n}");
                let set: HashSet<_> = v.iter().collect();
                assert_eq!(set.len(), v.len());
            }
        }
    }

    #[test]
    fn stable_across_runs() {
        assert_eq!(enumerate_m(5), enumerate_m(5));
        assert_eq!(enumerate_i(5), enumerate_i(5));
    }

    #[test]
    fn m_members_have_expected_shape() {
        for n in 0..=7 {
            for a in enumerate_m(n) {
                assert_eq!(a.total(), n);
                assert!(a.dim() as u64 <= n);
                let s = a.stats();
                assert!(s.csums.iter().all(|&c| c >= 1));
                assert_eq!(s.rsums.iter().sum::<u64>(), n);
                assert_eq!(s.csums.iter().sum::<u64>(), n);
            }
        }
    }

    #[test]
    fn proper_members_have_unit_columns_and_even_parity() {
        for n in 0..=7 {
            for a in enumerate_pm(n) {
                let s = a.stats();
                assert!(s.csums.iter().all(|&c| c == 1));
                assert_eq!(a.dim() as u64, n);
                assert_eq!(a.parity(n), super::super::Parity::Even);
            }
        }
    }

    #[test]
    fn properness_matches_unit_column_characterization() {
        for n in 1..=7 {
            for a in enumerate_m(n) {
                let s = a.stats();
                let unit_columns = s.csums.iter().all(|&c| c == 1);
                let zero_rows_ok =
                    (2..=a.dim()).all(|i| s.rsums[i - 1] != 0 || s.mins[i - 1] >= s.mins[i - 2]);
                assert_eq!(a.is_proper(), unit_columns && zero_rows_ok, "{a:?}");
            }
        }
    }
}
