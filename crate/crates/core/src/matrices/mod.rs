//! Upper-triangular matrices with non-negative integer entries.
//!
//! All row and column indices in the public API are 1-based. A matrix of
//! dimension `d` stores only its upper triangle, column by column: column `j`
//! occupies `j` consecutive slots holding rows `1..=j`. The derived ordering
//! (dimension first, then the column-major entry list) is the enumeration
//! order used throughout the crate.

mod enumerate;
mod text;
mod weight;

pub use enumerate::{enumerate_i, enumerate_m, enumerate_pm};
pub use weight::{class_weight, ParityFilter, WeightPoly};

use std::fmt;

use thiserror::Error;

/// Errors raised by matrix construction, parsing and the class-restricted
/// operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("position ({row}, {col}) lies below the diagonal")]
    BelowDiagonal { row: usize, col: usize },
    #[error("position ({row}, {col}) is outside a {dim}x{dim} matrix")]
    OutOfRange { row: usize, col: usize, dim: usize },
    #[error("position ({row}, {col}) given more than once")]
    DuplicatePosition { row: usize, col: usize },
    #[error("negative value {value} at position ({row}, {col})")]
    NegativeValue { row: usize, col: usize, value: i64 },
    #[error("column index {col} out of range for dimension {dim}")]
    ColumnOutOfRange { col: usize, dim: usize },
    #[error("no improper column")]
    NoImproperColumn,
    #[error("matrix is not a member of M_{n}")]
    NotInM { n: u64 },
    #[error("matrix is not a member of I_{n}")]
    NotInI { n: u64 },
    #[error("matrix is not proper")]
    NotProper,
    #[error("phi undefined on proper matrices")]
    PhiOnProper,
    #[error("zero first row in the removal algorithm input")]
    ZeroFirstRow,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Parity of `n - dim(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Square upper-triangular matrix of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpperTriMatrix {
    dim: usize,
    // column-major upper triangle, length dim * (dim + 1) / 2
    entries: Vec<u32>,
}

#[inline]
fn slot(row: usize, col: usize) -> usize {
    (col - 1) * col / 2 + (row - 1)
}

impl UpperTriMatrix {
    /// The unique matrix of dimension zero.
    pub fn empty() -> Self {
        Self::zeros(0)
    }

    pub fn zeros(dim: usize) -> Self {
        UpperTriMatrix {
            dim,
            entries: vec![0; dim * (dim + 1) / 2],
        }
    }

    /// Builds a matrix from sparse `(row, col, value)` triples; unlisted
    /// positions are zero.
    pub fn new(dim: usize, entries: &[(usize, usize, i64)]) -> Result<Self, MatrixError> {
        let mut m = Self::zeros(dim);
        let mut seen = vec![false; m.entries.len()];
        for &(row, col, value) in entries {
            if row == 0 || col == 0 || row > dim || col > dim {
                return Err(MatrixError::OutOfRange { row, col, dim });
            }
            if row > col {
                return Err(MatrixError::BelowDiagonal { row, col });
            }
            if value < 0 {
                return Err(MatrixError::NegativeValue { row, col, value });
            }
            let s = slot(row, col);
            if seen[s] {
                return Err(MatrixError::DuplicatePosition { row, col });
            }
            seen[s] = true;
            m.entries[s] = u32::try_from(value).map_err(|_| MatrixError::Parse {
                line: 0,
                message: format!("value {value} at ({row}, {col}) exceeds u32"),
            })?;
        }
        Ok(m)
    }

    /// Builds a matrix from dense rows. Entries below the diagonal must be 0.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(MatrixError::Parse {
                    line: i + 1,
                    message: format!("expected {dim} entries, found {}", row.len()),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if j < i {
                    if v != 0 {
                        return Err(MatrixError::BelowDiagonal {
                            row: i + 1,
                            col: j + 1,
                        });
                    }
                } else {
                    m.entries[slot(i + 1, j + 1)] = v;
                }
            }
        }
        Ok(m)
    }

    /// Builds a `dim`-dimensional matrix whose entry `(i, j)`, `i <= j`, is
    /// `f(i, j)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut entries = Vec::with_capacity(dim * (dim + 1) / 2);
        for col in 1..=dim {
            for row in 1..=col {
                entries.push(f(row, col));
            }
        }
        UpperTriMatrix { dim, entries }
    }

    pub(crate) fn from_column_major(dim: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), dim * (dim + 1) / 2);
        UpperTriMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at `(row, col)`; zero below the diagonal.
    ///
    /// Panics if either index is outside `1..=dim`.
    pub fn get(&self, row: usize, col: usize) -> u32 {
        assert!(
            (1..=self.dim).contains(&row) && (1..=self.dim).contains(&col),
            "index ({row}, {col}) out of range for dimension {}",
            self.dim
        );
        if row > col {
            0
        } else {
            self.entries[slot(row, col)]
        }
    }

    /// Column `col` restricted to rows `1..=col`.
    pub fn column(&self, col: usize) -> &[u32] {
        let start = slot(1, col);
        &self.entries[start..start + col]
    }

    /// Upper-triangle entries in column-major order.
    pub fn column_major(&self) -> &[u32] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&v| u64::from(v)).sum()
    }

    pub fn dense_rows(&self) -> Vec<Vec<u32>> {
        (1..=self.dim)
            .map(|i| (1..=self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn row_sum(&self, row: usize) -> u64 {
        (row..=self.dim).map(|j| u64::from(self.get(row, j))).sum()
    }

    pub fn col_sum(&self, col: usize) -> u64 {
        self.column(col).iter().map(|&v| u64::from(v)).sum()
    }

    /// Least row holding a nonzero entry of column `col`.
    pub fn col_min(&self, col: usize) -> Option<usize> {
        self.column(col).iter().position(|&v| v > 0).map(|r| r + 1)
    }

    /// Greatest row holding a nonzero entry of column `col`.
    pub fn col_max(&self, col: usize) -> Option<usize> {
        self.column(col).iter().rposition(|&v| v > 0).map(|r| r + 1)
    }

    pub fn stats(&self) -> MatrixStats {
        let d = self.dim;
        let mut stats = MatrixStats {
            rsums: vec![0; d],
            csums: vec![0; d],
            mins: vec![None; d],
            maxs: vec![None; d],
        };
        for col in 1..=d {
            for (r, &v) in self.column(col).iter().enumerate() {
                if v == 0 {
                    continue;
                }
                stats.rsums[r] += u64::from(v);
                stats.csums[col - 1] += u64::from(v);
                if stats.mins[col - 1].is_none() {
                    stats.mins[col - 1] = Some(r + 1);
                }
                stats.maxs[col - 1] = Some(r + 1);
            }
        }
        stats
    }

    /// `rsum_1(A)`, the exponent of the weight `z^{rsum_1(A)}`. Zero for the
    /// empty matrix.
    pub fn weight_exponent(&self) -> u64 {
        if self.dim == 0 {
            0
        } else {
            self.row_sum(1)
        }
    }

    /// Parity of `n - dim(A)`.
    pub fn parity(&self, n: u64) -> Parity {
        let diff = n.abs_diff(self.dim as u64);
        if diff.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Whether `self` lies in M_n: 0/1 entries summing to `n`, no zero column.
    pub fn is_member_m(&self, n: u64) -> bool {
        self.entries.iter().all(|&v| v <= 1)
            && self.total() == n
            && (1..=self.dim).all(|j| self.col_sum(j) >= 1)
    }

    /// Whether `self` lies in I_n: entries summing to `n`, no zero row and
    /// no zero column.
    pub fn is_member_i(&self, n: u64) -> bool {
        let s = self.stats();
        self.total() == n && s.rsums.iter().all(|&r| r >= 1) && s.csums.iter().all(|&c| c >= 1)
    }

    /// Whether `self` lies in A_n: any upper-triangular matrix summing to `n`.
    pub fn is_member_a(&self, n: u64) -> bool {
        self.total() == n
    }

    /// Improperness of column `col`, evaluated against precomputed stats.
    fn improper_at(stats: &MatrixStats, col: usize) -> bool {
        let c = col - 1;
        if stats.csums[c] >= 2 {
            return true;
        }
        col > 1
            && stats.csums[c] == 1
            && stats.rsums[c] == 0
            && match (stats.mins[c], stats.mins[c - 1]) {
                (Some(here), Some(prev)) => here < prev,
                _ => false,
            }
    }

    /// Whether column `col` is improper: column sum at least 2, or (for
    /// `col > 1`) column sum 1 with a zero row `col` and a first nonzero row
    /// strictly above that of column `col - 1`.
    pub fn is_improper_column(&self, col: usize) -> Result<bool, MatrixError> {
        if col == 0 || col > self.dim {
            return Err(MatrixError::ColumnOutOfRange { col, dim: self.dim });
        }
        Ok(Self::improper_at(&self.stats(), col))
    }

    /// All improper columns, ascending.
    pub fn improper_columns(&self) -> Vec<usize> {
        let stats = self.stats();
        (1..=self.dim)
            .filter(|&c| Self::improper_at(&stats, c))
            .collect()
    }

    pub fn is_proper(&self) -> bool {
        let stats = self.stats();
        !(1..=self.dim).any(|c| Self::improper_at(&stats, c))
    }

    /// Largest improper column.
    pub fn index_improper(&self) -> Result<usize, MatrixError> {
        let stats = self.stats();
        (1..=self.dim)
            .rev()
            .find(|&c| Self::improper_at(&stats, c))
            .ok_or(MatrixError::NoImproperColumn)
    }

    /// Returns `self` with a zero row inserted after row `after` and a new
    /// column inserted after column `after` carrying a single 1 at row
    /// `one_at` (`one_at <= after + 1` keeps the result upper-triangular).
    pub(crate) fn insert_after(&self, after: usize, one_at: usize) -> Self {
        debug_assert!(after <= self.dim && one_at <= after);
        let shift = |k: usize| if k > after + 1 { k - 1 } else { k };
        Self::from_fn(self.dim + 1, |i, j| {
            if j == after + 1 {
                u32::from(i == one_at)
            } else if i == after + 1 {
                0
            } else {
                self.get(shift(i), shift(j))
            }
        })
    }

    /// Returns `self` with row `k` and column `k` deleted.
    pub(crate) fn delete_row_col(&self, k: usize) -> Self {
        debug_assert!((1..=self.dim).contains(&k));
        let up = |x: usize| if x >= k { x + 1 } else { x };
        Self::from_fn(self.dim - 1, |i, j| self.get(up(i), up(j)))
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: u32) {
        debug_assert!(row <= col && col <= self.dim);
        self.entries[slot(row, col)] = value;
    }
}

impl fmt::Debug for UpperTriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UpperTriMatrix{:?}", self.dense_rows())
    }
}

/// Row sums, column sums and first/last nonzero rows of each column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixStats {
    pub rsums: Vec<u64>,
    pub csums: Vec<u64>,
    /// `mins[j-1]` is the least row with a nonzero entry in column `j`.
    pub mins: Vec<Option<usize>>,
    /// `maxs[j-1]` is the greatest row with a nonzero entry in column `j`.
    pub maxs: Vec<Option<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference;

    #[test]
    fn construct_empty_and_identity() {
        let e = UpperTriMatrix::new(0, &[]).unwrap();
        assert_eq!(e, UpperTriMatrix::empty());
        assert_eq!(e.dim(), 0);
        let id = UpperTriMatrix::new(2, &[(1, 1, 1), (2, 2, 1)]).unwrap();
        assert_eq!(id.dense_rows(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn construct_example1_from_triples() {
        let triples: Vec<(usize, usize, i64)> = reference::improper_m8()
            .dense_rows()
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(move |&(j, _)| j >= i)
                    .map(move |(j, &v)| (i + 1, j + 1, i64::from(v)))
            })
            .filter(|t| t.2 != 0)
            .collect();
        let m = UpperTriMatrix::new(6, &triples).unwrap();
        assert_eq!(m, reference::improper_m8());
        assert_eq!(m.total(), 8);
    }

    #[test]
    fn construction_errors_name_position() {
        assert_eq!(
            UpperTriMatrix::new(3, &[(2, 1, 1)]),
            Err(MatrixError::BelowDiagonal { row: 2, col: 1 })
        );
        assert_eq!(
            UpperTriMatrix::new(2, &[(1, 3, 1)]),
            Err(MatrixError::OutOfRange {
                row: 1,
                col: 3,
                dim: 2
            })
        );
        assert_eq!(
            UpperTriMatrix::new(2, &[(0, 1, 1)]),
            Err(MatrixError::OutOfRange {
                row: 0,
                col: 1,
                dim: 2
            })
        );
        assert_eq!(
            UpperTriMatrix::new(2, &[(1, 2, 1), (1, 2, 0)]),
            Err(MatrixError::DuplicatePosition { row: 1, col: 2 })
        );
        assert_eq!(
            UpperTriMatrix::new(2, &[(1, 2, -1)]),
            Err(MatrixError::NegativeValue {
                row: 1,
                col: 2,
                value: -1
            })
        );
        assert!(UpperTriMatrix::from_rows(&[[0, 0], [1, 0]]).is_err());
    }

    #[test]
    fn example1_stats() {
        let s = reference::improper_m8().stats();
        assert_eq!(
            s.mins,
            vec![Some(1), Some(2), Some(1), Some(2), Some(2), Some(1)]
        );
        assert_eq!(s.rsums[0], 3);
        assert_eq!(s.csums, vec![1, 1, 1, 1, 1, 3]);
        assert_eq!(s.maxs[5], Some(6));
    }

    #[test]
    fn empty_stats() {
        let s = UpperTriMatrix::empty().stats();
        assert!(s.rsums.is_empty() && s.csums.is_empty());
        assert!(s.mins.is_empty() && s.maxs.is_empty());
    }

    #[test]
    fn membership_m() {
        assert!(reference::improper_m8().is_member_m(8));
        assert!(!reference::improper_m8().is_member_m(7));
        assert!(UpperTriMatrix::empty().is_member_m(0));
        let two = UpperTriMatrix::from_rows(&[[2]]).unwrap();
        assert!(!two.is_member_m(2));
    }

    #[test]
    fn membership_i() {
        let two = UpperTriMatrix::from_rows(&[[2]]).unwrap();
        assert!(two.is_member_i(2));
        assert!(reference::removal_target().is_member_i(6));
        let zero_row = UpperTriMatrix::from_rows(&[[1, 1], [0, 0]]).unwrap();
        assert!(!zero_row.is_member_i(2));
        assert!(zero_row.is_member_a(2));
    }

    #[test]
    fn exhaustive_dim1_membership_i() {
        // on dimension 1 the only I_n member is [n]
        for n in 0..5u32 {
            for v in 0..5u32 {
                let m = UpperTriMatrix::from_rows(&[[v]]).unwrap();
                assert_eq!(m.is_member_i(u64::from(n)), v == n && n > 0);
            }
        }
    }

    #[test]
    fn example1_improper_columns() {
        let a = reference::improper_m8();
        assert!(a.is_improper_column(3).unwrap());
        assert!(a.is_improper_column(6).unwrap());
        assert!(!a.is_improper_column(1).unwrap());
        assert_eq!(a.improper_columns(), vec![3, 6]);
        assert_eq!(a.index_improper(), Ok(6));
        assert!(!a.is_proper());
        assert_eq!(
            a.is_improper_column(7),
            Err(MatrixError::ColumnOutOfRange { col: 7, dim: 6 })
        );
        assert!(a.is_improper_column(0).is_err());
    }

    #[test]
    fn proper_examples() {
        assert!(reference::removal_source().is_proper());
        assert!(UpperTriMatrix::from_rows(&[[1]]).unwrap().is_proper());
        assert_eq!(
            reference::removal_source().index_improper(),
            Err(MatrixError::NoImproperColumn)
        );
    }

    #[test]
    fn index_of_involution_examples() {
        assert_eq!(reference::phi_case1().index_improper(), Ok(3));
        assert_eq!(reference::phi_case2().index_improper(), Ok(4));
    }

    #[test]
    fn weight_and_parity() {
        let a = reference::improper_m8();
        assert_eq!(a.weight_exponent(), 3);
        assert_eq!(a.parity(8), Parity::Even);
        assert_eq!(reference::phi_case2().parity(6), Parity::Odd);
        assert_eq!(UpperTriMatrix::empty().weight_exponent(), 0);
        assert_eq!(UpperTriMatrix::empty().parity(0), Parity::Even);
    }

    #[test]
    fn insert_and_delete_are_inverse() {
        let a = reference::improper_m8();
        for after in 1..=a.dim() {
            for one_at in 1..=after {
                let b = a.insert_after(after, one_at);
                assert_eq!(b.dim(), 7);
                assert_eq!(b.row_sum(after + 1), 0);
                assert_eq!(b.column(after + 1).iter().sum::<u32>(), 1);
                assert_eq!(b.get(one_at, after + 1), 1);
                assert_eq!(b.delete_row_col(after + 1), a);
            }
        }
    }
}
