//! Exact enumeration toolkit for (2+2)-free posets counted by size and
//! number of minimal elements.
//!
//! The crate computes the two generating-function forms for these counts and
//! checks them against one another and against brute-force enumerators:
//!
//! * [`matrices`]: upper-triangular matrix classes M_n, I_n and PM_n with
//!   their statistics and enumerators.
//! * [`involution`]: the sign-reversing involution on improper members of M_n.
//! * [`bijection`]: removal and addition maps between PM_{n,k} and I_{n,k}.
//! * [`series`]: truncated bivariate series over big integers and the
//!   product, sum and composition forms.
//! * [`ascent`] and [`posets`]: independent counting oracles.
//! * [`verify`]: the cross-checks tying the above together.

pub mod ascent;
pub mod bijection;
pub mod involution;
pub mod matrices;
pub mod posets;
pub mod reference;
pub mod series;
pub mod verify;

pub use matrices::{MatrixError, MatrixStats, Parity, UpperTriMatrix, WeightPoly};
pub use posets::{Poset, PosetError};
pub use series::{BivariateSeries, UnivariateSeries};
