//! Worked reference matrices, stored in the matrix text format.
//!
//! * [`improper_m8`]: a member of M_8 whose improper columns are 3 and 6.
//! * [`phi_case1`] / [`phi_case2`]: an orbit of the involution in M_6, one
//!   matrix on each side.
//! * [`removal_chain`]: a member of PM_{6,3} and the three intermediate
//!   matrices the removal algorithm passes through, ending in I_{6,3}.

use crate::matrices::UpperTriMatrix;

pub const IMPROPER_M8: &str = "\
dim=6
1 0 1 0 0 1
0 1 0 1 1 0
0 0 0 0 0 0
0 0 0 0 0 1
0 0 0 0 0 0
0 0 0 0 0 1
";

/// Expected `min_j` of [`IMPROPER_M8`], `j = 1..=6`.
pub const IMPROPER_M8_MINS: [usize; 6] = [1, 2, 1, 2, 2, 1];
pub const IMPROPER_M8_COLUMNS: [usize; 2] = [3, 6];
pub const IMPROPER_M8_INDEX: usize = 6;

pub const PHI_CASE1: &str = "\
dim=4
1 1 0 0
0 1 1 0
0 0 1 0
0 0 0 1
";

pub const PHI_CASE2: &str = "\
dim=5
1 1 0 0 0
0 1 0 1 0
0 0 1 0 0
0 0 0 0 0
0 0 0 0 1
";

pub const REMOVAL_CHAIN: &str = "\
dim=6
1 1 0 1 0 0
0 0 1 0 0 0
0 0 0 0 0 0
0 0 0 0 1 1
0 0 0 0 0 0
0 0 0 0 0 0

dim=5
1 1 1 0 0
0 1 0 0 0
0 0 0 1 1
0 0 0 0 0
0 0 0 0 0

dim=4
1 1 1 0
0 1 0 0
0 0 1 1
0 0 0 0

dim=3
1 1 1
0 1 0
0 0 2
";

fn parse(text: &str) -> UpperTriMatrix {
    UpperTriMatrix::parse_text(text).expect("embedded fixture parses")
}

pub fn improper_m8() -> UpperTriMatrix {
    parse(IMPROPER_M8)
}

pub fn phi_case1() -> UpperTriMatrix {
    parse(PHI_CASE1)
}

pub fn phi_case2() -> UpperTriMatrix {
    parse(PHI_CASE2)
}

pub fn removal_chain() -> Vec<UpperTriMatrix> {
    UpperTriMatrix::parse_text_many(REMOVAL_CHAIN).expect("embedded fixture parses")
}

pub fn removal_source() -> UpperTriMatrix {
    removal_chain().remove(0)
}

pub fn removal_target() -> UpperTriMatrix {
    removal_chain().pop().expect("chain is non-empty")
}
