//! Ascent sequences, generated by prefix extension.

use std::collections::BTreeMap;

/// Number of positions `i` with `x_i < x_{i+1}`.
pub fn asc_count(x: &[u32]) -> usize {
    x.windows(2).filter(|w| w[0] < w[1]).count()
}

/// `x_1 = 0` (when non-empty) and `x_i <= asc(x_1..x_{i-1}) + 1`.
pub fn is_ascent_sequence(x: &[u32]) -> bool {
    if x.first().is_some_and(|&v| v != 0) {
        return false;
    }
    let mut asc = 0usize;
    for i in 1..x.len() {
        if x[i] as usize > asc + 1 {
            return false;
        }
        if x[i - 1] < x[i] {
            asc += 1;
        }
    }
    true
}

/// Depth-first walk over all ascent sequences of length `n`, extending each
/// prefix by every legal value in increasing order. The ascent count of the
/// prefix is carried along.
fn walk(n: usize, buf: &mut Vec<u32>, asc: usize, visit: &mut impl FnMut(&[u32])) {
    if buf.len() == n {
        visit(buf);
        return;
    }
    let last = *buf.last().expect("walk starts from a non-empty prefix");
    for v in 0..=(asc as u32 + 1) {
        buf.push(v);
        walk(n, buf, asc + usize::from(last < v), visit);
        buf.pop();
    }
}

/// Calls `visit` on each ascent sequence of length `n`, in lexicographic
/// order.
pub fn for_each_ascent(n: usize, mut visit: impl FnMut(&[u32])) {
    if n == 0 {
        visit(&[]);
        return;
    }
    let mut buf = Vec::with_capacity(n);
    buf.push(0);
    walk(n, &mut buf, 0, &mut visit);
}

pub fn enumerate_ascent(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for_each_ascent(n, |x| out.push(x.to_vec()));
    out
}

/// Number of ascent sequences of length `n` with exactly `k` zeros, keyed by
/// `k`.
pub fn count_by_zeros(n: usize) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for_each_ascent(n, |x| {
        *out.entry(x.iter().filter(|&&v| v == 0).count())
            .or_insert(0) += 1;
    });
    out
}
