//! Finite posets: (2+2)-freeness, predecessor-set chains, minimal elements,
//! and unlabeled enumeration by canonical form.
//!
//! Elements are labeled `1..=n` in the public API. Internally a poset is a
//! vector of predecessor bitmasks, bit `y` of `down[x]` meaning `y < x`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

/// Default bound on `n` for unlabeled enumeration.
pub const DEFAULT_MAX_POSET_N: usize = 7;

/// Largest `n` whose relation matrix fits the 64-bit canonical code.
pub const HARD_MAX_POSET_N: usize = 8;

pub type ElementSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("element {x} out of range for a poset on {n} elements")]
    ElementOutOfRange { x: usize, n: usize },
    #[error("relation {a}<{b} would create a cycle")]
    Cycle { a: usize, b: usize },
    #[error("poset contains an induced 2+2, so levels are undefined")]
    NotTwoPlusTwoFree,
    #[error("n = {n} exceeds the enumeration bound {limit}")]
    BoundExceeded { n: usize, limit: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    down: Vec<u32>,
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&b| mask & (1 << b) != 0)
}

fn to_set(mask: u32) -> ElementSet {
    bits(mask).map(|b| b + 1).collect()
}

impl Poset {
    /// Poset generated by the relations `a < b` (1-based), closed under
    /// transitivity.
    pub fn new(n: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n > 32 {
            return Err(PosetError::ElementOutOfRange { x: n, n: 32 });
        }
        let mut down = vec![0u32; n];
        for &(a, b) in relations {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(PosetError::ElementOutOfRange { x, n });
                }
            }
            down[b - 1] |= 1 << (a - 1);
        }
        // transitive closure
        loop {
            let mut changed = false;
            for x in 0..n {
                let mut closed = down[x];
                for y in bits(down[x]) {
                    closed |= down[y];
                }
                if closed != down[x] {
                    down[x] = closed;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for (x, &d) in down.iter().enumerate() {
            if d & (1 << x) != 0 {
                let a = relations
                    .iter()
                    .find(|&&(_, b)| b == x + 1)
                    .map_or(x + 1, |&(a, _)| a);
                return Err(PosetError::Cycle { a, b: x + 1 });
            }
        }
        Ok(Poset { n, down })
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            n,
            down: vec![0; n],
        }
    }

    pub fn chain(n: usize) -> Self {
        Poset {
            n,
            down: (0..n).map(|x| (1u32 << x) - 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn lt(&self, a: usize, b: usize) -> bool {
        self.down[b] & (1 << a) != 0
    }

    fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    /// Whether `a < b` (1-based).
    pub fn less(&self, a: usize, b: usize) -> bool {
        (1..=self.n).contains(&a) && (1..=self.n).contains(&b) && self.lt(a - 1, b - 1)
    }

    fn check(&self, x: usize) -> Result<usize, PosetError> {
        if x == 0 || x > self.n {
            Err(PosetError::ElementOutOfRange { x, n: self.n })
        } else {
            Ok(x - 1)
        }
    }

    /// `D(x) = {y : y < x}`.
    pub fn predecessor_set(&self, x: usize) -> Result<ElementSet, PosetError> {
        Ok(to_set(self.down[self.check(x)?]))
    }

    /// Whether some `a < b`, `c < d` on four distinct elements have all four
    /// cross pairs incomparable.
    pub fn contains_2plus2(&self) -> bool {
        let n = self.n;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|b| bits(self.down[b]).map(move |a| (a, b)))
            .collect();
        pairs.iter().any(|&(a, b)| {
            pairs.iter().any(|&(c, d)| {
                a != c
                    && a != d
                    && b != c
                    && b != d
                    && !self.comparable(a, c)
                    && !self.comparable(a, d)
                    && !self.comparable(b, c)
                    && !self.comparable(b, d)
            })
        })
    }

    fn chain_masks(&self) -> Option<Vec<u32>> {
        let mut sets: Vec<u32> = self.down.clone();
        sets.push(0);
        sets.sort_by_key(|m| (m.count_ones(), *m));
        sets.dedup();
        sets.windows(2).all(|w| w[0] & !w[1] == 0).then_some(sets)
    }

    /// The distinct predecessor sets in increasing order, if they form a
    /// chain under inclusion. `∅` is always the first entry.
    pub fn predecessor_chain(&self) -> Option<Vec<ElementSet>> {
        self.chain_masks()
            .map(|sets| sets.into_iter().map(to_set).collect())
    }

    pub fn minimal_count(&self) -> usize {
        self.down.iter().filter(|&&d| d == 0).count()
    }

    /// Index `i` of `D(x)` in the predecessor chain.
    pub fn level(&self, x: usize) -> Result<usize, PosetError> {
        let x = self.check(x)?;
        let chain = self.chain_masks().ok_or(PosetError::NotTwoPlusTwoFree)?;
        Ok(chain
            .iter()
            .position(|&m| m == self.down[x])
            .expect("every predecessor set is in the chain"))
    }

    /// Cover relations `a < b` (1-based), sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.n {
            for a in bits(self.down[b]) {
                let skipped = bits(self.down[b]).any(|c| self.lt(a, c));
                if !skipped {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out.sort();
        out
    }

    /// Returns the poset with element `x` renamed `perm[x]` (0-based).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut down = vec![0u32; self.n];
        for x in 0..self.n {
            for y in bits(self.down[x]) {
                down[perm[x]] |= 1 << perm[y];
            }
        }
        Poset { n: self.n, down }
    }

    fn code_under(&self, perm: &[usize]) -> u64 {
        let mut code = 0u64;
        for x in 0..self.n {
            for y in bits(self.down[x]) {
                code |= 1 << (perm[x] * self.n + perm[y]);
            }
        }
        code
    }

    /// Canonical code: the least relation-matrix bit string, bit
    /// `x * n + y` set iff `y < x`, over all relabelings that list elements
    /// by ascending `(|D(x)|, |U(x)|)` (down-set and up-set sizes). The
    /// restriction keeps the code isomorphism-invariant since the key is.
    ///
    /// Panics if `n` exceeds [`HARD_MAX_POSET_N`].
    pub fn canonical_code(&self) -> u64 {
        assert!(
            self.n <= HARD_MAX_POSET_N,
            "poset too large for a 64-bit code"
        );
        let mut ups = vec![0u32; self.n];
        for x in 0..self.n {
            for y in bits(self.down[x]) {
                ups[y] += 1;
            }
        }
        let mut keyed: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
        for (x, &up) in ups.iter().enumerate() {
            keyed
                .entry((self.down[x].count_ones(), up))
                .or_default()
                .push(x);
        }
        let classes: Vec<Vec<usize>> = keyed.into_values().collect();
        let mut perm = vec![0usize; self.n];
        let mut best = u64::MAX;
        self.search(&classes, 0, 0, &mut perm, &mut best);
        best
    }

    // Assigns the positions `offset..offset+len` of class `ci` in every order,
    // recursing into the next class.
    fn search(
        &self,
        classes: &[Vec<usize>],
        ci: usize,
        offset: usize,
        perm: &mut [usize],
        best: &mut u64,
    ) {
        if ci == classes.len() {
            *best = (*best).min(self.code_under(perm));
            return;
        }
        let class = &classes[ci];
        let mut order: Vec<usize> = (0..class.len()).collect();
        loop {
            for (pos, &k) in order.iter().enumerate() {
                perm[class[k]] = offset + pos;
            }
            self.search(classes, ci + 1, offset + class.len(), perm, best);
            if !next_permutation(&mut order) {
                break;
            }
        }
    }

    pub fn from_code(n: usize, code: u64) -> Self {
        let mut down = vec![0u32; n];
        for (x, d) in down.iter_mut().enumerate() {
            for y in 0..n {
                if code & (1 << (x * n + y)) != 0 {
                    *d |= 1 << y;
                }
            }
        }
        Poset { n, down }
    }

    /// The representative of this poset's isomorphism class.
    pub fn canonical(&self) -> Self {
        Self::from_code(self.n, self.canonical_code())
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers())
    }
}

/// Edge-list text: `n=<n>` then one cover relation `a<b` per line.
impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for (a, b) in self.covers() {
            writeln!(f, "{a}<{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Poset {
    type Err = PosetError;

    /// Accepts any generating set of relations, not only covers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let perr = |line: usize, message: &str| PosetError::Parse {
            line,
            message: message.to_string(),
        };
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (no, header) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| perr(no, "expected `n=<n>` header"))?;
        let mut rels = Vec::new();
        for (no, line) in lines {
            let (a, b) = line
                .split_once('<')
                .ok_or_else(|| perr(no, "expected `a<b`"))?;
            let a = a.trim().parse().map_err(|_| perr(no, "invalid element"))?;
            let b = b.trim().parse().map_err(|_| perr(no, "invalid element"))?;
            rels.push((a, b));
        }
        Poset::new(n, &rels)
    }
}

/// Calls `visit` on every naturally labeled poset on `n` elements (`x < y`
/// only when `x` precedes `y`). Each new element takes a down-closed subset
/// of the earlier ones as its predecessor set.
fn for_each_natural(n: usize, down: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    let k = down.len();
    if k == n {
        visit(down);
        return;
    }
    for mask in 0u32..(1 << k) {
        if bits(mask).all(|y| down[y] & !mask == 0) {
            down.push(mask);
            for_each_natural(n, down, visit);
            down.pop();
        }
    }
}

/// Naturally labeled posets on `n` elements. Every isomorphism class has at
/// least one natural labeling.
pub fn naturally_labeled(n: usize) -> Vec<Poset> {
    let mut out = Vec::new();
    for_each_natural(n, &mut Vec::with_capacity(n), &mut |d| {
        out.push(Poset {
            n,
            down: d.to_vec(),
        })
    });
    out
}

/// One representative per isomorphism class of posets on `n` elements,
/// sorted by canonical code. Refuses `n > limit`.
pub fn enumerate_unlabeled_posets_with_limit(
    n: usize,
    limit: usize,
) -> Result<Vec<Poset>, PosetError> {
    let limit = limit.min(HARD_MAX_POSET_N);
    if n > limit {
        return Err(PosetError::BoundExceeded { n, limit });
    }
    let codes: HashSet<u64> = naturally_labeled(n)
        .par_iter()
        .map(Poset::canonical_code)
        .collect();
    let mut codes: Vec<u64> = codes.into_iter().collect();
    codes.sort_unstable();
    Ok(codes.into_iter().map(|c| Poset::from_code(n, c)).collect())
}

pub fn enumerate_unlabeled_posets(n: usize) -> Result<Vec<Poset>, PosetError> {
    enumerate_unlabeled_posets_with_limit(n, DEFAULT_MAX_POSET_N)
}

/// Unlabeled (2+2)-free posets on `n` elements counted by number of minimal
/// elements.
pub fn count_free_by_min_with_limit(
    n: usize,
    limit: usize,
) -> Result<BTreeMap<usize, u64>, PosetError> {
    let mut out = BTreeMap::new();
    for p in enumerate_unlabeled_posets_with_limit(n, limit)? {
        if !p.contains_2plus2() {
            *out.entry(p.minimal_count()).or_insert(0) += 1;
        }
    }
    Ok(out)
}

pub fn count_free_by_min(n: usize) -> Result<BTreeMap<usize, u64>, PosetError> {
    count_free_by_min_with_limit(n, DEFAULT_MAX_POSET_N)
}
