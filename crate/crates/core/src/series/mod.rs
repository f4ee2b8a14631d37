//! Truncated power series in `t` (optionally bivariate in `t` and `z`) with
//! arbitrary-precision integer coefficients, and the generating functions
//! built from them.

mod forms;

pub use forms::{a_n_composition, product_form, product_form_pt, sum_form, Binomials, SeriesError};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrices::WeightPoly;

/// Polynomial in `t` and `z` truncated at `t`-degree `max_t_degree`. Only
/// nonzero coefficients are stored and no stored monomial exceeds the bound.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    max_t_degree: usize,
    // (t exponent, z exponent) -> coefficient
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl BivariateSeries {
    pub fn zero(max_t_degree: usize) -> Self {
        BivariateSeries {
            max_t_degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(max_t_degree: usize) -> Self {
        Self::monomial(max_t_degree, 0, 0, BigInt::one())
    }

    /// `c · t^t_exp · z^z_exp`, or zero if `t_exp` exceeds the bound.
    pub fn monomial(max_t_degree: usize, t_exp: usize, z_exp: usize, c: BigInt) -> Self {
        let mut s = Self::zero(max_t_degree);
        s.add_term(t_exp, z_exp, c);
        s
    }

    pub fn from_terms<I, C>(max_t_degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(max_t_degree);
        for (t, z, c) in terms {
            s.add_term(t, z, c.into());
        }
        s
    }

    pub fn max_t_degree(&self) -> usize {
        self.max_t_degree
    }

    pub fn add_term(&mut self, t_exp: usize, z_exp: usize, c: BigInt) {
        if t_exp > self.max_t_degree || c.is_zero() {
            return;
        }
        let key = (t_exp, z_exp);
        let slot = self.coeffs.entry(key).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Coefficient of `t^n z^k`; zero when absent.
    pub fn coeff(&self, n: usize, k: usize) -> BigInt {
        self.coeffs.get(&(n, k)).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(t exponent, z exponent, coefficient)` in ascending
    /// order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs.iter().map(|(&(t, z), c)| (t, z, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^n` as a polynomial in `z`.
    pub fn t_slice(&self, n: usize) -> WeightPoly {
        WeightPoly::from_terms(
            self.coeffs
                .range((n, 0)..=(n, usize::MAX))
                .map(|(&(_, z), c)| (z as u64, c.clone())),
        )
    }

    /// Specialization `z = 1`.
    pub fn at_z_one(&self) -> UnivariateSeries {
        let mut out = UnivariateSeries::zero(self.max_t_degree);
        for (&(t, _), c) in &self.coeffs {
            out.coeffs[t] += c;
        }
        out
    }

    /// Returns `self` truncated to the smaller bound `d`.
    pub fn truncate(&self, d: usize) -> Self {
        let d = d.min(self.max_t_degree);
        BivariateSeries {
            max_t_degree: d,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&(t, _), _)| t <= d)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.max_t_degree);
        for (&(t, z), x) in &self.coeffs {
            out.add_term(t, z, x * c);
        }
        out
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: Self) -> BivariateSeries {
        let mut out = self.truncate(rhs.max_t_degree);
        for (t, z, c) in rhs.terms() {
            out.add_term(t, z, c.clone());
        }
        out
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: Self) -> BivariateSeries {
        self + &(-rhs)
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;

    fn neg(self) -> BivariateSeries {
        BivariateSeries {
            max_t_degree: self.max_t_degree,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: Self) -> BivariateSeries {
        let d = self.max_t_degree.min(rhs.max_t_degree);
        let mut out = BivariateSeries::zero(d);
        for (&(ta, za), x) in &self.coeffs {
            if ta > d {
                break;
            }
            for (&(tb, zb), y) in &rhs.coeffs {
                if ta + tb > d {
                    break;
                }
                out.add_term(ta + tb, za + zb, x * y);
            }
        }
        out
    }
}

impl fmt::Debug for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariateSeries(D={}; ", self.max_t_degree)?;
        let mut first = true;
        for (t, z, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}·t^{t}z^{z}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Power series in `t` truncated at `max_degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnivariateSeries {
    max_degree: usize,
    coeffs: Vec<BigInt>,
}

impl UnivariateSeries {
    pub fn zero(max_degree: usize) -> Self {
        UnivariateSeries {
            max_degree,
            coeffs: vec![BigInt::zero(); max_degree + 1],
        }
    }

    pub fn one(max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs<C: Into<BigInt>>(
        max_degree: usize,
        cs: impl IntoIterator<Item = C>,
    ) -> Self {
        let mut s = Self::zero(max_degree);
        for (i, c) in cs.into_iter().enumerate().take(max_degree + 1) {
            s.coeffs[i] = c.into();
        }
        s
    }

    /// `(1 - t)^k`, truncated.
    pub fn one_minus_t_pow(max_degree: usize, k: usize, binom: &Binomials) -> Self {
        let mut s = Self::zero(max_degree);
        for j in 0..=k.min(max_degree) {
            let c = binom.get(k, j);
            s.coeffs[j] = if j % 2 == 0 { c } else { -c };
        }
        s
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Lifts to a bivariate series with every term at `z^0`.
    pub fn to_bivariate(&self) -> BivariateSeries {
        BivariateSeries::from_terms(
            self.max_degree,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(t, c)| (t, 0, c.clone())),
        )
    }
}

impl Add for &UnivariateSeries {
    type Output = UnivariateSeries;

    fn add(self, rhs: Self) -> UnivariateSeries {
        let d = self.max_degree.min(rhs.max_degree);
        UnivariateSeries {
            max_degree: d,
            coeffs: (0..=d).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &UnivariateSeries {
    type Output = UnivariateSeries;

    fn sub(self, rhs: Self) -> UnivariateSeries {
        let d = self.max_degree.min(rhs.max_degree);
        UnivariateSeries {
            max_degree: d,
            coeffs: (0..=d).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &UnivariateSeries {
    type Output = UnivariateSeries;

    fn mul(self, rhs: Self) -> UnivariateSeries {
        let d = self.max_degree.min(rhs.max_degree);
        let mut out = UnivariateSeries::zero(d);
        for (i, x) in self.coeffs.iter().enumerate().take(d + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate().take(d + 1 - i) {
                out.coeffs[i + j] += x * y;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn telescoping() {
        let d = 9;
        let one_minus_t = BivariateSeries::from_terms(d, [(0, 0, 1), (1, 0, -1)]);
        let geometric = BivariateSeries::from_terms(d, (0..=d).map(|i| (i, 0, 1)));
        assert_eq!(&one_minus_t * &geometric, BivariateSeries::one(d));
    }

    #[test]
    fn two_factor_expansion() {
        let d = 4;
        let a = BivariateSeries::from_terms(d, [(0, 0, 1), (1, 0, -1)]);
        let b = BivariateSeries::from_terms(d, [(0, 0, 1), (1, 1, -1)]);
        let expected =
            BivariateSeries::from_terms(d, [(0, 0, 1), (1, 0, -1), (1, 1, -1), (2, 1, 1)]);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn truncation_drops_high_terms() {
        let a = BivariateSeries::from_terms(2, [(0, 0, 1), (2, 1, 3)]);
        assert_eq!(a.coeff(2, 1), big(3));
        assert!((&a * &a).terms().all(|(t, _, _)| t <= 2));
        assert_eq!((&a * &a).coeff(2, 1), big(6));
        let b = BivariateSeries::monomial(2, 3, 0, big(1));
        assert!(b.is_zero());
        assert_eq!(a.coeff(7, 3), BigInt::zero());
    }

    #[test]
    fn mixed_bounds_adopt_lesser() {
        let a = BivariateSeries::from_terms(5, [(4, 0, 1)]);
        let b = BivariateSeries::one(3);
        assert_eq!((&a + &b).max_t_degree(), 3);
        assert_eq!(&a + &b, BivariateSeries::one(3));
        assert_eq!((&a * &b).max_t_degree(), 3);
    }

    #[test]
    fn slices_and_collapse() {
        let a = BivariateSeries::from_terms(3, [(2, 1, 2), (2, 2, 5), (3, 0, -1)]);
        assert_eq!(a.t_slice(2), WeightPoly::from_terms([(1, 2), (2, 5)]));
        assert_eq!(a.at_z_one().coeffs(), &[big(0), big(0), big(7), big(-1)]);
    }

    #[test]
    fn univariate_ops() {
        let b = Binomials::new(10);
        let p = UnivariateSeries::one_minus_t_pow(6, 3, &b);
        assert_eq!(p.coeffs()[..4], [big(1), big(-3), big(3), big(-1)]);
        let q = UnivariateSeries::one_minus_t_pow(6, 2, &b);
        assert_eq!(&p * &q, UnivariateSeries::one_minus_t_pow(6, 5, &b));
        assert_eq!(&(&p + &q) - &q, p);
    }

    fn small_series() -> impl Strategy<Value = BivariateSeries> {
        proptest::collection::vec((0usize..5, 0usize..4, -5i64..6), 0..8)
            .prop_map(|terms| BivariateSeries::from_terms(4, terms))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_series(), b in small_series(), c in small_series()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().all(|(_, _, c)| !c.is_zero()));
        }
    }
}
