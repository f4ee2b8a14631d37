use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Parity, UpperTriMatrix};

/// Polynomial in `z` with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightPoly {
    coeffs: BTreeMap<u64, BigInt>,
}

impl WeightPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: u64, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: u64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: u64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms by ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Value at `z = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Add for &WeightPoly {
    type Output = WeightPoly;

    fn add(self, rhs: Self) -> WeightPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &WeightPoly {
    type Output = WeightPoly;

    fn sub(self, rhs: Self) -> WeightPoly {
        self + &(-rhs)
    }
}

impl Neg for &WeightPoly {
    type Output = WeightPoly;

    fn neg(self) -> WeightPoly {
        WeightPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Debug for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightPoly({self})")
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let (neg, mag) = if c.sign() == num_bigint::Sign::Minus {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "z")?,
                1 => write!(f, "{mag}z")?,
                _ if unit => write!(f, "z^{e}")?,
                _ => write!(f, "{mag}z^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for WeightPoly {
    /// Serialized as an object mapping each exponent to its decimal
    /// coefficient string.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m: BTreeMap<String, String> = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        m.serialize(s)
    }
}

/// Which matrices contribute to [`class_weight`], and with what sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityFilter {
    All,
    Only(Parity),
    /// Even matrices count `+1`, odd ones `-1`.
    Signed,
}

/// `Σ z^{rsum_1(A)}` over `matrices`, with parity taken relative to each
/// matrix's own entry sum.
pub fn class_weight<'a, I>(matrices: I, filter: ParityFilter) -> WeightPoly
where
    I: IntoIterator<Item = &'a UpperTriMatrix>,
{
    let mut acc: BTreeMap<u64, i64> = BTreeMap::new();
    for a in matrices {
        let parity = a.parity(a.total());
        let sign = match filter {
            ParityFilter::All => 1,
            ParityFilter::Only(p) if p == parity => 1,
            ParityFilter::Only(_) => continue,
            ParityFilter::Signed if parity == Parity::Even => 1,
            ParityFilter::Signed => -1,
        };
        *acc.entry(a.weight_exponent()).or_insert(0) += sign;
    }
    WeightPoly::from_terms(acc)
}
