use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BivariateSeries, UnivariateSeries};
use crate::matrices::WeightPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("the composition sum is defined for n >= 1")]
    ZeroLength,
}

/// Pascal triangle of exact binomial coefficients.
#[derive(Debug, Clone)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
}

impl Binomials {
    /// Table covering `C(a, b)` for `a <= max`.
    pub fn new(max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
        rows.push(vec![BigInt::one()]);
        for a in 1..=max {
            let prev = &rows[a - 1];
            let mut row = Vec::with_capacity(a + 1);
            row.push(BigInt::one());
            for b in 1..a {
                row.push(&prev[b - 1] + &prev[b]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        Binomials { rows }
    }

    /// `C(a, b)`, zero when `b > a`. Panics if `a` is beyond the table.
    pub fn get(&self, a: usize, b: usize) -> BigInt {
        if b > a {
            BigInt::zero()
        } else {
            self.rows[a][b].clone()
        }
    }

    /// `C(a, b)` with `C(a, b) = 0` for negative `b`.
    pub fn get_signed(&self, a: usize, b: i64) -> BigInt {
        usize::try_from(b).map_or_else(|_| BigInt::zero(), |b| self.get(a, b))
    }
}

/// `Σ_{n=0}^{D} ∏_{i=1}^{n} (1 - (1-t)^{i-1}(1-zt))`, truncated at
/// `t`-degree `D`. The `n`-th product is divisible by `t^n`, so the sum is
/// exact through degree `D`.
pub fn product_form(max_deg: usize) -> BivariateSeries {
    let d = max_deg;
    let binom = Binomials::new(d);
    let one = BivariateSeries::one(d);
    let one_minus_zt = BivariateSeries::from_terms(d, [(0, 0, 1), (1, 1, -1)]);
    let mut total = one.clone();
    let mut product = one.clone();
    for i in 1..=d {
        let power = UnivariateSeries::one_minus_t_pow(d, i - 1, &binom).to_bivariate();
        let factor = &one - &(&power * &one_minus_zt);
        product = &product * &factor;
        total = &total + &product;
    }
    total
}

/// `1 + Σ_{n=0}^{D} zt (1-tz)^{-(n+1)} ∏_{i=1}^{n} (1 - (1-t)^i)`, truncated
/// at `t`-degree `D`, with `(1-tz)^{-(n+1)} = Σ_m C(n+m, m) (tz)^m`.
pub fn sum_form(max_deg: usize) -> BivariateSeries {
    let d = max_deg;
    let binom = Binomials::new(2 * d + 1);
    let zt = BivariateSeries::monomial(d, 1, 1, BigInt::one());
    let mut total = BivariateSeries::one(d);
    let mut product = UnivariateSeries::one(d);
    for n in 0..=d {
        if n > 0 {
            let factor =
                &UnivariateSeries::one(d) - &UnivariateSeries::one_minus_t_pow(d, n, &binom);
            product = &product * &factor;
        }
        let geometric =
            BivariateSeries::from_terms(d, (0..=d).map(|m| (m, m, binom.get(n + m, m))));
        let term = &(&zt * &geometric) * &product.to_bivariate();
        total = &total + &term;
    }
    total
}

/// `Σ_{n=0}^{D} ∏_{i=1}^{n} (1 - (1-t)^i)`, truncated at degree `D`.
pub fn product_form_pt(max_deg: usize) -> UnivariateSeries {
    let d = max_deg;
    let binom = Binomials::new(d);
    let one = UnivariateSeries::one(d);
    let mut total = one.clone();
    let mut product = one.clone();
    for i in 1..=d {
        let factor = &one - &UnivariateSeries::one_minus_t_pow(d, i, &binom);
        product = &product * &factor;
        total = &total + &product;
    }
    total
}

/// `A_n(z)` as a signed sum over compositions `n_1 + … + n_d = n`:
/// `Σ (-1)^{n-d} ∏_j (C(j-1, n_j) + z C(j-1, n_j - 1))`.
pub fn a_n_composition(n: u64) -> Result<WeightPoly, SeriesError> {
    if n == 0 {
        return Err(SeriesError::ZeroLength);
    }
    let n = n as usize;
    let binom = Binomials::new(n);
    let mut total = WeightPoly::zero();
    compositions(n, 1, &WeightPoly::one(), &binom, n, &mut total);
    Ok(total)
}

// Extends a composition whose next part sits at column `col`; `acc` is the
// product over the columns chosen so far.
fn compositions(
    remaining: usize,
    col: usize,
    acc: &WeightPoly,
    binom: &Binomials,
    n: usize,
    total: &mut WeightPoly,
) {
    if remaining == 0 {
        let d = col - 1;
        let signed = if (n - d).is_multiple_of(2) {
            acc.clone()
        } else {
            -acc
        };
        *total = &*total + &signed;
        return;
    }
    // a column j can hold at most j ones
    for part in 1..=remaining.min(col) {
        let factor = WeightPoly::from_terms([
            (0, binom.get(col - 1, part)),
            (1, binom.get_signed(col - 1, part as i64 - 1)),
        ]);
        compositions(
            remaining - part,
            col + 1,
            &acc.mul(&factor),
            binom,
            n,
            total,
        );
    }
}
