use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::{Series, SeriesError, Var};
use crate::exact::Rational;

/// Series in `z` truncated at `z^N` whose coefficients are polynomials in a
/// second variable `u` (index = power of `u`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    coeffs: Vec<Vec<Rational>>,
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|k| match (a.get(k), b.get(k)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => Rational::zero(),
        })
        .collect();
    trim(out)
}

fn poly_neg(a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|c| -c).collect()
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    trim(out)
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries { coeffs: vec![Vec::new(); order + 1] }
    }

    /// `c * z^n * u^k`.
    pub fn monomial(n: usize, k: usize, c: Rational, order: usize) -> Self {
        let mut s = BivariateSeries::zero(order);
        if n <= order {
            let mut p = vec![Rational::zero(); k + 1];
            p[k] = c;
            s.coeffs[n] = trim(p);
        }
        s
    }

    /// Lift a `z`-series (constant in `u`).
    pub fn from_series(s: &Series) -> Self {
        BivariateSeries { coeffs: s.coeffs().iter().map(|c| trim(vec![c.clone()])).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The polynomial in `u` multiplying `z^n` (trailing zeros trimmed).
    pub fn coeff(&self, n: usize) -> &[Rational] {
        self.coeffs.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Substitute a value for `u`.
    pub fn eval_u(&self, u: &Rational) -> Series {
        let coeffs =
            self.coeffs.iter().map(|p| p.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * u) + c)).collect();
        Series::new(Var::Z, coeffs, self.order())
    }

    /// Partial derivative with respect to `u`.
    pub fn diff_u(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| trim(p.iter().enumerate().skip(1).map(|(k, c)| c * &Rational::from(k as u64)).collect()))
            .collect();
        BivariateSeries { coeffs }
    }

    /// Highest power of `u` appearing in the `z^n` coefficient.
    pub fn u_degree(&self, n: usize) -> Option<usize> {
        self.coeff(n).len().checked_sub(1)
    }

    /// Multiplicative inverse; the `z^0` coefficient must be a nonzero
    /// constant in `u`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeff(0);
        if c0.len() != 1 {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = c0[0].recip();
        let mut out: Vec<Vec<Rational>> = Vec::with_capacity(self.coeffs.len());
        out.push(vec![inv0.clone()]);
        for n in 1..self.coeffs.len() {
            let mut acc: Vec<Rational> = Vec::new();
            for j in 1..=n {
                if self.coeffs[j].is_empty() || out[n - j].is_empty() {
                    continue;
                }
                acc = poly_add(&acc, &poly_mul(&self.coeffs[j], &out[n - j]));
            }
            let scaled: Vec<Rational> = acc.iter().map(|c| -&(c * &inv0)).collect();
            out.push(trim(scaled));
        }
        Ok(BivariateSeries { coeffs: out })
    }
}

impl<'a> Add<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &'a BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        BivariateSeries { coeffs: (0..=order).map(|n| poly_add(&self.coeffs[n], &rhs.coeffs[n])).collect() }
    }
}

impl<'a> Sub<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;

    fn sub(self, rhs: &'a BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|n| poly_add(&self.coeffs[n], &poly_neg(&rhs.coeffs[n]))).collect();
        BivariateSeries { coeffs }
    }
}

impl<'a> Mul<&'a BivariateSeries> for &'a BivariateSeries {
    type Output = BivariateSeries;

    fn mul(self, rhs: &'a BivariateSeries) -> BivariateSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Vec::new(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_empty() {
                continue;
            }
            for j in 0..=(order - i) {
                if !rhs.coeffs[j].is_empty() {
                    coeffs[i + j] = poly_add(&coeffs[i + j], &poly_mul(&self.coeffs[i], &rhs.coeffs[j]));
                }
            }
        }
        BivariateSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_in_zu() {
        // 1 / (1 - z u) = sum z^n u^n
        let one = BivariateSeries::monomial(0, 0, Rational::from(1i64), 5);
        let zu = BivariateSeries::monomial(1, 1, Rational::from(1i64), 5);
        let g = (&one - &zu).inverse().unwrap();
        for n in 0..=5 {
            let mut expect = vec![Rational::zero(); n + 1];
            expect[n] = Rational::from(1i64);
            assert_eq!(g.coeff(n), expect.as_slice());
        }
        assert_eq!(g.eval_u(&Rational::from(2i64)).coeff(4), Rational::from(16i64));
        assert_eq!(g.diff_u().coeff(3), &[Rational::zero(), Rational::zero(), Rational::from(3i64)]);
    }

    #[test]
    fn inverse_needs_constant_leading_polynomial() {
        let u = BivariateSeries::monomial(0, 1, Rational::from(1i64), 3);
        assert!(u.inverse().is_err());
    }
}
