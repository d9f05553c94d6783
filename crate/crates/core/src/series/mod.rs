//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `x^0 ..= x^N`.
//! Binary operations truncate to the smaller operand order; nothing ever
//! silently extends the known precision.

mod bivariate;
mod solve;
mod substitution;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;

pub use bivariate::BivariateSeries;
pub use solve::{fixed_point, solve_gf, GfFamily, QuadraticEquation};
pub use substitution::{subst_forward, trinomial, trinomial_row, Substitution};

/// Name of the formal variable a series is expanded in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    Z,
    U,
    V,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::Z => "z",
            Var::U => "u",
            Var::V => "v",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonZeroConstant,
    #[error("series is not revertible: needs zero constant term and nonzero linear term")]
    NotRevertible,
    #[error("functional map did not reach a fixed point")]
    NotContracting,
    #[error("coefficient {index} is not an integer: {value}")]
    NonIntegral { index: usize, value: Rational },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series with the given leading coefficients, padded with zeros (or cut)
    /// to exactly `order + 1` terms.
    pub fn new(var: Var, mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64], order: usize) -> Self {
        Series::new(var, coeffs.iter().map(|&c| Rational::from(c)).collect(), order)
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Series::new(var, Vec::new(), order)
    }

    pub fn one(var: Var, order: usize) -> Self {
        Series::constant(var, Rational::one(), order)
    }

    pub fn constant(var: Var, c: Rational, order: usize) -> Self {
        Series::new(var, vec![c], order)
    }

    /// `c * x^k`, zero if `k` exceeds the order.
    pub fn monomial(var: Var, k: usize, c: Rational, order: usize) -> Self {
        let mut s = Series::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `x` itself.
    pub fn variable(var: Var, order: usize) -> Self {
        Series::monomial(var, 1, Rational::one(), order)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series::new(self.var, self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series { var: self.var, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `x^k`, dropping what falls past the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k.min(self.coeffs.len())];
        coeffs.extend(self.coeffs.iter().take(self.coeffs.len().saturating_sub(k)).cloned());
        Series { var: self.var, coeffs }
    }

    /// Divide by `x^k`; the order drops by `k`. Fails if a dropped
    /// coefficient is nonzero.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if self.coeffs[..k.min(self.coeffs.len())].iter().any(|c| !c.is_zero()) || k > self.order() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        Ok(Series { var: self.var, coeffs: self.coeffs[k..].to_vec() })
    }

    /// Formal derivative (order drops by one).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Series::zero(self.var, 0);
        }
        let coeffs = (1..self.coeffs.len()).map(|k| &self.coeffs[k] * &Rational::from(k as u64)).collect();
        Series { var: self.var, coeffs }
    }

    pub fn try_add(&self, rhs: &Series) -> Result<Series, SeriesError> {
        self.check_var(rhs)?;
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        Ok(Series { var: self.var, coeffs })
    }

    pub fn try_sub(&self, rhs: &Series) -> Result<Series, SeriesError> {
        self.check_var(rhs)?;
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        Ok(Series { var: self.var, coeffs })
    }

    pub fn try_mul(&self, rhs: &Series) -> Result<Series, SeriesError> {
        self.check_var(rhs)?;
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Ok(Series { var: self.var, coeffs: out })
    }

    pub fn try_div(&self, rhs: &Series) -> Result<Series, SeriesError> {
        self.check_var(rhs)?;
        let b0 = &rhs.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order().min(rhs.order());
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let b = &rhs.coeffs[j];
                if !b.is_zero() && !q[k - j].is_zero() {
                    acc -= &(b * &q[k - j]);
                }
            }
            q.push(if b0.is_one() { acc } else { &acc / b0 });
        }
        Ok(Series { var: self.var, coeffs: q })
    }

    pub fn inverse(&self) -> Result<Series, SeriesError> {
        Series::one(self.var, self.order()).try_div(self)
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut result = Series::one(self.var, self.order());
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// `self(inner(y))`, a series in `inner`'s variable. Requires
    /// `inner(0) = 0`.
    pub fn compose(&self, inner: &Series) -> Result<Series, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Series::constant(inner.var, self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.try_mul(&inner)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse to `order`, expressed in `var`.
    ///
    /// Uses Lagrange inversion: `[y^n] B = (1/n) [x^(n-1)] (x / A(x))^n`.
    pub fn revert(&self, order: usize, var: Var) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_zero() || self.order() == 0 || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotRevertible);
        }
        let order = order.min(self.order());
        let mut result = Series::zero(var, order);
        if order == 0 {
            return Ok(result);
        }
        // x / A(x), known to order - 1
        let a_over_x = self.shift_down(1)?.truncate(order - 1);
        let w = a_over_x.inverse()?;
        let mut power = Series::one(self.var, order - 1);
        for n in 1..=order {
            power = &power * &w;
            result.coeffs[n] = &power.coeffs[n - 1] / &Rational::from(n as u64);
        }
        Ok(result)
    }

    /// Evaluate the first `order + 1` terms at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Integer coefficients, or the first index that is not integral.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| c.to_integer().ok_or_else(|| SeriesError::NonIntegral { index, value: c.clone() }))
            .collect()
    }

    /// Exact decimal strings (`num/den` for non-integers).
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    fn check_var(&self, rhs: &Series) -> Result<(), SeriesError> {
        if self.var != rhs.var {
            return Err(SeriesError::VariableMismatch(self.var, rhs.var));
        }
        Ok(())
    }
}

/// Checked front door for the four field operations.
pub fn ts_arith(op: ArithOp, a: &Series, b: &Series) -> Result<Series, SeriesError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

macro_rules! series_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Series> for &'a Series {
            type Output = Series;
            /// Panics on a variable mismatch; use the `try_` form to recover.
            fn $method(self, rhs: &'a Series) -> Series {
                self.$checked(rhs).expect("series operands must share a variable")
            }
        }
        impl $tr<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}

series_op!(Add, add, try_add);
series_op!(Sub, sub, try_sub);
series_op!(Mul, mul, try_mul);

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*{}", self.var)?,
                _ => write!(f, "{c}*{}^{k}", self.var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn geometric_series() {
        let one = Series::one(Var::Z, 3);
        let one_minus_z = Series::from_ints(Var::Z, &[1, -1], 3);
        let q = ts_arith(ArithOp::Div, &one, &one_minus_z).unwrap();
        assert_eq!(ints(&q), vec![1, 1, 1, 1]);
    }

    #[test]
    fn difference_of_squares() {
        let a = Series::from_ints(Var::Z, &[1, 1], 4);
        let b = Series::from_ints(Var::Z, &[1, -1], 4);
        assert_eq!(ints(&(&a * &b)), vec![1, 0, -1, 0, 0]);
    }

    #[test]
    fn long_division() {
        // (2z - z^2) / (1 - z): long division by hand gives 2z + z^2 + z^3
        let num = Series::from_ints(Var::Z, &[0, 2, -1], 3);
        let den = Series::from_ints(Var::Z, &[1, -1], 3);
        assert_eq!(ints(&num.try_div(&den).unwrap()), vec![0, 2, 1, 1]);
    }

    #[test]
    fn division_by_zero_constant_term_fails() {
        let num = Series::one(Var::Z, 3);
        let den = Series::variable(Var::Z, 3);
        assert_eq!(num.try_div(&den), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn variable_mismatch_is_reported() {
        let a = Series::one(Var::Z, 2);
        let b = Series::one(Var::U, 2);
        assert_eq!(a.try_add(&b), Err(SeriesError::VariableMismatch(Var::Z, Var::U)));
    }

    #[test]
    fn order_is_min_of_operands() {
        let a = Series::one(Var::Z, 5);
        let b = Series::one(Var::Z, 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn compose_square_with_y_plus_y2() {
        let a = Series::from_ints(Var::Z, &[0, 0, 1], 4);
        let b = Series::from_ints(Var::U, &[0, 1, 1], 4);
        let c = a.compose(&b).unwrap();
        assert_eq!(c.var(), Var::U);
        assert_eq!(ints(&c), vec![0, 0, 1, 2, 1]);
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let a = Series::variable(Var::Z, 3);
        let b = Series::one(Var::U, 3);
        assert_eq!(a.compose(&b), Err(SeriesError::NonZeroConstant));
    }

    #[test]
    fn revert_catalan_substitution() {
        // z = u / (1 + u)^2 inverts to the shifted Catalan series
        let z_of_u = subst_forward(0, 6);
        let u_of_z = z_of_u.revert(6, Var::Z).unwrap();
        assert_eq!(ints(&u_of_z), vec![0, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn revert_identity() {
        let x = Series::variable(Var::U, 5);
        assert_eq!(x.revert(5, Var::Z).unwrap(), Series::variable(Var::Z, 5));
    }

    #[test]
    fn revert_hex_substitution_prefix() {
        let u_of_z = subst_forward(1, 3).revert(3, Var::Z).unwrap();
        assert_eq!(ints(&u_of_z), vec![0, 1, 3, 10]);
    }

    #[test]
    fn revert_rejects_bad_input() {
        let s = Series::from_ints(Var::U, &[0, 0, 1], 4);
        assert_eq!(s.revert(4, Var::Z), Err(SeriesError::NotRevertible));
        let s = Series::from_ints(Var::U, &[1, 1], 4);
        assert_eq!(s.revert(4, Var::Z), Err(SeriesError::NotRevertible));
    }

    #[test]
    fn non_integral_coefficient_is_reported() {
        let s = Series::new(Var::Z, vec![Rational::one(), Rational::new(1, 2)], 1);
        assert!(matches!(s.to_integers(), Err(SeriesError::NonIntegral { index: 1, .. })));
    }

    fn poly_strategy() -> impl Strategy<Value = Vec<i64>> {
        (prop::collection::vec(-4i64..=4, 0..6), prop_oneof![-3i64..=-1, 1i64..=3]).prop_map(|(tail, lin)| {
            let mut v = vec![0, lin];
            v.extend(tail);
            v
        })
    }

    proptest! {
        #[test]
        fn revert_round_trips(poly in poly_strategy()) {
            let order = 8;
            let a = Series::from_ints(Var::U, &poly, order);
            let b = a.revert(order, Var::Z).unwrap();
            prop_assert_eq!(a.compose(&b).unwrap(), Series::variable(Var::Z, order));
            prop_assert_eq!(b.compose(&a).unwrap(), Series::variable(Var::U, order));
        }

        #[test]
        fn division_inverts_multiplication(a in prop::collection::vec(-5i64..=5, 1..7),
                                           b in prop::collection::vec(-5i64..=5, 1..7),
                                           b0 in prop_oneof![-2i64..=-1, 1i64..=2]) {
            let order = 6;
            let a = Series::from_ints(Var::Z, &a, order);
            let mut b = b;
            b[0] = b0;
            let b = Series::from_ints(Var::Z, &b, order);
            prop_assert_eq!((&a * &b).try_div(&b).unwrap(), a);
        }
    }
}
