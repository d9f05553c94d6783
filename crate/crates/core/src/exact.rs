//! Exact rational coefficients.
//!
//! `Rational` wraps [`BigRational`] and short-circuits the common case where
//! both operands are integers, so counting series never pay for a gcd.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom` in lowest terms. Panics on a zero denominator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(value: BigInt) -> Self {
        Rational(BigRational::from_integer(value))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    fn both_integral(&self, other: &Self) -> bool {
        self.0.denom().is_one() && other.0.denom().is_one()
    }

    fn int(value: BigInt) -> Self {
        Rational(BigRational::new_raw(value, BigInt::one()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|e| format!("bad numerator {n:?}: {e}"))?;
                let d: BigInt = d.trim().parse().map_err(|e| format!("bad denominator {d:?}: {e}"))?;
                if d.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(Rational::new(n, d))
            }
            None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|e| format!("bad integer {s:?}: {e}")),
        }
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::int(BigInt::from(value))
    }
}

impl From<u64> for Rational {
    fn from(value: u64) -> Self {
        Rational::int(BigInt::from(value))
    }
}

impl From<i32> for Rational {
    fn from(value: i32) -> Self {
        Rational::int(BigInt::from(value))
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Rational::int(value)
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::int(BigInt::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::int(BigInt::one())
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn add(self, rhs: &'a Rational) -> Rational {
        if self.both_integral(rhs) {
            Rational::int(self.0.numer() + rhs.0.numer())
        } else {
            Rational(&self.0 + &rhs.0)
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn sub(self, rhs: &'a Rational) -> Rational {
        if self.both_integral(rhs) {
            Rational::int(self.0.numer() - rhs.0.numer())
        } else {
            Rational(&self.0 - &rhs.0)
        }
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn mul(self, rhs: &'a Rational) -> Rational {
        if self.both_integral(rhs) {
            Rational::int(self.0.numer() * rhs.0.numer())
        } else {
            Rational(&self.0 * &rhs.0)
        }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;

    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        if self.both_integral(rhs) {
            let (q, r) = self.0.numer().div_rem(rhs.0.numer());
            if r.is_zero() {
                return Rational::int(q);
            }
        }
        Rational(&self.0 / &rhs.0)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        if self.both_integral(rhs) {
            let mut n = std::mem::take(&mut self.0).into_raw().0;
            n += rhs.0.numer();
            *self = Rational::int(n);
        } else {
            self.0 += &rhs.0;
        }
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self += &rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        if self.both_integral(rhs) {
            let mut n = std::mem::take(&mut self.0).into_raw().0;
            n -= rhs.0.numer();
            *self = Rational::int(n);
        } else {
            self.0 -= &rhs.0;
        }
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self -= &rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.denom().is_one() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_fast_path_agrees_with_general_path() {
        let a = Rational::from(12i64);
        let b = Rational::from(-5i64);
        assert_eq!(&a + &b, Rational::new(7, 1));
        assert_eq!(&a * &b, Rational::new(-60, 1));
        assert_eq!(&a / &b, Rational::new(-12, 5));
        assert_eq!(&a / &Rational::from(4i64), Rational::from(3i64));
        let mut c = a.clone();
        c += &Rational::new(1, 2);
        assert_eq!(c, Rational::new(25, 2));
        c -= &Rational::new(1, 2);
        assert!(c.is_integer());
        assert_eq!(c, 12);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rational::new(6, 4).to_string(), "3/2");
        assert_eq!(Rational::new(-8, 4).to_string(), "-2");
        assert_eq!("33/10".parse::<Rational>().unwrap(), Rational::new(33, 10));
        assert_eq!("-7".parse::<Rational>().unwrap(), Rational::from(-7i64));
        assert!("1/0".parse::<Rational>().is_err());
    }
}
