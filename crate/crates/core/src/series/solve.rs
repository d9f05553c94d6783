//! Power-series solutions of the families' functional equations.

use std::fmt;

use num_traits::{One, Zero};

use super::{Series, SeriesError, Var};
use crate::exact::Rational;

/// A counting family with an algebraic (quadratic) generating function in `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GfFamily {
    /// `B = 1 + z B^2`
    Binary,
    /// `N = 1 + a z (N - 1) + z N^2`
    UnaryBinary(u64),
    /// `H = 1 + z (H-1)^2 + z + 3 z (H-1)`
    Hex,
    /// `A = z + z/(1-A) * z + z/(1-A) * 2 (A - z)`
    Marked,
    /// `F = 1 / (1 - z F / (1 - z))`
    MultiEdge,
    /// `M = 1 + 3 z M + z^2 M^2`
    Motzkin3,
}

impl fmt::Display for GfFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfFamily::Binary => f.write_str("binary"),
            GfFamily::UnaryBinary(a) => write!(f, "ub(a={a})"),
            GfFamily::Hex => f.write_str("hex"),
            GfFamily::Marked => f.write_str("marked"),
            GfFamily::MultiEdge => f.write_str("multi_edge"),
            GfFamily::Motzkin3 => f.write_str("motzkin3"),
        }
    }
}

impl GfFamily {
    /// The equation rearranged as `c2 X^2 + c1 X + c0 = 0`.
    pub fn equation(&self) -> QuadraticEquation {
        let (c2, c1, c0, x0): (&[i64], Vec<i64>, Vec<i64>, i64) = match *self {
            GfFamily::Binary => (&[0, 1], vec![-1], vec![1], 1),
            GfFamily::UnaryBinary(a) => (&[0, 1], vec![-1, a as i64], vec![1, -(a as i64)], 1),
            GfFamily::Hex => (&[0, 1], vec![-1, 1], vec![1, -1], 1),
            GfFamily::Marked => (&[1], vec![-1, 1], vec![0, 1, -1], 0),
            GfFamily::MultiEdge => (&[0, 1], vec![-1, 1], vec![1, -1], 1),
            GfFamily::Motzkin3 => (&[0, 0, 1], vec![-1, 3], vec![1], 1),
        };
        let r = |v: &[i64]| v.iter().map(|&c| Rational::from(c)).collect();
        QuadraticEquation { c2: r(c2), c1: r(&c1), c0: r(&c0), x0: Rational::from(x0) }
    }

    /// Right-hand side of the family's functional equation `X = map(X)`,
    /// written the way the grammar reads.
    pub fn functional_map(&self, x: &Series) -> Series {
        let order = x.order();
        let z = Series::variable(Var::Z, order);
        let one = Series::one(Var::Z, order);
        let c = |k: i64| Series::constant(Var::Z, Rational::from(k), order);
        match *self {
            GfFamily::Binary => &one + &(&z * &(x * x)),
            GfFamily::UnaryBinary(a) => {
                let x1 = x - &one;
                &(&one + &(&c(a as i64) * &(&z * &x1))) + &(&z * &(x * x))
            }
            GfFamily::Hex => {
                let x1 = x - &one;
                let sq = &z * &(&x1 * &x1);
                &(&(&one + &sq) + &z) + &(&c(3) * &(&z * &x1))
            }
            GfFamily::Marked => {
                let seq = (&one - x).inverse().expect("A(0) = 0");
                let prefix = &z * &seq;
                let leaf_last = &prefix * &z;
                let heavy_last = &prefix * &(&c(2) * &(x - &z));
                &(&z + &leaf_last) + &heavy_last
            }
            GfFamily::MultiEdge => {
                let edge = z.try_div(&(&one - &z)).expect("1 - z invertible");
                (&one - &(&edge * x)).inverse().expect("constant term 1")
            }
            GfFamily::Motzkin3 => {
                let z2 = z.shift_up(1);
                &(&one + &(&c(3) * &(&z * x))) + &(&z2 * &(x * x))
            }
        }
    }
}

/// `c2(z) X^2 + c1(z) X + c0(z) = 0` with polynomial coefficients and a
/// prescribed constant term `x0` of the wanted root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticEquation {
    pub c2: Vec<Rational>,
    pub c1: Vec<Rational>,
    pub c0: Vec<Rational>,
    pub x0: Rational,
}

impl QuadraticEquation {
    /// The unique power-series root with `X(0) = x0`, to `order`.
    ///
    /// Coefficients are fixed one at a time: the `z^n` coefficient of
    /// `P(X)` is linear in `X_n` with slope `c1(0) + 2 c2(0) x0`, and
    /// everything else only involves `X_0 .. X_(n-1)`.
    pub fn solve(&self, order: usize) -> Series {
        let get = |p: &[Rational], k: usize| p.get(k).cloned().unwrap_or_else(Rational::zero);
        let x0 = self.x0.clone();
        let c2_0 = get(&self.c2, 0);
        let slope = &get(&self.c1, 0) + &(&(&c2_0 + &c2_0) * &x0);
        assert!(!slope.is_zero(), "degenerate equation: root is not simple");
        let p0 = &(&(&c2_0 * &(&x0 * &x0)) + &(&get(&self.c1, 0) * &x0)) + &get(&self.c0, 0);
        assert!(p0.is_zero(), "x0 = {x0} is not a root of the constant-term equation");

        let neg_slope = -&slope;
        let mut x: Vec<Rational> = vec![x0.clone()];
        let mut sq: Vec<Rational> = vec![&x0 * &x0];
        for n in 1..=order {
            // sum_{i=1}^{n-1} x_i x_{n-i}
            let mut inner = Rational::zero();
            for i in 1..=((n - 1) / 2) {
                if !x[i].is_zero() && !x[n - i].is_zero() {
                    inner += &(&x[i] * &x[n - i]);
                }
            }
            inner = &inner + &inner;
            if n % 2 == 0 && n >= 2 {
                inner += &(&x[n / 2] * &x[n / 2]);
            }

            let mut known = get(&self.c0, n);
            for (j, c) in self.c1.iter().enumerate().skip(1).take_while(|(j, _)| *j <= n) {
                if !c.is_zero() {
                    known += &(c * &x[n - j]);
                }
            }
            if !c2_0.is_zero() {
                known += &(&c2_0 * &inner);
            }
            for (j, c) in self.c2.iter().enumerate().skip(1).take_while(|(j, _)| *j <= n) {
                if !c.is_zero() {
                    known += &(c * &sq[n - j]);
                }
            }
            let xn = if neg_slope.is_one() { known } else { &known / &neg_slope };
            let sq_n = &inner + &(&(&x0 + &x0) * &xn);
            x.push(xn);
            sq.push(sq_n);
        }
        Series::new(Var::Z, x, order)
    }
}

/// Generating function of `family` to `order` (coefficients `0 ..= order`).
pub fn solve_gf(family: GfFamily, order: usize) -> Series {
    family.equation().solve(order)
}

/// Iterate `x <- map(x)` from `initial` until the truncated series stops
/// changing. Each round of a contracting map fixes at least one more
/// coefficient, so `order + 2` rounds always suffice.
pub fn fixed_point(initial: Series, map: impl Fn(&Series) -> Series) -> Result<Series, SeriesError> {
    let mut x = initial;
    for _ in 0..x.order() + 3 {
        let next = map(&x);
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    Err(SeriesError::NotContracting)
}
