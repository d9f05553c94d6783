//! The rational substitution `z = u / (1 + (a+2)u + u^2)` and the
//! generalized trinomial coefficients it produces.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Series, SeriesError, Var};
use crate::exact::Rational;

/// `[x^k] (1 + b x + x^2)^n` for `k = 0 ..= 2n`.
///
/// Uses the first-order recurrence obtained from `P' (1 + bx + x^2) = n (b + 2x) P`,
/// so a full row costs `O(n)` big-integer operations.
pub fn trinomial_row(n: u64, b: u64) -> Vec<BigInt> {
    let len = 2 * n as usize + 1;
    let mut row = Vec::with_capacity(len);
    row.push(BigInt::one());
    if n == 0 {
        return row;
    }
    let m = BigInt::from(n);
    let b = BigInt::from(b);
    row.push(&m * &b);
    for k in 1..(len - 1) {
        let kk = BigInt::from(k);
        let t1 = (&m * &b - &b * &kk) * &row[k];
        let t2 = (BigInt::from(2 * n + 1) - &kk) * &row[k - 1];
        row.push((t1 + t2) / BigInt::from(k + 1));
    }
    row
}

/// Generalized trinomial coefficient `[x^k] (1 + a x + x^2)^n`; zero for `k`
/// outside `0 ..= 2n`.
pub fn trinomial(n: u64, a: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > 2 * n {
        return BigInt::zero();
    }
    trinomial_row(n, a)[k as usize].clone()
}

/// Truncated expansion of `u / (1 + (a+2)u + u^2)` in the variable `u`.
pub fn subst_forward(a: u64, order: usize) -> Series {
    Substitution::new(a).z_of_u(order)
}

/// The substitution for colour count `a`, with the "u-world" variable
/// configurable (`u` for trees, `v` for marked-tree statistics).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub a: u64,
    pub var: Var,
}

impl Substitution {
    pub fn new(a: u64) -> Self {
        Substitution { a, var: Var::U }
    }

    pub fn with_var(a: u64, var: Var) -> Self {
        Substitution { a, var }
    }

    /// `1 + (a+2)u + u^2` as a series in the u-world variable.
    pub fn kernel(&self, order: usize) -> Series {
        Series::from_ints(self.var, &[1, self.a as i64 + 2, 1], order)
    }

    /// `z` expressed as a series in the u-world variable.
    pub fn z_of_u(&self, order: usize) -> Series {
        let inv = self.kernel(order).inverse().expect("kernel has constant term 1");
        inv.shift_up(1)
    }

    /// The inverse branch `u(z)` with `u(0) = 0`, as a series in `z`.
    pub fn u_of_z(&self, order: usize) -> Series {
        self.z_of_u(order).revert(order, Var::Z).expect("z(u) = u + O(u^2)")
    }

    /// Move a u-world series to the z-world by composition.
    pub fn to_z(&self, h: &Series) -> Result<Series, SeriesError> {
        h.compose(&self.u_of_z(h.order()))
    }

    /// Single coefficient `[z^n] h(u(z))` without composing whole series:
    /// `[u^n] h(u) (1 - u^2) (1 + (a+2)u + u^2)^(n-1)` for `n >= 1`.
    ///
    /// `h` must be known to order `n`.
    pub fn extract(&self, h: &Series, n: usize) -> Rational {
        assert!(h.order() >= n, "series known to order {} but coefficient {n} requested", h.order());
        if n == 0 {
            return h.coeff(0);
        }
        let row = trinomial_row(n as u64 - 1, self.a + 2);
        let power = |k: usize| -> Rational { row.get(k).cloned().map(Rational::from).unwrap_or_else(Rational::zero) };
        let mut acc = Rational::zero();
        for i in 0..=n {
            let hi = h.coeff(i);
            if hi.is_zero() {
                continue;
            }
            // (1 - u^2) * phi^(n-1) at degree n - i
            let d = n - i;
            let mut w = power(d);
            if d >= 2 {
                w -= &power(d - 2);
            }
            if !w.is_zero() {
                acc += &(&hi * &w);
            }
        }
        acc
    }
}
