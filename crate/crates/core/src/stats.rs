//! Leaf and height statistics of marked ordered trees.
//!
//! The v-world is the substitution `z = v / (1 + 3v + v^2)`, under which the
//! marked-tree generating function becomes `A = z (1 + v)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumerate::count_ub_closed;
use crate::exact::Rational;
use crate::series::{solve_gf, trinomial_row, BivariateSeries, GfFamily, Series, SeriesError, Substitution, Var};

/// Truncated expansions of both directions of `z = v / (1 + 3v + v^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionFrame {
    pub order: usize,
    pub z_of_v: Series,
    pub v_of_z: Series,
}

impl SubstitutionFrame {
    pub fn new(order: usize) -> Self {
        let s = Substitution::with_var(1, Var::V);
        SubstitutionFrame { order, z_of_v: s.z_of_u(order), v_of_z: s.u_of_z(order) }
    }

    /// Move a v-series into the z-world.
    pub fn to_z(&self, h: &Series) -> Result<Series, SeriesError> {
        h.compose(&self.v_of_z.truncate(h.order().min(self.order)))
    }

    /// Both compositions reduce to the identity.
    pub fn is_consistent(&self) -> bool {
        let zz = self.z_of_v.compose(&self.v_of_z).expect("v(0) = 0");
        let vv = self.v_of_z.compose(&self.z_of_v).expect("z(0) = 0");
        zz == Series::variable(Var::Z, self.order) && vv == Series::variable(Var::V, self.order)
    }
}

/// `F(z, u)` where `u` marks leaves:
/// `F = z u + z / (1 - F) * (z u + 2 (F - z u))`, solved by iteration.
pub fn leaves_bgf(order: usize) -> BivariateSeries {
    let one = BivariateSeries::monomial(0, 0, Rational::one(), order);
    let zu = BivariateSeries::monomial(1, 1, Rational::one(), order);
    let z = BivariateSeries::monomial(1, 0, Rational::one(), order);
    let two = BivariateSeries::monomial(0, 0, Rational::from(2i64), order);
    let mut f = BivariateSeries::zero(order);
    for _ in 0..order + 2 {
        let seq = (&one - &f).inverse().expect("F has no constant term");
        let heavy = &two * &(&f - &zu);
        let next = &zu + &(&(&z * &seq) * &(&zu + &heavy));
        if next == f {
            break;
        }
        f = next;
    }
    f
}

/// Total number of leaves over all marked trees with `n` nodes, from the
/// bivariate series.
pub fn total_leaves_from_bgf(f: &BivariateSeries, n: usize) -> Rational {
    f.diff_u().eval_u(&Rational::one()).coeff(n)
}

/// `G = dF/du at u = 1`, obtained by differentiating the functional equation
/// implicitly: `G = (z - z A - z^2) / (1 - z - 2A)`.
pub fn total_leaves_series(order: usize) -> Series {
    let a = solve_gf(GfFamily::Marked, order);
    let z = Series::variable(Var::Z, order);
    let one = Series::one(Var::Z, order);
    let num = &(&z - &(&z * &a)) - &z.shift_up(1);
    let den = &(&one - &z) - &(&a + &a);
    num.try_div(&den).expect("denominator has constant term 1")
}

/// Mean leaf count `L_n` for `n = 1 ..= order` (index 0 unused).
pub fn mean_leaves(order: usize) -> Vec<Rational> {
    let g = total_leaves_series(order);
    let a = solve_gf(GfFamily::Marked, order);
    let mut out = vec![Rational::zero()];
    out.extend((1..=order).map(|n| &g.coeff(n) / &a.coeff(n)));
    out
}

/// Number of marked trees with `n >= 1` nodes.
pub fn marked_count(n: usize) -> BigInt {
    if n == 1 {
        BigInt::one()
    } else {
        count_ub_closed(n - 1, 1)
    }
}

/// Total leaves over trees with `n` nodes in closed form:
/// `[v^(n-1)] (1 + v) (1 + 3v + v^2)^(n-2)` for `n >= 2`.
pub fn total_leaves(n: usize) -> BigInt {
    assert!(n >= 1);
    if n == 1 {
        return BigInt::one();
    }
    let row = trinomial_row(n as u64 - 2, 3);
    let at = |k: usize| row.get(k).cloned().unwrap_or_default();
    at(n - 1) + at(n - 2)
}

/// Mean leaf count for a single `n`, without series arithmetic.
pub fn mean_leaves_at(n: usize) -> Rational {
    Rational::new(total_leaves(n), marked_count(n))
}

/// Generating function of marked trees of height at most `h` (`h = 0` gives
/// zero), from `p_1 = z`, `p_(h+1) = z + z^2/(1 - p_h) + 2z (p_h - z)/(1 - p_h)`.
pub fn height_le_series(h: usize, order: usize) -> Series {
    let mut p = Series::zero(Var::Z, order);
    if h == 0 {
        return p;
    }
    let z = Series::variable(Var::Z, order);
    p = z.clone();
    for _ in 1..h {
        p = height_step(&p, &z);
    }
    p
}

fn height_step(p: &Series, z: &Series) -> Series {
    let order = p.order();
    let seq = (&Series::one(Var::Z, order) - p).inverse().expect("p has no constant term");
    let leaf_last = &z.shift_up(1) * &seq;
    let heavy_last = (&(z * &(p - z)) * &seq).scale(&Rational::from(2i64));
    &(z + &leaf_last) + &heavy_last
}

/// Integer polynomial product truncated to `order`.
fn poly_mul_trunc(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let len = (a.len() + b.len()).saturating_sub(1).min(order + 1);
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `num / den` as an integer series to `order`; `den[0]` must be 1.
fn int_div(num: &[BigInt], den: &[BigInt], order: usize) -> Vec<BigInt> {
    debug_assert!(den[0].is_one());
    let mut q: Vec<BigInt> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut c = num.get(k).cloned().unwrap_or_default();
        for j in 1..=k.min(den.len() - 1) {
            if !den[j].is_zero() {
                c -= &den[j] * &q[k - j];
            }
        }
        q.push(c);
    }
    q
}

fn to_series(var: Var, coeffs: Vec<BigInt>, order: usize) -> Series {
    Series::new(var, coeffs.into_iter().map(Rational::from_integer).collect(), order)
}

/// `P = (1+2v)^(h-1)`, `Q = (v+2)^(h-1)` truncated to `order`.
fn closed_parts(h: usize, order: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut p = vec![BigInt::one()];
    let mut q = vec![BigInt::one()];
    for _ in 1..h {
        p = poly_mul_trunc(&p, &[BigInt::one(), BigInt::from(2)], order);
        q = poly_mul_trunc(&q, &[BigInt::from(2), BigInt::one()], order);
    }
    (p, q)
}

/// The closed form of `p_h` as a v-series:
/// `z (1+v) (P - v^h Q) / (P - v^(h+1) Q)` with `z = v / (1 + 3v + v^2)`.
pub fn height_le_closed_v(h: usize, order: usize) -> Series {
    assert!(h >= 1, "closed form needs h >= 1");
    let (p, q) = closed_parts(h, order);
    let minus_shift = |s: usize| -> Vec<BigInt> {
        (0..=order)
            .map(|k| {
                let pk = p.get(k).cloned().unwrap_or_default();
                if k >= s {
                    pk - q.get(k - s).cloned().unwrap_or_default()
                } else {
                    pk
                }
            })
            .collect()
    };
    let num = minus_shift(h);
    let den = minus_shift(h + 1);
    let ratio = int_div(&num, &den, order);
    // v (1+v) / (1 + 3v + v^2)
    let prefactor = int_div(&[BigInt::zero(), BigInt::one(), BigInt::one()], &kernel(), order);
    to_series(Var::V, poly_mul_trunc(&prefactor, &ratio, order), order)
}

fn kernel() -> Vec<BigInt> {
    vec![BigInt::one(), BigInt::from(3), BigInt::one()]
}

/// Closed form of `p_h` moved to the z-world.
pub fn height_le_closed(h: usize, order: usize) -> Series {
    SubstitutionFrame::new(order).to_z(&height_le_closed_v(h, order)).expect("composable")
}

/// Mean height `H_n` for `n = 1 ..= order` (index 0 unused), from the
/// height recursion in the z-world. Quadratic in `order` per height, so
/// intended for moderate orders.
pub fn mean_height_recursive(order: usize) -> Vec<Rational> {
    let a = solve_gf(GfFamily::Marked, order);
    let z = Series::variable(Var::Z, order);
    // sum over h = 0 ..= order of (A - p_h)
    let mut total = a.clone();
    let mut p = z.clone();
    for _ in 1..=order {
        total = &total + &(&a - &p);
        p = height_step(&p, &z);
    }
    let mut out = vec![Rational::zero()];
    out.extend((1..=order).map(|n| &total.coeff(n) / &a.coeff(n)));
    out
}

/// Mean height `H_n` for `n = 1 ..= order` (index 0 unused).
///
/// Works in the v-world with integer series: for `h >= 1`,
/// `A - p_h = v^(h+1) (1 - v^2) Q / ((1 + 3v + v^2) (P - v^(h+1) Q))`,
/// summed over `h`, then each coefficient is extracted with the Lagrange
/// formula.
pub fn mean_height(order: usize) -> Vec<Rational> {
    let n_max = order;
    let mut acc = vec![BigInt::zero(); n_max + 1];
    let mut p = vec![BigInt::one()];
    let mut q = vec![BigInt::one()];
    for h in 1..n_max {
        let m = n_max - h - 1;
        let den: Vec<BigInt> = (0..=m)
            .map(|k| {
                let pk = p.get(k).cloned().unwrap_or_default();
                if k > h {
                    pk - q.get(k - h - 1).cloned().unwrap_or_default()
                } else {
                    pk
                }
            })
            .collect();
        let quot = int_div(&q, &den, m);
        for (k, c) in quot.into_iter().enumerate() {
            acc[k + h + 1] += c;
        }
        p = poly_mul_trunc(&p, &[BigInt::one(), BigInt::from(2)], n_max);
        q = poly_mul_trunc(&q, &[BigInt::from(2), BigInt::one()], n_max);
    }
    // sum over h >= 0 of (A - p_h) = (v + v^2 + (1 - v^2) acc) / (1 + 3v + v^2)
    let mut num: Vec<BigInt> = (0..=n_max)
        .map(|k| {
            let below = if k >= 2 { acc[k - 2].clone() } else { BigInt::zero() };
            &acc[k] - below
        })
        .collect();
    for c in num.iter_mut().take(3).skip(1) {
        *c += 1;
    }
    let total = to_series(Var::V, int_div(&num, &kernel(), n_max), n_max);
    let subst = Substitution::with_var(1, Var::V);
    let mut out = vec![Rational::zero()];
    out.extend((1..=n_max).map(|n| &subst.extract(&total, n) / &Rational::from_integer(marked_count(n))));
    out
}
