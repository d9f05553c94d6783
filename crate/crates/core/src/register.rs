//! Horton-Strahler numbers (register function) of unary-binary trees.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::enumerate::{count_ub_closed, hex_trees, ub_trees, Family};
use crate::exact::Rational;
use crate::series::{Series, Substitution, Var};
use crate::structures::{HexTree, UbTree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegisterError {
    #[error("the dyadic valuation of 0 is undefined")]
    ZeroValuation,
    #[error("register distributions are defined for `ub` and `hex`, not `{0}`")]
    UnsupportedFamily(Family),
    #[error("S_p needs p >= 1")]
    PTooSmall,
}

/// `reg(Empty) = 0`; a binary node takes the larger child value, plus one
/// on ties; a unary node passes its child's value through.
pub fn hs_number(t: &UbTree) -> u32 {
    match t {
        UbTree::Empty => 0,
        UbTree::Binary(l, r) => {
            let (x, y) = (hs_number(l), hs_number(r));
            if x == y {
                x + 1
            } else {
                x.max(y)
            }
        }
        UbTree::Unary(_, c) => hs_number(c),
    }
}

/// Register of a hex-tree, evaluated natively. Agrees with
/// `hs_number(&t.to_ub())`.
pub fn hs_number_hex(t: &HexTree) -> u32 {
    match t {
        HexTree::Box => 0,
        HexTree::Node => 1,
        HexTree::Binary(l, r) => {
            let (x, y) = (hs_number_hex(l), hs_number_hex(r));
            if x == y {
                x + 1
            } else {
                x.max(y)
            }
        }
        HexTree::UnaryLeft(c) | HexTree::UnaryMiddle(c) | HexTree::UnaryRight(c) => hs_number_hex(c),
    }
}

/// Histogram of register values over all trees of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegisterDistribution {
    pub n: usize,
    pub colours: u32,
    pub counts: BTreeMap<u32, BigInt>,
}

impl RegisterDistribution {
    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    pub fn mean(&self) -> Rational {
        let weighted: BigInt = self.counts.iter().map(|(p, c)| c * BigInt::from(*p)).sum();
        Rational::new(weighted, self.total())
    }
}

/// Brute-force distribution over the generated trees of size `n`.
pub fn hs_distribution(family: Family, n: usize) -> Result<RegisterDistribution, RegisterError> {
    let mut counts: BTreeMap<u32, BigInt> = BTreeMap::new();
    let mut bump = |p: u32| *counts.entry(p).or_insert_with(BigInt::zero) += 1;
    let colours = match family {
        Family::Ub(a) => {
            ub_trees(a, n).for_each(|t| bump(hs_number(&t)));
            a
        }
        Family::Hex => {
            hex_trees(n).for_each(|t| bump(hs_number_hex(&t)));
            1
        }
        other => return Err(RegisterError::UnsupportedFamily(other)),
    };
    Ok(RegisterDistribution { n, colours, counts })
}

/// Distribution read off the closed-form series, without generating trees.
pub fn hs_distribution_series(a: u64, n: usize) -> RegisterDistribution {
    let subst = Substitution::new(a);
    let mut counts = BTreeMap::new();
    let mut p = 0u32;
    while (1usize << p) <= n + 1 {
        let c = subst.extract(&rp_u(p, n), n).to_integer().expect("integral count");
        if !c.is_zero() {
            counts.insert(p, c);
        }
        p += 1;
    }
    RegisterDistribution { n, colours: a as u32, counts }
}

fn sparse_u(order: usize, terms: impl Iterator<Item = (usize, i64)>) -> Series {
    let mut coeffs = vec![Rational::zero(); order + 1];
    for (k, c) in terms {
        if k <= order {
            coeffs[k] += &Rational::from(c);
        }
    }
    Series::new(Var::U, coeffs, order)
}

/// `(1 - u^2) * sum of u^e` over the given exponents (all below `order + 1`
/// are used; the iterator must be increasing).
fn times_one_minus_u2(order: usize, exps: impl Iterator<Item = usize>) -> Series {
    let exps: Vec<usize> = exps.take_while(|&e| e <= order).collect();
    sparse_u(order, exps.iter().flat_map(|&e| [(e, 1), (e + 2, -1)]))
}

/// `R_p` in the u-world: `(1 - u^2)/u * u^(2^p) / (1 - u^(2^(p+1)))`.
pub fn rp_u(p: u32, order: usize) -> Series {
    let first = (1usize << p) - 1;
    let step = 1usize << (p + 1);
    times_one_minus_u2(order, (0..).map(move |k| first + k * step))
}

/// `S_p` in the u-world: `(1 - u^2)/u * u^(2^p) / (1 - u^(2^p))`.
pub fn sp_u(p: u32, order: usize) -> Result<Series, RegisterError> {
    if p == 0 {
        return Err(RegisterError::PTooSmall);
    }
    let step = 1usize << p;
    Ok(times_one_minus_u2(order, (1..).map(move |k| k * step - 1)))
}

/// `sum_p S_p = (1 - u^2)/u * sum_m v2(m) u^m` in the u-world.
pub fn sum_sp_u(order: usize) -> Series {
    let terms = (1..=order + 1).flat_map(|m| {
        let v = m.trailing_zeros() as i64;
        [(m - 1, v), (m + 1, -v)]
    });
    sparse_u(order, terms)
}

/// Generating function of trees with register exactly `p`.
pub fn rp_series(p: u32, a: u64, order: usize) -> Series {
    Substitution::new(a).to_z(&rp_u(p, order)).expect("u(z) has no constant term")
}

/// Generating function of trees with register at least `p >= 1`.
pub fn sp_series(p: u32, a: u64, order: usize) -> Result<Series, RegisterError> {
    Ok(Substitution::new(a).to_z(&sp_u(p, order)?).expect("u(z) has no constant term"))
}

/// `N(z) = 1 + u(z)`, all trees.
fn all_trees_u(order: usize) -> Series {
    Series::from_ints(Var::U, &[1, 1], order)
}

/// Exact mean register `E_n` for `n = 1 ..= order` (index 0 is unused and
/// set to zero).
pub fn mean_register_series(a: u64, order: usize) -> Vec<Rational> {
    let subst = Substitution::new(a);
    let num = subst.to_z(&sum_sp_u(order)).expect("composable");
    let den = subst.to_z(&all_trees_u(order)).expect("composable");
    let mut out = vec![Rational::zero()];
    out.extend((1..=order).map(|n| &num.coeff(n) / &den.coeff(n)));
    out
}

/// Exact mean register of trees with `n >= 1` nodes, by direct coefficient
/// extraction (fast for large `n`).
pub fn mean_register(n: usize, a: u64) -> Rational {
    assert!(n >= 1, "mean register needs n >= 1");
    let subst = Substitution::new(a);
    let num = subst.extract(&sum_sp_u(n), n);
    &num / &Rational::from_integer(count_ub_closed(n, a))
}

/// Largest `k` with `2^k | n`.
pub fn dyadic_valuation(n: u64) -> Result<u32, RegisterError> {
    if n == 0 {
        Err(RegisterError::ZeroValuation)
    } else {
        Ok(n.trailing_zeros())
    }
}

/// Both sides of
/// `sum_{j<p} u^(2^j)/(1 - u^(2^(j+1))) = u/(1-u) - u^(2^p)/(1 - u^(2^p))`
/// as u-series to `order`.
pub fn telescoping_sides(p: u32, order: usize) -> (Series, Series) {
    let lhs_terms = (0..p).flat_map(|j| {
        let base = 1usize << j;
        (0..).map(move |k| base * (2 * k + 1)).take_while(move |&e| e <= order).map(|e| (e, 1))
    });
    let lhs = sparse_u(order, lhs_terms);
    let step = 1usize << p;
    let rhs_terms = (1..=order)
        .map(|m| (m, 1))
        .chain((1..).map(move |k| k * step).take_while(move |&e| e <= order).map(|e| (e, -1)));
    (lhs, sparse_u(order, rhs_terms))
}

pub fn telescoping_check(p: u32, order: usize) -> bool {
    let (lhs, rhs) = telescoping_sides(p, order);
    lhs == rhs
}

/// `R_p - (z R_(p-1)^2 + 2 z R_p sum_{j<p} R_j + a z R_p)` for `p >= 1`;
/// zero when the closed form satisfies the grammar's recursion.
pub fn recursion_residual(p: u32, a: u64, order: usize) -> Series {
    assert!(p >= 1);
    let rs: Vec<Series> = (0..=p).map(|q| rp_series(q, a, order)).collect();
    let z = Series::variable(Var::Z, order);
    let below = rs[..p as usize].iter().fold(Series::zero(Var::Z, order), |acc, r| &acc + r);
    let rp = &rs[p as usize];
    let prev = &rs[p as usize - 1];
    let two = Rational::from(2i64);
    let rhs = &(&(&z * &(prev * prev)) + &(&z * &(rp * &below)).scale(&two)) + &(&z * rp).scale(&Rational::from(a));
    rp - &rhs
}
