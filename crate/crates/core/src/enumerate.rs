//! Exhaustive generators and exact counters for every family.
//!
//! Generation order is deterministic and recursive:
//! * unary-binary trees: `empty`, then binary nodes (left subtree size
//!   ascending, then left subtree order, then right subtree order), then
//!   unary nodes (colour ascending, then child order);
//! * hex-trees: `box`/`node`, then binary nodes as above, then
//!   left, middle and right unary nodes;
//! * forest-shaped trees: children listed by first-child size ascending,
//!   then first-child order, then the order of the remaining forest; for
//!   marked trees the plain variant precedes the red one, for multi-edge
//!   trees smaller first-edge weights come first;
//! * paths: lexicographic in the step order `U < D < L < Hr < Hg < Hb`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{solve_gf, trinomial_row, GfFamily};
use crate::structures::{
    HexTree, LatticePath, Mark, MarkedTree, MultiEdgeTree, Object, OrderedTree, PathFamily, Step, UbTree,
};

/// A countable family. The size parameter `n` means: nodes for `ub`, `hex`
/// and `marked`; total weight for `multi_edge`; edges for `ordered`;
/// semilength for `dyck` and `skew_dyck`; length for Motzkin paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ub(u32),
    Hex,
    Marked,
    MultiEdge,
    Ordered,
    Dyck,
    SkewDyck,
    Motzkin2,
    Motzkin3,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyParseError {
    #[error("unknown family `{0}`")]
    Unknown(String),
}

impl FromStr for Family {
    type Err = FamilyParseError;

    /// Accepts the plain names; `ub` defaults to one colour, `ub:<a>` sets it.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(a) = s.strip_prefix("ub:") {
            return a.parse().map(Family::Ub).map_err(|_| FamilyParseError::Unknown(s.into()));
        }
        Ok(match s {
            "ub" => Family::Ub(1),
            "hex" => Family::Hex,
            "marked" => Family::Marked,
            "multi_edge" => Family::MultiEdge,
            "ordered" => Family::Ordered,
            "dyck" => Family::Dyck,
            "skew_dyck" => Family::SkewDyck,
            "motzkin2" => Family::Motzkin2,
            "motzkin3" => Family::Motzkin3,
            _ => return Err(FamilyParseError::Unknown(s.into())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Ub(_) => "ub",
            Family::Hex => "hex",
            Family::Marked => "marked",
            Family::MultiEdge => "multi_edge",
            Family::Ordered => "ordered",
            Family::Dyck => "dyck",
            Family::SkewDyck => "skew_dyck",
            Family::Motzkin2 => "motzkin2",
            Family::Motzkin3 => "motzkin3",
        };
        f.write_str(name)
    }
}

impl Family {
    pub const NAMES: [&'static str; 9] =
        ["ub", "hex", "marked", "multi_edge", "ordered", "dyck", "skew_dyck", "motzkin2", "motzkin3"];

    /// Replace the colour count of `ub`; other families are unchanged.
    pub fn with_colours(self, a: u32) -> Self {
        match self {
            Family::Ub(_) => Family::Ub(a),
            other => other,
        }
    }

    /// Generating-function equation and coefficient index holding the count
    /// of size `n`.
    pub fn gf_index(self, n: usize) -> (GfFamily, usize) {
        match self {
            Family::Ub(a) => (GfFamily::UnaryBinary(a as u64), n),
            Family::Hex | Family::SkewDyck => (GfFamily::Hex, n),
            Family::Marked => (GfFamily::Marked, n),
            Family::MultiEdge => (GfFamily::MultiEdge, n),
            Family::Ordered | Family::Dyck => (GfFamily::Binary, n),
            Family::Motzkin2 => (GfFamily::Binary, n + 1),
            Family::Motzkin3 => (GfFamily::Motzkin3, n),
        }
    }

    /// Count via the generating function rather than the recurrence.
    pub fn gf_count(self, n: usize) -> BigInt {
        let (gf, k) = self.gf_index(n);
        solve_gf(gf, k).coeff(k).to_integer().expect("counting series is integral")
    }
}

/// Every object of `family` and size `n`, streamed in the documented order.
pub fn generate(family: Family, n: usize) -> Box<dyn Iterator<Item = Object> + Send> {
    match family {
        Family::Ub(a) => Box::new(ub_trees(a, n).map(Object::Ub)),
        Family::Hex => Box::new(hex_trees(n).map(Object::Hex)),
        Family::Marked => Box::new(marked_trees(n).into_iter().map(Object::Marked)),
        Family::MultiEdge => Box::new(multi_edge_trees(n).into_iter().map(Object::MultiEdge)),
        Family::Ordered => Box::new(ordered_trees(n).into_iter().map(Object::Ordered)),
        Family::Dyck | Family::SkewDyck | Family::Motzkin2 | Family::Motzkin3 => {
            let pf = path_family(family).expect("path family");
            Box::new(paths(pf, n).map(Object::Path))
        }
    }
}

fn path_family(family: Family) -> Option<PathFamily> {
    match family {
        Family::Dyck => Some(PathFamily::Dyck),
        Family::SkewDyck => Some(PathFamily::SkewDyck),
        Family::Motzkin2 => Some(PathFamily::Motzkin2),
        Family::Motzkin3 => Some(PathFamily::Motzkin3),
        _ => None,
    }
}

type Table<T> = Arc<Vec<Vec<Arc<T>>>>;

/// All `(left, right)` pairs with the given size splits, drawn from `table`.
fn pairs<T: Send + Sync + 'static>(
    table: Table<T>,
    splits: Vec<(usize, usize)>,
) -> impl Iterator<Item = (Arc<T>, Arc<T>)> + Send {
    splits.into_iter().flat_map(move |(p, q)| {
        let t = table.clone();
        (0..t[p].len()).flat_map(move |i| {
            let t = t.clone();
            (0..t[q].len()).map(move |j| (t[p][i].clone(), t[q][j].clone()))
        })
    })
}

fn singles<T: Send + Sync + 'static>(table: Table<T>, size: usize) -> impl Iterator<Item = Arc<T>> + Send {
    (0..table[size].len()).map(move |i| table[size][i].clone())
}

fn ub_level(table: Table<UbTree>, a: u32, n: usize) -> Box<dyn Iterator<Item = UbTree> + Send> {
    if n == 0 {
        return Box::new(std::iter::once(UbTree::Empty));
    }
    let splits = (0..n).map(|k| (k, n - 1 - k)).collect();
    let binary = pairs(table.clone(), splits).map(|(l, r)| UbTree::Binary(l, r));
    let colours = (1..=a).filter(move |_| n >= 2);
    let unary = colours.flat_map(move |c| singles(table.clone(), n - 1).map(move |t| UbTree::Unary(c, t)));
    Box::new(binary.chain(unary))
}

/// Unary-binary trees with `a` colours and `n` nodes.
pub fn ub_trees(a: u32, n: usize) -> Box<dyn Iterator<Item = UbTree> + Send> {
    let mut table: Vec<Vec<Arc<UbTree>>> = Vec::with_capacity(n);
    for k in 0..n {
        let level = ub_level(Arc::new(table.clone()), a, k).map(Arc::new).collect();
        table.push(level);
    }
    ub_level(Arc::new(table), a, n)
}

fn hex_level(table: Table<HexTree>, n: usize) -> Box<dyn Iterator<Item = HexTree> + Send> {
    match n {
        0 => return Box::new(std::iter::once(HexTree::Box)),
        1 => return Box::new(std::iter::once(HexTree::Node)),
        _ => {}
    }
    let splits = (1..n - 1).map(|k| (k, n - 1 - k)).collect();
    let binary = pairs(table.clone(), splits).map(|(l, r)| HexTree::Binary(l, r));
    let ctors: [fn(Arc<HexTree>) -> HexTree; 3] = [HexTree::UnaryLeft, HexTree::UnaryMiddle, HexTree::UnaryRight];
    let unary = ctors.into_iter().flat_map(move |ctor| singles(table.clone(), n - 1).map(ctor));
    Box::new(binary.chain(unary))
}

/// Hex-trees with `n` nodes.
pub fn hex_trees(n: usize) -> Box<dyn Iterator<Item = HexTree> + Send> {
    let mut table: Vec<Vec<Arc<HexTree>>> = Vec::with_capacity(n);
    for k in 0..n {
        let level = hex_level(Arc::new(table.clone()), k).map(Arc::new).collect();
        table.push(level);
    }
    hex_level(Arc::new(table), n)
}

/// Prepend each possible first element to each forest of the remaining size.
fn extend_forests<E: Clone>(firsts: &[(E, usize)], forests: &[Vec<Vec<E>>], m: usize) -> Vec<Vec<E>> {
    let mut out = Vec::new();
    for (first, used) in firsts {
        for rest in &forests[m - used] {
            let mut f = Vec::with_capacity(rest.len() + 1);
            f.push(first.clone());
            f.extend(rest.iter().cloned());
            out.push(f);
        }
    }
    out
}

/// Marked ordered trees with `n >= 1` nodes (none for `n = 0`).
pub fn marked_trees(n: usize) -> Vec<MarkedTree> {
    if n == 0 {
        return Vec::new();
    }
    // trees[s]: trees with s nodes; forests[m]: plain-joined forests with m nodes
    let mut trees: Vec<Vec<MarkedTree>> = vec![Vec::new()];
    let mut forests: Vec<Vec<Vec<(Mark, MarkedTree)>>> = vec![vec![Vec::new()]];
    for s in 1..=n {
        let mut level = Vec::new();
        for f in &forests[s - 1] {
            level.push(MarkedTree::new(f.clone()));
            if f.last().is_some_and(|(_, c)| !c.is_leaf()) {
                let mut red = f.clone();
                red.last_mut().expect("non-empty").0 = Mark::Red;
                level.push(MarkedTree::new(red));
            }
        }
        trees.push(level);
        if s == n {
            break;
        }
        let firsts: Vec<((Mark, MarkedTree), usize)> =
            (1..=s).flat_map(|k| trees[k].iter().map(move |t| ((Mark::Plain, t.clone()), k))).collect();
        let next = extend_forests(&firsts, &forests, s);
        forests.push(next);
    }
    trees.pop().unwrap_or_default()
}

/// Forests of weighted edges; `max_weight = Some(1)` gives plain ordered trees.
fn weighted_forests(n: usize, max_weight: Option<u64>) -> Vec<Vec<(u64, MultiEdgeTree)>> {
    let mut forests: Vec<Vec<Vec<(u64, MultiEdgeTree)>>> = vec![vec![Vec::new()]];
    for m in 1..=n {
        let mut firsts = Vec::new();
        for w in 1..=m {
            if max_weight.is_some_and(|mw| w as u64 > mw) {
                break;
            }
            for (s, level) in forests.iter().enumerate().take(m - w + 1) {
                for f in level {
                    firsts.push(((w as u64, MultiEdgeTree::new(f.clone())), w + s));
                }
            }
        }
        let next = extend_forests(&firsts, &forests, m);
        forests.push(next);
    }
    forests.pop().unwrap_or_default()
}

/// Multi-edge trees of total weight `n`.
pub fn multi_edge_trees(n: usize) -> Vec<MultiEdgeTree> {
    weighted_forests(n, None).into_iter().map(MultiEdgeTree::new).collect()
}

/// Ordered trees with `n` edges.
pub fn ordered_trees(n: usize) -> Vec<OrderedTree> {
    weighted_forests(n, Some(1)).into_iter().map(|f| MultiEdgeTree::new(f).shape()).collect()
}

/// Depth-first path enumeration with feasibility pruning.
pub struct PathIter {
    family: PathFamily,
    len: usize,
    ups: usize,
    stack: Vec<(Vec<Step>, i64, usize)>,
}

impl PathIter {
    fn successors(&self, steps: &[Step], h: i64, ups: usize) -> Vec<Step> {
        let remaining = (self.len - steps.len()) as i64;
        let last = steps.last().copied();
        let mut out = Vec::new();
        for &s in self.family.allowed() {
            let (_, dy) = s.delta();
            let nh = h + dy;
            let nups = ups + usize::from(s == Step::U);
            if nh < 0 || nh > remaining - 1 {
                continue;
            }
            if matches!(self.family, PathFamily::Dyck | PathFamily::SkewDyck) {
                if nups > self.ups {
                    continue;
                }
                if (s == Step::L && last == Some(Step::U)) || (s == Step::U && last == Some(Step::L)) {
                    continue;
                }
                // remaining ups must be matched by down steps
                let ups_left = (self.ups - nups) as i64;
                if nh + 2 * ups_left != remaining - 1 {
                    continue;
                }
            }
            out.push(s);
        }
        out
    }
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        while let Some((steps, h, ups)) = self.stack.pop() {
            if steps.len() == self.len {
                return Some(LatticePath::new(self.family, steps));
            }
            for s in self.successors(&steps, h, ups).into_iter().rev() {
                let mut next = steps.clone();
                next.push(s);
                self.stack.push((next, h + s.delta().1, ups + usize::from(s == Step::U)));
            }
        }
        None
    }
}

/// Paths of the family; `n` is the semilength for Dyck and skew Dyck
/// paths, the length for Motzkin paths.
pub fn paths(family: PathFamily, n: usize) -> PathIter {
    let len = match family {
        PathFamily::Dyck | PathFamily::SkewDyck => 2 * n,
        PathFamily::Motzkin2 | PathFamily::Motzkin3 => n,
    };
    PathIter { family, len, ups: n, stack: vec![(Vec::new(), 0, 0)] }
}

/// Exact count of objects of size `n`.
pub fn count(family: Family, n: usize) -> BigInt {
    counts(family, n).pop().unwrap_or_else(BigInt::zero)
}

/// Counts for sizes `0 ..= n`, from memoized recurrences.
pub fn counts(family: Family, n: usize) -> Vec<BigInt> {
    match family {
        Family::Ub(a) => ub_counts(a, n),
        Family::Hex => hex_counts(n),
        Family::Marked => marked_counts(n),
        Family::MultiEdge => weighted_counts(n, false),
        Family::Ordered => weighted_counts(n, true),
        Family::Dyck => (0..=n).map(|k| path_count(PathFamily::Dyck, k)).collect(),
        Family::SkewDyck => (0..=n).map(skew_count).collect(),
        Family::Motzkin2 => (0..=n).map(|k| path_count(PathFamily::Motzkin2, k)).collect(),
        Family::Motzkin3 => (0..=n).map(|k| path_count(PathFamily::Motzkin3, k)).collect(),
    }
}

fn convolve(c: &[BigInt], lo: usize, total: usize) -> BigInt {
    // sum over k + l = total, k >= lo, l >= lo, of c[k] c[l]
    (lo..=total.saturating_sub(lo)).map(|k| &c[k] * &c[total - k]).sum()
}

fn ub_counts(a: u32, n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for m in 1..=n {
        let mut v = convolve(&c, 0, m - 1);
        if m >= 2 {
            v += &c[m - 1] * BigInt::from(a);
        }
        c.push(v);
    }
    c
}

fn hex_counts(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one(), BigInt::one()];
    for m in 2..=n {
        let v = if m >= 3 { convolve(&c, 1, m - 1) } else { BigInt::zero() } + &c[m - 1] * 3;
        c.push(v);
    }
    c.truncate(n + 1);
    c
}

fn marked_counts(n: usize) -> Vec<BigInt> {
    // t[s]: trees with s nodes; p[m]: forests of total m nodes, all plain
    let mut t = vec![BigInt::zero()];
    let mut p = vec![BigInt::one()];
    for s in 1..=n {
        let m = s - 1;
        let heavy_last: BigInt = (2..=m).map(|k| &t[k] * &p[m - k]).sum();
        t.push(&p[m] + heavy_last);
        let next: BigInt = (1..=s).map(|k| &t[k] * &p[s - k]).sum();
        p.push(next);
    }
    t
}

fn weighted_counts(n: usize, unit_weights: bool) -> Vec<BigInt> {
    // f[m]: forests (= trees) of total weight m
    let mut f = vec![BigInt::one()];
    for m in 1..=n {
        let max_w = if unit_weights { 1 } else { m };
        let mut v = BigInt::zero();
        for w in 1..=max_w {
            for s in 0..=(m - w) {
                v += &f[s] * &f[m - w - s];
            }
        }
        f.push(v);
    }
    f
}

fn path_count(family: PathFamily, n: usize) -> BigInt {
    let len = match family {
        PathFamily::Dyck | PathFamily::SkewDyck => 2 * n,
        _ => n,
    };
    let flat = match family {
        PathFamily::Motzkin2 => 2,
        PathFamily::Motzkin3 => 3,
        _ => 0,
    };
    let mut row = vec![BigInt::zero(); len + 2];
    row[0] = BigInt::one();
    for _ in 0..len {
        let mut next = vec![BigInt::zero(); len + 2];
        for h in 0..=len {
            if row[h].is_zero() {
                continue;
            }
            next[h + 1] += &row[h];
            if h > 0 {
                next[h - 1] += &row[h];
            }
            if flat > 0 {
                next[h] += &row[h] * flat;
            }
        }
        row = next;
    }
    row.swap_remove(0)
}

/// Skew Dyck paths of semilength `n`: no factor `UL` or `LU`.
fn skew_count(n: usize) -> BigInt {
    // state[h][last]: last = 0 for U, 1 for D, 2 for L (start counts as D)
    let len = 2 * n;
    let mut state = vec![[BigInt::zero(), BigInt::zero(), BigInt::zero()]; len + 2];
    state[0][1] = BigInt::one();
    for _ in 0..len {
        let mut next = vec![[BigInt::zero(), BigInt::zero(), BigInt::zero()]; len + 2];
        for h in 0..=len {
            let [u, d, l] = &state[h];
            if !(u.is_zero() && d.is_zero()) {
                next[h + 1][0] += u + d;
            }
            if h > 0 {
                next[h - 1][1] += u + d + l;
                next[h - 1][2] += d + l;
            }
        }
        state = next;
    }
    let [u, d, l] = &state[0];
    u + d + l
}

/// `T_n + T_(n-1) - T_(n-2) - T_(n-3)` with `T_k = [x^k] (1 + (a+2)x + x^2)^(n-1)`.
pub fn count_ub_closed(n: usize, a: u64) -> BigInt {
    assert!(n >= 1, "closed form needs n >= 1");
    let row = trinomial_row(n as u64 - 1, a + 2);
    let t = |k: isize| -> BigInt {
        if k < 0 {
            BigInt::zero()
        } else {
            row.get(k as usize).cloned().unwrap_or_default()
        }
    };
    let n = n as isize;
    t(n) + t(n - 1) - t(n - 2) - t(n - 3)
}

/// The hex-tree counts for `n = 0 ..= 13`.
pub const A002212_PREFIX: [u64; 14] = [1, 1, 3, 10, 36, 137, 543, 2219, 9285, 39587, 171369, 751236, 3328218, 14878455];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OeisReport {
    Ok { terms: usize },
    Mismatch { index: usize, expected: BigInt, found: BigInt },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("at most {max} reference terms are available, {requested} requested", max = A002212_PREFIX.len())]
pub struct TooManyTerms {
    pub requested: usize,
}

/// Compare the hex-tree counter against the reference prefix.
pub fn oeis_check(terms: usize) -> Result<OeisReport, TooManyTerms> {
    let computed = hex_counts(terms.max(1) - 1);
    oeis_check_with(terms, |n| computed[n].clone())
}

/// Same check with an arbitrary counter, reporting its first wrong index.
pub fn oeis_check_with(terms: usize, counter: impl Fn(usize) -> BigInt) -> Result<OeisReport, TooManyTerms> {
    if terms > A002212_PREFIX.len() {
        return Err(TooManyTerms { requested: terms });
    }
    for (index, &expected) in A002212_PREFIX.iter().enumerate().take(terms) {
        let found = counter(index);
        let expected = BigInt::from(expected);
        if found != expected {
            return Ok(OeisReport::Mismatch { index, expected, found });
        }
    }
    Ok(OeisReport::Ok { terms })
}
