//! Size-preserving correspondences between the families, in both directions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::structures::{LatticePath, Mark, MarkedTree, MultiEdgeTree, Object, OrderedTree, PathFamily, Step, UbTree};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("`{bijection}` expects {expected} as input")]
    WrongInput { bijection: Bijection, expected: &'static str },
    #[error("not in the image of `{bijection}`: {reason}")]
    NotInImage { bijection: Bijection, reason: String },
    #[error("unknown bijection `{0}`")]
    Unknown(String),
}

/// Named bijections; the forward direction is written first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bijection {
    /// marked ordered tree → skew Dyck path
    Skew,
    /// ordered tree → Dyck path
    Dyck,
    /// Dyck path → 2-Motzkin path
    Motzkin2,
    /// multi-edge tree → 3-Motzkin path
    Motzkin3,
    /// multi-edge tree → unary-binary tree with one colour
    Ub,
}

impl Bijection {
    pub const ALL: [Bijection; 5] =
        [Bijection::Skew, Bijection::Dyck, Bijection::Motzkin2, Bijection::Motzkin3, Bijection::Ub];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Skew => "skew",
            Bijection::Dyck => "dyck",
            Bijection::Motzkin2 => "motzkin2",
            Bijection::Motzkin3 => "motzkin3",
            Bijection::Ub => "ub",
        }
    }

    pub fn forward(self, object: &Object) -> Result<Object, BijectionError> {
        let wrong = |expected| BijectionError::WrongInput { bijection: self, expected };
        match (self, object) {
            (Bijection::Skew, Object::Marked(t)) => {
                self.require_valid(t.validate().is_ok(), "invalid marked tree")?;
                Ok(Object::Path(marked_tree_to_skew(t)))
            }
            (Bijection::Dyck, Object::Ordered(t)) => Ok(Object::Path(ordered_to_dyck(t))),
            (Bijection::Motzkin2, Object::Path(p)) if p.family == PathFamily::Dyck => {
                dyck_to_motzkin2(p).map(Object::Path)
            }
            (Bijection::Motzkin3, Object::MultiEdge(t)) => {
                self.require_valid(t.validate().is_ok() && t.size() >= 1, "needs a valid tree of weight >= 1")?;
                Ok(Object::Path(multiedge_to_motzkin3(t)))
            }
            (Bijection::Ub, Object::MultiEdge(t)) => {
                self.require_valid(t.validate().is_ok(), "zero edge weight")?;
                Ok(Object::Ub(multiedge_to_ub(t)))
            }
            (Bijection::Skew, _) => Err(wrong("a marked tree")),
            (Bijection::Dyck, _) => Err(wrong("an ordered tree")),
            (Bijection::Motzkin2, _) => Err(wrong("a Dyck path")),
            (Bijection::Motzkin3 | Bijection::Ub, _) => Err(wrong("a multi-edge tree")),
        }
    }

    pub fn inverse(self, object: &Object) -> Result<Object, BijectionError> {
        let wrong = |expected| BijectionError::WrongInput { bijection: self, expected };
        match (self, object) {
            (Bijection::Skew, Object::Path(p)) => skew_to_marked_tree(p).map(Object::Marked),
            (Bijection::Dyck, Object::Path(p)) => dyck_to_ordered(p).map(Object::Ordered),
            (Bijection::Motzkin2, Object::Path(p)) => motzkin2_to_dyck(p).map(Object::Path),
            (Bijection::Motzkin3, Object::Path(p)) => motzkin3_to_multiedge(p).map(Object::MultiEdge),
            (Bijection::Ub, Object::Ub(t)) => ub_to_multiedge(t).map(Object::MultiEdge),
            (Bijection::Skew, _) => Err(wrong("a skew Dyck path")),
            (Bijection::Dyck, _) => Err(wrong("a Dyck path")),
            (Bijection::Motzkin2, _) => Err(wrong("a 2-Motzkin path")),
            (Bijection::Motzkin3, _) => Err(wrong("a 3-Motzkin path")),
            (Bijection::Ub, _) => Err(wrong("a unary-binary tree")),
        }
    }

    /// `inverse(forward(x))`, which must reproduce `x`.
    pub fn round_trip(self, object: &Object) -> Result<Object, BijectionError> {
        self.inverse(&self.forward(object)?)
    }

    fn require_valid(self, ok: bool, reason: &str) -> Result<(), BijectionError> {
        if ok {
            Ok(())
        } else {
            Err(BijectionError::NotInImage { bijection: self, reason: reason.into() })
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Bijection::ALL.into_iter().find(|b| b.name() == s).ok_or_else(|| BijectionError::Unknown(s.into()))
    }
}

fn not_in_image(bijection: Bijection, reason: impl Into<String>) -> BijectionError {
    BijectionError::NotInImage { bijection, reason: reason.into() }
}

/// Walk around the tree: down an edge is `U`, up a plain edge `D`, up a
/// red edge `L`.
pub fn marked_tree_to_skew(t: &MarkedTree) -> LatticePath {
    fn walk(t: &MarkedTree, out: &mut Vec<Step>) {
        for (mark, child) in &t.children {
            out.push(Step::U);
            walk(child, out);
            out.push(if *mark == Mark::Red { Step::L } else { Step::D });
        }
    }
    let mut steps = Vec::new();
    walk(t, &mut steps);
    LatticePath::new(PathFamily::SkewDyck, steps)
}

/// Read `U` as opening an edge, `D` as closing a plain edge and `L` as
/// closing a red edge.
pub fn skew_to_marked_tree(p: &LatticePath) -> Result<MarkedTree, BijectionError> {
    let b = Bijection::Skew;
    if p.family != PathFamily::SkewDyck {
        return Err(not_in_image(b, format!("expected a skew_dyck path, got {}", p.family.name())));
    }
    let report = p.validate();
    if let Some(v) = report.violations.first() {
        return Err(not_in_image(b, v.to_string()));
    }
    let children = close_edges(&p.steps, |s| match s {
        Step::D => Some(Mark::Plain),
        Step::L => Some(Mark::Red),
        _ => None,
    })
    .ok_or_else(|| not_in_image(b, "unbalanced path"))?;
    let tree: MarkedTree = Labelled { children }.into();
    if let Some(v) = tree.validate().violations.first() {
        return Err(not_in_image(b, v.to_string()));
    }
    Ok(tree)
}

/// Rebuild a forest from an up/close word; `close` labels closing steps.
fn close_edges<E: Copy>(steps: &[Step], close: impl Fn(Step) -> Option<E>) -> Option<Vec<(E, Labelled<E>)>> {
    let mut stack: Vec<Vec<(E, Labelled<E>)>> = vec![Vec::new()];
    for &s in steps {
        if s == Step::U {
            stack.push(Vec::new());
        } else {
            let label = close(s)?;
            let children = stack.pop()?;
            stack.last_mut()?.push((label, Labelled { children }));
        }
    }
    if stack.len() == 1 {
        stack.pop()
    } else {
        None
    }
}

/// Generic labelled ordered tree used while parsing step words.
struct Labelled<E> {
    children: Vec<(E, Labelled<E>)>,
}

impl From<Labelled<Mark>> for MarkedTree {
    fn from(t: Labelled<Mark>) -> Self {
        MarkedTree::new(t.children.into_iter().map(|(m, c)| (m, c.into())).collect())
    }
}

impl From<Labelled<()>> for OrderedTree {
    fn from(t: Labelled<()>) -> Self {
        OrderedTree::new(t.children.into_iter().map(|(_, c)| c.into()).collect())
    }
}

/// Standard walk: down an edge is `U`, up is `D`.
pub fn ordered_to_dyck(t: &OrderedTree) -> LatticePath {
    fn walk(t: &OrderedTree, out: &mut Vec<Step>) {
        for child in &t.children {
            out.push(Step::U);
            walk(child, out);
            out.push(Step::D);
        }
    }
    let mut steps = Vec::new();
    walk(t, &mut steps);
    LatticePath::new(PathFamily::Dyck, steps)
}

pub fn dyck_to_ordered(p: &LatticePath) -> Result<OrderedTree, BijectionError> {
    let b = Bijection::Dyck;
    check_path(b, p, PathFamily::Dyck)?;
    let forest =
        close_edges(&p.steps, |s| (s == Step::D).then_some(())).ok_or_else(|| not_in_image(b, "unbalanced"))?;
    Ok(Labelled { children: forest }.into())
}

fn check_path(b: Bijection, p: &LatticePath, family: PathFamily) -> Result<(), BijectionError> {
    if p.family != family {
        return Err(not_in_image(b, format!("expected a {} path, got {}", family.name(), p.family.name())));
    }
    match p.validate().violations.first() {
        Some(v) => Err(not_in_image(b, v.to_string())),
        None => Ok(()),
    }
}

/// Drop the first and last step, then code the remaining steps in pairs:
/// `UU → U`, `DD → D`, `UD → Hr`, `DU → Hg`.
pub fn dyck_to_motzkin2(d: &LatticePath) -> Result<LatticePath, BijectionError> {
    let b = Bijection::Motzkin2;
    check_path(b, d, PathFamily::Dyck)?;
    if d.steps.is_empty() {
        return Err(not_in_image(b, "the empty Dyck path has no image"));
    }
    let inner = &d.steps[1..d.steps.len() - 1];
    let steps = inner
        .chunks(2)
        .map(|pair| match pair {
            [Step::U, Step::U] => Step::U,
            [Step::D, Step::D] => Step::D,
            [Step::U, Step::D] => Step::Hr,
            _ => Step::Hg,
        })
        .collect();
    Ok(LatticePath::new(PathFamily::Motzkin2, steps))
}

fn motzkin2_pairs(steps: &[Step]) -> LatticePath {
    let mut out = vec![Step::U];
    for s in steps {
        out.extend_from_slice(match s {
            Step::U => &[Step::U, Step::U],
            Step::D => &[Step::D, Step::D],
            Step::Hr => &[Step::U, Step::D],
            _ => &[Step::D, Step::U],
        });
    }
    out.push(Step::D);
    LatticePath::new(PathFamily::Dyck, out)
}

pub fn motzkin2_to_dyck(m: &LatticePath) -> Result<LatticePath, BijectionError> {
    check_path(Bijection::Motzkin2, m, PathFamily::Motzkin2)?;
    Ok(motzkin2_pairs(&m.steps))
}

/// Dyck walk of the underlying ordered tree, paired into a 2-Motzkin path,
/// then `a_i - 1` blue steps inserted in gap `i` for the `i`-th edge in
/// preorder (gap `i` precedes symbol `i`; the last gap is the end).
/// The tree must have at least one edge.
pub fn multiedge_to_motzkin3(t: &MultiEdgeTree) -> LatticePath {
    let symbols = dyck_to_motzkin2(&ordered_to_dyck(&t.shape())).expect("tree has at least one edge").steps;
    let weights = t.weights_preorder();
    let mut steps = Vec::with_capacity(t.size() as usize);
    for (i, w) in weights.iter().enumerate() {
        steps.extend(std::iter::repeat_n(Step::Hb, *w as usize - 1));
        if let Some(s) = symbols.get(i) {
            steps.push(*s);
        }
    }
    LatticePath::new(PathFamily::Motzkin3, steps)
}

pub fn motzkin3_to_multiedge(m: &LatticePath) -> Result<MultiEdgeTree, BijectionError> {
    let b = Bijection::Motzkin3;
    check_path(b, m, PathFamily::Motzkin3)?;
    let mut weights = Vec::new();
    let mut symbols = Vec::new();
    let mut run = 0u64;
    for &s in &m.steps {
        if s == Step::Hb {
            run += 1;
        } else {
            weights.push(run + 1);
            symbols.push(s);
            run = 0;
        }
    }
    weights.push(run + 1);
    let dyck = motzkin2_pairs(&symbols);
    let shape = dyck_to_ordered(&dyck).map_err(|_| not_in_image(b, "uncolouring failed"))?;
    let mut it = weights.into_iter();
    Ok(attach_weights(&shape, &mut it))
}

fn attach_weights(t: &OrderedTree, weights: &mut impl Iterator<Item = u64>) -> MultiEdgeTree {
    let mut children = Vec::with_capacity(t.children.len());
    for c in &t.children {
        let w = weights.next().expect("one weight per edge");
        children.push((w, attach_weights(c, weights)));
    }
    MultiEdgeTree::new(children)
}

/// Rotation correspondence: each edge becomes a binary node whose left
/// subtree holds the child's own children and whose right subtree holds the
/// later siblings. An edge of weight `a` gets `a - 1` unary nodes (colour 1)
/// spliced in directly above its node.
pub fn multiedge_to_ub(t: &MultiEdgeTree) -> UbTree {
    rotate(&t.children)
}

fn rotate(forest: &[(u64, MultiEdgeTree)]) -> UbTree {
    match forest.split_first() {
        None => UbTree::Empty,
        Some(((w, child), rest)) => {
            let node = UbTree::binary(rotate(&child.children), rotate(rest));
            (1..*w).fold(node, |t, _| UbTree::unary(1, t))
        }
    }
}

pub fn ub_to_multiedge(t: &UbTree) -> Result<MultiEdgeTree, BijectionError> {
    let report = t.validate(1);
    if let Some(v) = report.violations.first() {
        return Err(not_in_image(Bijection::Ub, v.to_string()));
    }
    Ok(MultiEdgeTree::new(unrotate(t)))
}

fn unrotate(t: &UbTree) -> Vec<(u64, MultiEdgeTree)> {
    let mut weight = 1;
    let mut node = t;
    while let UbTree::Unary(_, c) = node {
        weight += 1;
        node = c;
    }
    match node {
        UbTree::Empty => Vec::new(),
        UbTree::Binary(left, right) => {
            let mut forest = vec![(weight, MultiEdgeTree::new(unrotate(left)))];
            forest.extend(unrotate(right));
            forest
        }
        UbTree::Unary(..) => unreachable!("unary chain consumed above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn me(children: Vec<(u64, MultiEdgeTree)>) -> MultiEdgeTree {
        MultiEdgeTree::new(children)
    }

    fn leaf() -> MultiEdgeTree {
        MultiEdgeTree::leaf()
    }

    fn steps(family: PathFamily, word: &str) -> LatticePath {
        LatticePath::parse(family, word).unwrap()
    }

    fn chain_marked(marks: &[Mark]) -> MarkedTree {
        marks.iter().rev().fold(MarkedTree::leaf(), |t, m| MarkedTree::new(vec![(*m, t)]))
    }

    #[test]
    fn skew_examples() {
        use Mark::*;
        assert_eq!(marked_tree_to_skew(&chain_marked(&[Plain, Plain, Plain])).word(), "UUUDDD");
        assert_eq!(marked_tree_to_skew(&chain_marked(&[Red, Plain, Plain])).word(), "UUUDDL");
        assert_eq!(marked_tree_to_skew(&MarkedTree::leaf()).word(), "");
        let back = skew_to_marked_tree(&steps(PathFamily::SkewDyck, "UUUDLD")).unwrap();
        assert_eq!(back, chain_marked(&[Plain, Red, Plain]));
        assert!(skew_to_marked_tree(&steps(PathFamily::SkewDyck, "UUDLUDD")).is_err());
        assert!(skew_to_marked_tree(&steps(PathFamily::SkewDyck, "UL")).is_err());
    }

    #[test]
    fn motzkin2_examples() {
        let m = |w| dyck_to_motzkin2(&steps(PathFamily::Dyck, w)).unwrap().word();
        assert_eq!(m("UUUDDD"), "UD");
        assert_eq!(m("UUDD"), "Hr");
        assert_eq!(m("UDUD"), "Hg");
        assert_eq!(m("UD"), "");
        assert!(dyck_to_motzkin2(&steps(PathFamily::Dyck, "")).is_err());
    }

    #[test]
    fn motzkin3_examples() {
        let m = |t: &MultiEdgeTree| multiedge_to_motzkin3(t).word();
        assert_eq!(m(&me(vec![(2, me(vec![(1, leaf())]))])), "HbHr");
        assert_eq!(m(&me(vec![(1, me(vec![(2, leaf())]))])), "HrHb");
        assert_eq!(m(&me(vec![(3, leaf())])), "HbHb");
        let back = motzkin3_to_multiedge(&steps(PathFamily::Motzkin3, "HbHg")).unwrap();
        assert_eq!(back, me(vec![(2, leaf()), (1, leaf())]));
    }

    #[test]
    fn rotation_examples() {
        let chain3 = me(vec![(1, me(vec![(1, me(vec![(1, leaf())]))]))]);
        let left_chain = UbTree::binary(UbTree::binary(UbTree::leaf(), UbTree::Empty), UbTree::Empty);
        assert_eq!(multiedge_to_ub(&chain3), left_chain);
        let two_one = me(vec![(2, me(vec![(1, leaf())]))]);
        let expect = UbTree::unary(1, UbTree::binary(UbTree::leaf(), UbTree::Empty));
        assert_eq!(multiedge_to_ub(&two_one), expect);
        assert_eq!(ub_to_multiedge(&expect).unwrap(), two_one);
        let heavy = me(vec![(3, leaf())]);
        assert_eq!(multiedge_to_ub(&heavy), UbTree::unary(1, UbTree::unary(1, UbTree::leaf())));
        assert!(ub_to_multiedge(&UbTree::unary(2, UbTree::leaf())).is_err());
    }

    #[test]
    fn ordered_examples() {
        assert_eq!(ordered_to_dyck(&OrderedTree::chain(3)).word(), "UUUDDD");
        let cherry = OrderedTree::new(vec![OrderedTree::leaf(), OrderedTree::leaf()]);
        assert_eq!(ordered_to_dyck(&cherry).word(), "UDUD");
        let t = OrderedTree::new(vec![OrderedTree::chain(1), OrderedTree::leaf()]);
        assert_eq!(ordered_to_dyck(&t).word(), "UUDDUD");
        assert_eq!(dyck_to_ordered(&steps(PathFamily::Dyck, "UUDDUD")).unwrap(), t);
    }

    #[test]
    fn dispatch_by_name() {
        let b: Bijection = "motzkin3".parse().unwrap();
        let t = Object::MultiEdge(me(vec![(2, leaf()), (1, leaf())]));
        let p = b.forward(&t).unwrap();
        assert_eq!(p, Object::Path(steps(PathFamily::Motzkin3, "HbHg")));
        assert_eq!(b.inverse(&p).unwrap(), t);
        assert!(matches!(b.forward(&p), Err(BijectionError::WrongInput { .. })));
        assert!("rotation".parse::<Bijection>().is_err());
    }
}
