//! Object types for every family, their validity predicates and sizes.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

/// Unary-binary tree. Binary children may be empty; a unary node carries a
/// colour in `1..=a` and a non-empty child.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum UbTree {
    Empty,
    Binary(Arc<UbTree>, Arc<UbTree>),
    Unary(u32, Arc<UbTree>),
}

impl UbTree {
    pub fn binary(left: UbTree, right: UbTree) -> Self {
        UbTree::Binary(Arc::new(left), Arc::new(right))
    }

    pub fn unary(colour: u32, child: UbTree) -> Self {
        UbTree::Unary(colour, Arc::new(child))
    }

    /// `Binary(Empty, Empty)`.
    pub fn leaf() -> Self {
        UbTree::binary(UbTree::Empty, UbTree::Empty)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, UbTree::Empty)
    }

    /// Number of non-empty nodes.
    pub fn size(&self) -> usize {
        match self {
            UbTree::Empty => 0,
            UbTree::Binary(l, r) => 1 + l.size() + r.size(),
            UbTree::Unary(_, c) => 1 + c.size(),
        }
    }

    pub fn unary_count(&self) -> usize {
        match self {
            UbTree::Empty => 0,
            UbTree::Binary(l, r) => l.unary_count() + r.unary_count(),
            UbTree::Unary(_, c) => 1 + c.unary_count(),
        }
    }

    pub fn validate(&self, colours: u32) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check(colours, "$", &mut report);
        report
    }

    fn check(&self, colours: u32, at: &str, report: &mut ValidationReport) {
        match self {
            UbTree::Empty => {}
            UbTree::Binary(l, r) => {
                l.check(colours, &format!("{at}.children[0]"), report);
                r.check(colours, &format!("{at}.children[1]"), report);
            }
            UbTree::Unary(colour, c) => {
                if !(1..=colours).contains(colour) {
                    report.push(ViolationKind::ColourOutOfRange { colour: *colour, colours }, at);
                }
                if c.is_empty() {
                    report.push(ViolationKind::UnaryChildEmpty, at);
                }
                c.check(colours, &format!("{at}.children[0]"), report);
            }
        }
    }
}

/// Hex-tree in its native grammar: an empty box, a single node, a node with
/// two non-empty subtrees, or one of three unary node types over a non-empty
/// subtree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum HexTree {
    Box,
    Node,
    Binary(Arc<HexTree>, Arc<HexTree>),
    UnaryLeft(Arc<HexTree>),
    UnaryMiddle(Arc<HexTree>),
    UnaryRight(Arc<HexTree>),
}

impl HexTree {
    pub fn binary(left: HexTree, right: HexTree) -> Self {
        HexTree::Binary(Arc::new(left), Arc::new(right))
    }

    pub fn is_box(&self) -> bool {
        matches!(self, HexTree::Box)
    }

    /// Number of (circle) nodes.
    pub fn size(&self) -> usize {
        match self {
            HexTree::Box => 0,
            HexTree::Node => 1,
            HexTree::Binary(l, r) => 1 + l.size() + r.size(),
            HexTree::UnaryLeft(c) | HexTree::UnaryMiddle(c) | HexTree::UnaryRight(c) => 1 + c.size(),
        }
    }

    /// Embedding into unary-binary trees with one colour: a left (right)
    /// unary node becomes a binary node with an empty right (left) subtree,
    /// a middle unary node becomes the coloured unary node.
    pub fn to_ub(&self) -> UbTree {
        match self {
            HexTree::Box => UbTree::Empty,
            HexTree::Node => UbTree::leaf(),
            HexTree::Binary(l, r) => UbTree::binary(l.to_ub(), r.to_ub()),
            HexTree::UnaryLeft(c) => UbTree::binary(c.to_ub(), UbTree::Empty),
            HexTree::UnaryMiddle(c) => UbTree::unary(1, c.to_ub()),
            HexTree::UnaryRight(c) => UbTree::binary(UbTree::Empty, c.to_ub()),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check("$", &mut report);
        report
    }

    fn check(&self, at: &str, report: &mut ValidationReport) {
        let children: Vec<&HexTree> = match self {
            HexTree::Box | HexTree::Node => Vec::new(),
            HexTree::Binary(l, r) => vec![l, r],
            HexTree::UnaryLeft(c) | HexTree::UnaryMiddle(c) | HexTree::UnaryRight(c) => vec![c],
        };
        for (i, c) in children.into_iter().enumerate() {
            let path = format!("{at}.children[{i}]");
            if c.is_box() {
                report.push(ViolationKind::BoxChild, &path);
            }
            c.check(&path, report);
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Mark {
    Plain,
    Red,
}

/// Ordered tree whose rightmost edges (when not leading to a leaf) may be
/// marked red.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MarkedTree {
    pub children: Vec<(Mark, MarkedTree)>,
}

impl MarkedTree {
    pub fn leaf() -> Self {
        MarkedTree::default()
    }

    pub fn new(children: Vec<(Mark, MarkedTree)>) -> Self {
        MarkedTree { children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Node count.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|(_, c)| c.size()).sum::<usize>()
    }

    pub fn leaves(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(|(_, c)| c.leaves()).sum()
        }
    }

    /// Nodes on the longest root-to-leaf chain (a single node has height 1).
    pub fn height(&self) -> usize {
        1 + self.children.iter().map(|(_, c)| c.height()).max().unwrap_or(0)
    }

    pub fn red_edges(&self) -> usize {
        self.children.iter().map(|(m, c)| usize::from(*m == Mark::Red) + c.red_edges()).sum()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check("$", &mut report);
        report
    }

    fn check(&self, at: &str, report: &mut ValidationReport) {
        let last = self.children.len().saturating_sub(1);
        for (i, (mark, child)) in self.children.iter().enumerate() {
            let path = format!("{at}.children[{i}]");
            if *mark == Mark::Red {
                if i != last {
                    report.push(ViolationKind::RedNotRightmost, &path);
                }
                if child.is_leaf() {
                    report.push(ViolationKind::RedToLeaf, &path);
                }
            }
            child.check(&path, report);
        }
    }
}

/// Ordered tree with a positive integer weight on every edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiEdgeTree {
    pub children: Vec<(u64, MultiEdgeTree)>,
}

impl MultiEdgeTree {
    pub fn leaf() -> Self {
        MultiEdgeTree::default()
    }

    pub fn new(children: Vec<(u64, MultiEdgeTree)>) -> Self {
        MultiEdgeTree { children }
    }

    /// Total edge weight.
    pub fn size(&self) -> u64 {
        self.children.iter().map(|(w, c)| w + c.size()).sum()
    }

    /// Number of (weighted) edges, ignoring multiplicities.
    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|(_, c)| 1 + c.edge_count()).sum()
    }

    /// Edge weights in preorder.
    pub fn weights_preorder(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.collect_weights(&mut out);
        out
    }

    fn collect_weights(&self, out: &mut Vec<u64>) {
        for (w, c) in &self.children {
            out.push(*w);
            c.collect_weights(out);
        }
    }

    /// The underlying ordered tree.
    pub fn shape(&self) -> OrderedTree {
        OrderedTree { children: self.children.iter().map(|(_, c)| c.shape()).collect() }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check("$", &mut report);
        report
    }

    fn check(&self, at: &str, report: &mut ValidationReport) {
        for (i, (w, c)) in self.children.iter().enumerate() {
            let path = format!("{at}.children[{i}]");
            if *w == 0 {
                report.push(ViolationKind::ZeroWeight, &path);
            }
            c.check(&path, report);
        }
    }
}

/// Plain ordered (plane) tree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree::default()
    }

    pub fn new(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    /// Edge count.
    pub fn size(&self) -> usize {
        self.nodes() - 1
    }

    pub fn nodes(&self) -> usize {
        1 + self.children.iter().map(OrderedTree::nodes).sum::<usize>()
    }

    /// A path of `edges` edges.
    pub fn chain(edges: usize) -> Self {
        (0..edges).fold(OrderedTree::leaf(), |t, _| OrderedTree::new(vec![t]))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Step {
    /// `(1, 1)`
    U,
    /// `(1, -1)`
    D,
    /// `(-1, -1)`
    L,
    /// red `(1, 0)`
    Hr,
    /// green `(1, 0)`
    Hg,
    /// blue `(1, 0)`
    Hb,
}

impl Step {
    pub const ALL: [Step; 6] = [Step::U, Step::D, Step::L, Step::Hr, Step::Hg, Step::Hb];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::U => (1, 1),
            Step::D => (1, -1),
            Step::L => (-1, -1),
            Step::Hr | Step::Hg | Step::Hb => (1, 0),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Step::U => "U",
            Step::D => "D",
            Step::L => "L",
            Step::Hr => "Hr",
            Step::Hg => "Hg",
            Step::Hb => "Hb",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Step> {
        Step::ALL.into_iter().find(|st| st.symbol() == s)
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PathFamily {
    Dyck,
    SkewDyck,
    Motzkin2,
    Motzkin3,
}

impl PathFamily {
    pub fn allowed(self) -> &'static [Step] {
        match self {
            PathFamily::Dyck => &[Step::U, Step::D],
            PathFamily::SkewDyck => &[Step::U, Step::D, Step::L],
            PathFamily::Motzkin2 => &[Step::U, Step::D, Step::Hr, Step::Hg],
            PathFamily::Motzkin3 => &[Step::U, Step::D, Step::Hr, Step::Hg, Step::Hb],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PathFamily::Dyck => "dyck",
            PathFamily::SkewDyck => "skew_dyck",
            PathFamily::Motzkin2 => "motzkin2",
            PathFamily::Motzkin3 => "motzkin3",
        }
    }

    pub fn from_name(s: &str) -> Option<PathFamily> {
        [PathFamily::Dyck, PathFamily::SkewDyck, PathFamily::Motzkin2, PathFamily::Motzkin3]
            .into_iter()
            .find(|f| f.name() == s)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePath {
    pub family: PathFamily,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(family: PathFamily, steps: Vec<Step>) -> Self {
        LatticePath { family, steps }
    }

    /// Parse a compact step word such as `"UUDL"` or `"HbHr"`.
    pub fn parse(family: PathFamily, word: &str) -> Option<Self> {
        let mut steps = Vec::new();
        let mut rest = word;
        while !rest.is_empty() {
            let (step, len) = if let Some(tail) = rest.strip_prefix('H') {
                let colour = tail.chars().next()?;
                (Step::from_symbol(&format!("H{colour}"))?, 2)
            } else {
                (Step::from_symbol(&rest[..1])?, 1)
            };
            steps.push(step);
            rest = &rest[len..];
        }
        Some(LatticePath { family, steps })
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.symbol()).collect()
    }

    /// Step count.
    pub fn size(&self) -> usize {
        self.steps.len()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Lattice points visited, starting at the origin.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut p = (0i64, 0i64);
        let mut out = vec![p];
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let allowed = self.family.allowed();
        for (i, s) in self.steps.iter().enumerate() {
            if !allowed.contains(s) {
                report.push(ViolationKind::StepNotAllowed(*s), &format!("$.steps[{i}]"));
            }
        }
        let vertices = self.vertices();
        for (i, v) in vertices.iter().enumerate().skip(1) {
            if v.1 < 0 {
                report.push(ViolationKind::NegativeHeight, &format!("$.steps[{}]", i - 1));
                break;
            }
        }
        let end = vertices.last().map(|v| v.1).unwrap_or(0);
        if end != 0 {
            report.push(ViolationKind::FinalHeight(end), "$.steps");
        }
        if self.family == PathFamily::SkewDyck {
            check_self_avoiding(&vertices, &mut report);
        }
        report
    }
}

/// Vertex distinctness plus a brute-force test over all segment pairs.
fn check_self_avoiding(vertices: &[(i64, i64)], report: &mut ValidationReport) {
    let mut seen = HashSet::new();
    for (i, v) in vertices.iter().enumerate() {
        if !seen.insert(*v) {
            report.push(ViolationKind::VertexRevisit, &format!("$.steps[{}]", i - 1));
        }
    }
    let segments: Vec<((i64, i64), (i64, i64))> = vertices.windows(2).map(|w| (w[0], w[1])).collect();
    for j in 0..segments.len() {
        for i in 0..j {
            let (a, b) = segments[i];
            let (c, d) = segments[j];
            if (a == c && b == d) || (a == d && b == c) {
                report.push(ViolationKind::SegmentReuse, &format!("$.steps[{j}]"));
                continue;
            }
            let shares_endpoint = a == c || a == d || b == c || b == d;
            if !shares_endpoint && segments_intersect(a, b, c, d) {
                report.push(ViolationKind::SegmentCrossing, &format!("$.steps[{j}]"));
            }
        }
    }
}

fn orient(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> i64 {
    ((q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)).signum()
}

fn on_segment(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> bool {
    r.0 >= p.0.min(q.0) && r.0 <= p.0.max(q.0) && r.1 >= p.1.min(q.1) && r.1 <= p.1.max(q.1)
}

fn segments_intersect(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

/// Any object of any family.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Object {
    Ub(UbTree),
    Hex(HexTree),
    Marked(MarkedTree),
    MultiEdge(MultiEdgeTree),
    Ordered(OrderedTree),
    Path(LatticePath),
}

impl Object {
    /// Nodes for unary-binary, hex and marked trees; edges (total weight)
    /// for ordered and multi-edge trees; steps for paths.
    pub fn size(&self) -> usize {
        match self {
            Object::Ub(t) => t.size(),
            Object::Hex(t) => t.size(),
            Object::Marked(t) => t.size(),
            Object::MultiEdge(t) => t.size() as usize,
            Object::Ordered(t) => t.size(),
            Object::Path(p) => p.size(),
        }
    }
}

/// Validate any object; `colours` only matters for unary-binary trees.
pub fn validate(object: &Object, colours: u32) -> ValidationReport {
    match object {
        Object::Ub(t) => t.validate(colours),
        Object::Hex(t) => t.validate(),
        Object::Marked(t) => t.validate(),
        Object::MultiEdge(t) => t.validate(),
        Object::Ordered(_) => ValidationReport::default(),
        Object::Path(p) => p.validate(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ViolationKind {
    UnaryChildEmpty,
    ColourOutOfRange { colour: u32, colours: u32 },
    BoxChild,
    RedNotRightmost,
    RedToLeaf,
    ZeroWeight,
    StepNotAllowed(Step),
    NegativeHeight,
    FinalHeight(i64),
    VertexRevisit,
    SegmentReuse,
    SegmentCrossing,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::UnaryChildEmpty => f.write_str("unary child empty"),
            ViolationKind::ColourOutOfRange { colour, colours } => {
                write!(f, "colour out of range ({colour} not in 1..={colours})")
            }
            ViolationKind::BoxChild => f.write_str("box child"),
            ViolationKind::RedNotRightmost => f.write_str("red edge not rightmost"),
            ViolationKind::RedToLeaf => f.write_str("red edge to leaf"),
            ViolationKind::ZeroWeight => f.write_str("zero weight"),
            ViolationKind::StepNotAllowed(s) => write!(f, "step not allowed ({s})"),
            ViolationKind::NegativeHeight => f.write_str("negative height"),
            ViolationKind::FinalHeight(h) => write!(f, "final height {h}"),
            ViolationKind::VertexRevisit => f.write_str("vertex revisit"),
            ViolationKind::SegmentReuse => f.write_str("segment reuse"),
            ViolationKind::SegmentCrossing => f.write_str("segment crossing"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Violation {
    pub kind: ViolationKind,
    /// JSON-path style location, e.g. `$.children[1].children[0]`.
    pub location: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind, self.location)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn kinds(&self) -> Vec<ViolationKind> {
        self.violations.iter().map(|v| v.kind).collect()
    }

    pub fn has(&self, pred: impl Fn(&ViolationKind) -> bool) -> bool {
        self.violations.iter().any(|v| pred(&v.kind))
    }

    fn push(&mut self, kind: ViolationKind, location: &str) {
        self.violations.push(Violation { kind, location: location.to_string() });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew(word: &str) -> LatticePath {
        LatticePath::parse(PathFamily::SkewDyck, word).unwrap()
    }

    #[test]
    fn skew_uudl_is_valid() {
        assert!(skew("UUDL").validate().is_ok());
    }

    #[test]
    fn skew_ul_reuses_segment() {
        let report = skew("UL").validate();
        assert!(report.has(|k| *k == ViolationKind::SegmentReuse), "{report:?}");
    }

    #[test]
    fn skew_lu_reuses_segment() {
        // U U D L U D D: the L and the following U retrace the same diagonal
        let report = skew("UUDLUDD").validate();
        assert!(report.has(|k| *k == ViolationKind::SegmentReuse));
    }

    #[test]
    fn diagonal_midpoint_crossing_is_detected() {
        let a = (0, 0);
        let b = (1, 1);
        let c = (1, 0);
        let d = (0, 1);
        assert!(segments_intersect(a, b, c, d));
        assert!(!segments_intersect((0, 0), (1, 1), (2, 0), (3, 1)));
    }

    #[test]
    fn red_edge_to_leaf_is_reported() {
        let t = MarkedTree::new(vec![(Mark::Red, MarkedTree::leaf())]);
        assert_eq!(t.validate().kinds(), vec![ViolationKind::RedToLeaf]);
    }

    #[test]
    fn red_edge_must_be_rightmost() {
        let inner = MarkedTree::new(vec![(Mark::Plain, MarkedTree::leaf())]);
        let t = MarkedTree::new(vec![(Mark::Red, inner), (Mark::Plain, MarkedTree::leaf())]);
        let report = t.validate();
        assert_eq!(report.kinds(), vec![ViolationKind::RedNotRightmost]);
        assert_eq!(report.violations[0].location, "$.children[0]");
    }

    #[test]
    fn unary_rules() {
        let bad = UbTree::unary(1, UbTree::Empty);
        assert_eq!(bad.validate(1).kinds(), vec![ViolationKind::UnaryChildEmpty]);
        let colour = UbTree::unary(2, UbTree::leaf());
        assert_eq!(colour.validate(1).kinds(), vec![ViolationKind::ColourOutOfRange { colour: 2, colours: 1 }]);
        assert!(colour.validate(2).is_ok());
        assert!(!UbTree::unary(1, UbTree::leaf()).validate(0).is_ok());
    }

    #[test]
    fn hex_children_are_not_boxes() {
        let t = HexTree::binary(HexTree::Node, HexTree::Box);
        assert_eq!(t.validate().kinds(), vec![ViolationKind::BoxChild]);
        assert!(HexTree::UnaryMiddle(Arc::new(HexTree::Node)).validate().is_ok());
    }

    #[test]
    fn sizes() {
        assert_eq!(UbTree::leaf().size(), 1);
        assert_eq!(MultiEdgeTree::new(vec![(3, MultiEdgeTree::leaf())]).size(), 3);
        let chain4 = MarkedTree::new(vec![(
            Mark::Plain,
            MarkedTree::new(vec![(Mark::Plain, MarkedTree::new(vec![(Mark::Plain, MarkedTree::leaf())]))]),
        )]);
        assert_eq!(chain4.size(), 4);
        assert_eq!(chain4.height(), 4);
        assert_eq!(skew("UUUDDD").size(), 6);
    }

    #[test]
    fn path_height_checks() {
        let p = LatticePath::parse(PathFamily::Dyck, "DU").unwrap();
        assert_eq!(p.validate().kinds(), vec![ViolationKind::NegativeHeight]);
        let p = LatticePath::parse(PathFamily::Motzkin2, "UHr").unwrap();
        assert_eq!(p.validate().kinds(), vec![ViolationKind::FinalHeight(1)]);
        let p = LatticePath::parse(PathFamily::Dyck, "UHbD").unwrap();
        assert_eq!(p.validate().kinds(), vec![ViolationKind::StepNotAllowed(Step::Hb)]);
    }

    #[test]
    fn parse_round_trip() {
        let p = LatticePath::parse(PathFamily::Motzkin3, "UHbHgDHr").unwrap();
        assert_eq!(p.steps, vec![Step::U, Step::Hb, Step::Hg, Step::D, Step::Hr]);
        assert_eq!(p.word(), "UHbHgDHr");
        assert!(LatticePath::parse(PathFamily::Motzkin3, "UHx").is_none());
    }
}
