//! Ground structures, intervals and generators.
//!
//! Every index crossing this module's public surface is 1-based: vertex
//! `1..=n`, interval `[begin, end]`. Storage is 0-based internally.

use std::cmp::Reverse;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The integer interval `{begin, ..., end}` of `{1, ..., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub begin: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(begin: usize, end: usize) -> Self {
        debug_assert!(begin <= end);
        Interval { begin, end }
    }

    pub fn singleton(x: usize) -> Self {
        Interval { begin: x, end: x }
    }

    pub fn len(&self) -> usize {
        self.end - self.begin + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, z: usize) -> bool {
        self.begin <= z && z <= self.end
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.begin <= other.begin && other.end <= self.end
    }

    pub fn intersection(&self, other: &Interval) -> Option<Interval> {
        let b = self.begin.max(other.begin);
        let e = self.end.min(other.end);
        (b <= e).then_some(Interval { begin: b, end: e })
    }

    /// Intersect without either containing the other.
    pub fn overlaps(&self, other: &Interval) -> bool {
        self.intersection(other).is_some()
            && !self.contains_interval(other)
            && !other.contains_interval(self)
    }

    /// Sort key of the enumeration contract: end ascending, then begin descending.
    pub fn emission_key(&self) -> (usize, Reverse<usize>) {
        (self.end, Reverse(self.begin))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.begin, self.end)
    }
}

/// Sort in place by the enumeration contract (end asc, begin desc).
pub fn sort_emission_order(intervals: &mut [Interval]) {
    intervals.sort_unstable_by_key(Interval::emission_key);
}

/// Linear-space representation `(L, R)` of an intersection-closed family:
/// `[x, y]` is a member iff `R[x] >= y` and `L[y] <= x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    n: usize,
    r: Vec<usize>,
    l: Vec<usize>,
}

impl Generator {
    /// `r[i]` and `l[i]` hold `R[i+1]` and `L[i+1]` (1-based values).
    pub fn new(r: Vec<usize>, l: Vec<usize>) -> Result<Self> {
        let n = r.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if l.len() != n {
            return Err(Error::SizeMismatch(n, l.len()));
        }
        for x in 1..=n {
            let rx = r[x - 1];
            if rx < x || rx > n {
                return Err(Error::InvalidGenerator(format!(
                    "R[{x}] = {rx} must lie in [{x}, {n}]"
                )));
            }
            let lx = l[x - 1];
            if lx < 1 || lx > x {
                return Err(Error::InvalidGenerator(format!(
                    "L[{x}] = {lx} must lie in [1, {x}]"
                )));
            }
        }
        Ok(Generator { n, r, l })
    }

    pub(crate) fn from_parts_unchecked(r: Vec<usize>, l: Vec<usize>) -> Self {
        debug_assert!(Generator::new(r.clone(), l.clone()).is_ok());
        Generator { n: r.len(), r, l }
    }

    /// Every interval is a member.
    pub fn full(n: usize) -> Self {
        Generator {
            n,
            r: vec![n; n],
            l: vec![1; n],
        }
    }

    /// Only singletons are members.
    pub fn singletons(n: usize) -> Self {
        Generator {
            n,
            r: (1..=n).collect(),
            l: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The `R` vector, `R[x]` at index `x - 1`.
    pub fn right(&self) -> &[usize] {
        &self.r
    }

    /// The `L` vector, `L[y]` at index `y - 1`.
    pub fn left(&self) -> &[usize] {
        &self.l
    }

    pub fn is_member(&self, x: usize, y: usize) -> Result<bool> {
        check_pair(self.n, x, y)?;
        Ok(self.contains(x, y))
    }

    #[inline]
    pub(crate) fn contains(&self, x: usize, y: usize) -> bool {
        self.r[x - 1] >= y && self.l[y - 1] <= x
    }

    /// Generator of the intersection of both families.
    pub fn intersect(&self, other: &Generator) -> Result<Generator> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let r = self
            .r
            .iter()
            .zip(&other.r)
            .map(|(a, b)| *a.min(b))
            .collect();
        let l = self
            .l
            .iter()
            .zip(&other.l)
            .map(|(a, b)| *a.max(b))
            .collect();
        Ok(Generator { n: self.n, r, l })
    }

    /// All members in emission order. Quadratic; a testing aid.
    pub fn materialize(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for y in 1..=self.n {
            for x in (1..=y).rev() {
                if self.contains(x, y) {
                    out.push(Interval::new(x, y));
                }
            }
        }
        out
    }

    /// Canonical `(minBeg, maxEnd)` pair representing the same family.
    pub fn canonical(&self) -> Generator {
        let n = self.n;
        let mut r = vec![0; n];
        let mut l = vec![0; n];
        for x in 1..=n {
            r[x - 1] = (x..=n).rev().find(|&y| self.contains(x, y)).unwrap_or(x);
        }
        for y in 1..=n {
            l[y - 1] = (1..=y).find(|&x| self.contains(x, y)).unwrap_or(y);
        }
        Generator { n, r, l }
    }
}

pub(crate) fn check_pair(n: usize, x: usize, y: usize) -> Result<()> {
    check_vertex(n, "x", x)?;
    check_vertex(n, "y", y)?;
    if x > y {
        return Err(Error::InvalidInterval(x, y));
    }
    Ok(())
}

pub(crate) fn check_vertex(n: usize, what: &'static str, value: usize) -> Result<()> {
    if value < 1 || value > n {
        Err(Error::OutOfRange { what, value, n })
    } else {
        Ok(())
    }
}

/// A permutation of `{1, ..., n}`, position `k` mapped to `P(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n];
        for (k, &v) in values.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::NotABijection(format!(
                    "value {v} at position {} is outside [1, {n}]",
                    k + 1
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotABijection(format!("value {v} occurs twice")));
            }
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn reversal(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `P(k)` for a 1-based position `k`.
    #[inline]
    pub fn at(&self, k: usize) -> usize {
        self.values[k - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (k, &v) in self.values.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { values: inv }
    }

    /// `k -> n + 1 - P(n + 1 - k)`: maps `[x, y]` onto `[n+1-y, n+1-x]`
    /// preserving every family A-D.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len();
        Permutation {
            values: self.values.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Compressed adjacency lists over vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Adjacency {
    fn build(n: usize, pairs: impl Iterator<Item = (usize, usize)> + Clone) -> Self {
        let mut offsets = vec![0; n + 2];
        for (u, _) in pairs.clone() {
            offsets[u + 1] += 1;
        }
        for i in 1..offsets.len() {
            offsets[i] += offsets[i - 1];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n + 1]];
        for (u, v) in pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
        }
        Adjacency { offsets, targets }
    }

    #[inline]
    pub(crate) fn of(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// A tree on `{1, ..., n}` given by its `n - 1` undirected edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Adjacency,
}

impl LabeledTree {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "expected {} edges, found {}",
                n - 1,
                edges.len()
            )));
        }
        for &(u, v) in &edges {
            check_vertex(n, "edge endpoint", u)?;
            check_vertex(n, "edge endpoint", v)?;
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at {u}")));
            }
        }
        let adj = Adjacency::build(n, edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]));
        // n - 1 edges and connected implies acyclic
        let mut seen = vec![false; n + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in adj.of(u) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != n {
            return Err(Error::InvalidTree(
                "edge set is disconnected or contains a cycle".into(),
            ));
        }
        Ok(LabeledTree { n, edges, adj })
    }

    /// The path `order[0] - order[1] - ...`.
    pub fn path(order: &[usize]) -> Result<Self> {
        let edges = order.windows(2).map(|w| (w[0], w[1])).collect();
        LabeledTree::new(order.len(), edges)
    }

    /// Center `1`, leaves `2..=n`.
    pub fn star(n: usize) -> Result<Self> {
        LabeledTree::new(n, (2..=n).map(|v| (1, v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.adj.of(v)
    }

    /// Relabel every vertex `v` as `n + 1 - v`.
    pub fn reflect(&self) -> LabeledTree {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (n + 1 - u, n + 1 - v))
            .collect();
        LabeledTree::new(n, edges).expect("reflection preserves validity")
    }
}

/// A directed acyclic graph on `{1, ..., n}`; arc `(u, v)` means `u -> v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Adjacency,
    topo: Vec<usize>,
}

impl Dag {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        for &(u, v) in &arcs {
            check_vertex(n, "arc endpoint", u)?;
            check_vertex(n, "arc endpoint", v)?;
            if u == v {
                return Err(Error::InvalidDag(format!("self-loop at {u}")));
            }
        }
        let mut sorted = arcs.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidDag(format!(
                "duplicate arc {} -> {}",
                w[0].0, w[0].1
            )));
        }
        let out = Adjacency::build(n, arcs.iter().copied());
        // Kahn
        let mut indeg = vec![0usize; n + 1];
        for &(_, v) in &arcs {
            indeg[v] += 1;
        }
        let mut topo = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
        while let Some(u) = queue.pop_front() {
            topo.push(u);
            for &w in out.of(u) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CycleDetected);
        }
        Ok(Dag { n, arcs, out, topo })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        self.out.of(v)
    }

    /// Vertices in a topological order (every arc goes forward).
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Relabel every vertex `v` as `n + 1 - v`, arcs kept in direction.
    pub fn reflect(&self) -> Dag {
        let n = self.n;
        let arcs = self
            .arcs
            .iter()
            .map(|&(u, v)| (n + 1 - u, n + 1 - v))
            .collect();
        Dag::new(n, arcs).expect("reflection preserves validity")
    }
}

/// The eight interval classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `P(I)` is an interval (common intervals).
    A,
    /// `P(I) = I`.
    B,
    /// `P([x,y])` contained in `[P(x), P(y)]`.
    C,
    /// `P([x,y]) = [P(x), P(y)]` (hurdles).
    D,
    /// `T[I]` connected.
    E,
    /// `T[I]` contained in a path of `T`.
    F,
    /// `T[I]` is a path.
    G,
    /// `I` closed under reachability in a DAG.
    H,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::A,
        FamilyKind::B,
        FamilyKind::C,
        FamilyKind::D,
        FamilyKind::E,
        FamilyKind::F,
        FamilyKind::G,
        FamilyKind::H,
    ];

    pub fn input(self) -> StructureKind {
        match self {
            FamilyKind::A | FamilyKind::B | FamilyKind::C | FamilyKind::D => {
                StructureKind::Permutation
            }
            FamilyKind::E | FamilyKind::F | FamilyKind::G => StructureKind::Tree,
            FamilyKind::H => StructureKind::Dag,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(FamilyKind::A),
            "B" | "b" => Ok(FamilyKind::B),
            "C" | "c" => Ok(FamilyKind::C),
            "D" | "d" => Ok(FamilyKind::D),
            "E" | "e" => Ok(FamilyKind::E),
            "F" | "f" => Ok(FamilyKind::F),
            "G" | "g" => Ok(FamilyKind::G),
            "H" | "h" => Ok(FamilyKind::H),
            other => Err(Error::Argument(format!("unknown family kind '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Permutation,
    Tree,
    Dag,
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Permutation => "permutation",
            StructureKind::Tree => "tree",
            StructureKind::Dag => "dag",
        }
    }
}

/// Parsed but not yet validated input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawInput {
    Permutation(Vec<usize>),
    TwoPermutations(Vec<usize>, Vec<usize>),
    Tree {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
    Dag {
        n: usize,
        arcs: Vec<(usize, usize)>,
    },
}

impl RawInput {
    pub fn structure_kind(&self) -> StructureKind {
        match self {
            RawInput::Permutation(_) | RawInput::TwoPermutations(..) => StructureKind::Permutation,
            RawInput::Tree { .. } => StructureKind::Tree,
            RawInput::Dag { .. } => StructureKind::Dag,
        }
    }
}

/// A validated ground structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Permutation(Permutation),
    Tree(LabeledTree),
    Dag(Dag),
}

impl Structure {
    pub fn n(&self) -> usize {
        match self {
            Structure::Permutation(p) => p.len(),
            Structure::Tree(t) => t.n(),
            Structure::Dag(d) => d.n(),
        }
    }

    pub fn kind(&self) -> StructureKind {
        match self {
            Structure::Permutation(_) => StructureKind::Permutation,
            Structure::Tree(_) => StructureKind::Tree,
            Structure::Dag(_) => StructureKind::Dag,
        }
    }
}

/// Validate `raw` as the ground structure family `kind` expects. Two
/// permutations are reduced to a single one whose common intervals are
/// reported in positions of the first.
pub fn validate_structure(kind: FamilyKind, raw: RawInput) -> Result<Structure> {
    let expected = kind.input();
    if raw.structure_kind() != expected {
        return Err(Error::KindMismatch {
            kind,
            expected: expected.name(),
        });
    }
    match raw {
        RawInput::Permutation(v) => Ok(Structure::Permutation(Permutation::new(v)?)),
        RawInput::TwoPermutations(a, b) => {
            if kind != FamilyKind::A {
                return Err(Error::Argument(format!(
                    "two-permutation input is only meaningful for family A, not {kind}"
                )));
            }
            let p1 = Permutation::new(a)?;
            let p2 = Permutation::new(b)?;
            Ok(Structure::Permutation(
                crate::perm::reduce_two_permutations(&p1, &p2)?,
            ))
        }
        RawInput::Tree { n, edges } => Ok(Structure::Tree(LabeledTree::new(n, edges)?)),
        RawInput::Dag { n, arcs } => Ok(Structure::Dag(Dag::new(n, arcs)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sample_table() -> Generator {
        Generator::new(
            vec![9, 4, 4, 7, 7, 7, 9, 9, 9],
            vec![1, 1, 1, 3, 4, 1, 6, 7, 1],
        )
        .unwrap()
    }

    #[test]
    fn sample_table_membership() {
        let g = sample_table();
        assert!(g.is_member(1, 6).unwrap());
        assert!(!g.is_member(2, 5).unwrap());
        for x in 1..=9 {
            assert!(g.is_member(x, x).unwrap());
        }
    }

    #[test]
    fn membership_rejects_bad_indices() {
        let g = sample_table();
        assert!(matches!(g.is_member(0, 3), Err(Error::OutOfRange { .. })));
        assert!(matches!(g.is_member(2, 10), Err(Error::OutOfRange { .. })));
        assert!(matches!(
            g.is_member(5, 2),
            Err(Error::InvalidInterval(5, 2))
        ));
    }

    #[test]
    fn sample_table_materializes_to_22() {
        // expected values from expanding the printed table by the membership rule
        let all = sample_table().materialize();
        assert_eq!(all.len(), 22);
        assert!(all.contains(&Interval::new(1, 6)));
        assert!(!all.contains(&Interval::new(2, 5)));
    }

    #[test]
    fn intersect_pointwise() {
        let g1 = Generator::new(vec![3, 2, 3], vec![1, 1, 2]).unwrap();
        let g2 = Generator::new(vec![2, 3, 3], vec![1, 2, 3]).unwrap();
        let g = g1.intersect(&g2).unwrap();
        assert_eq!(g.right(), &[2, 2, 3]);
        assert_eq!(g.left(), &[1, 2, 3]);
        assert_eq!(g1.intersect(&g1).unwrap(), g1);
        assert!(matches!(
            g1.intersect(&Generator::full(4)),
            Err(Error::SizeMismatch(3, 4))
        ));
    }

    #[test]
    fn full_and_singleton_generators() {
        assert_eq!(
            Generator::full(2).materialize(),
            vec![
                Interval::new(1, 1),
                Interval::new(2, 2),
                Interval::new(1, 2)
            ]
        );
        let s = Generator::singletons(5).materialize();
        assert_eq!(s, (1..=5).map(Interval::singleton).collect::<Vec<_>>());
    }

    #[test]
    fn generator_bounds_are_checked() {
        assert!(Generator::new(vec![1, 1], vec![1, 1]).is_err());
        assert!(Generator::new(vec![2, 2], vec![1, 3]).is_err());
        assert!(Generator::new(vec![], vec![]).is_err());
    }

    #[test]
    fn canonical_keeps_the_family() {
        let g = sample_table();
        assert_eq!(g.canonical().materialize(), g.materialize());
    }

    #[test]
    fn validation_examples() {
        let err = validate_structure(FamilyKind::A, RawInput::Permutation(vec![1, 2, 2]));
        assert!(err.unwrap_err().to_string().contains("not a bijection"));
        let ok = validate_structure(
            FamilyKind::E,
            RawInput::Tree {
                n: 3,
                edges: vec![(1, 2), (2, 3)],
            },
        );
        assert!(matches!(ok, Ok(Structure::Tree(_))));
        let err = validate_structure(
            FamilyKind::H,
            RawInput::Dag {
                n: 2,
                arcs: vec![(1, 2), (2, 1)],
            },
        );
        assert!(err.unwrap_err().to_string().contains("cycle detected"));
        assert_eq!(
            validate_structure(FamilyKind::A, RawInput::Permutation(vec![])),
            Err(Error::Empty)
        );
        assert!(matches!(
            validate_structure(
                FamilyKind::A,
                RawInput::Tree {
                    n: 2,
                    edges: vec![(1, 2)]
                }
            ),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn invalid_trees_are_rejected() {
        assert!(LabeledTree::new(4, vec![(1, 2), (2, 1), (3, 4)]).is_err());
        assert!(LabeledTree::new(3, vec![(1, 2)]).is_err());
        assert!(LabeledTree::new(3, vec![(1, 1), (2, 3)]).is_err());
        assert!(LabeledTree::new(1, vec![]).is_ok());
    }

    #[test]
    fn invalid_dags_are_rejected() {
        assert!(Dag::new(3, vec![(1, 2), (1, 2)]).is_err());
        assert!(Dag::new(3, vec![(2, 2)]).is_err());
        assert_eq!(
            Dag::new(3, vec![(1, 2), (2, 3), (3, 1)]),
            Err(Error::CycleDetected)
        );
    }

    #[test]
    fn reverse_complement_is_an_involution() {
        let p = Permutation::new(vec![3, 8, 1, 5, 7, 4, 6, 2]).unwrap();
        assert_eq!(p.reverse_complement().reverse_complement(), p);
        assert_eq!(p.inverse().inverse(), p);
    }
}
