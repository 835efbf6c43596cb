//! Decomposition tree of the common intervals of a permutation.
//!
//! Nodes are the common intervals that overlap no other common interval;
//! each internal node is labeled by the order its children's value ranges
//! take: increasing, decreasing, or prime (a simple quotient).
//!
//! Construction is a left-to-right sweep over a stack of forest roots. The
//! newest tree `A` repeatedly eats the rear of the stack, by monotone
//! extension (preferred) or by prime super-node creation, until neither
//! applies. A stack of potential beginnings at vertex granularity, kept in
//! step with the forest, finds the only candidate for a prime creation in
//! constant time.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Interval, Permutation};
use crate::perm::{side_extrema, SideExtrema};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeLabel {
    Leaf,
    Increasing,
    Decreasing,
    Prime,
}

impl NodeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeLabel::Leaf => "Leaf",
            NodeLabel::Increasing => "Increasing",
            NodeLabel::Decreasing => "Decreasing",
            NodeLabel::Prime => "Prime",
        }
    }

    pub fn is_linear(self) -> bool {
        matches!(self, NodeLabel::Increasing | NodeLabel::Decreasing)
    }
}

/// One node; `children` index into the owning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionNode {
    pub label: NodeLabel,
    pub position_range: Interval,
    /// `(min, max)` of the values at the covered positions.
    pub value_range: (usize, usize),
    pub children: Vec<NodeId>,
}

impl DecompositionNode {
    fn leaf(k: usize, v: usize) -> Self {
        DecompositionNode {
            label: NodeLabel::Leaf,
            position_range: Interval::singleton(k),
            value_range: (v, v),
            children: Vec::new(),
        }
    }
}

/// Arena-backed ordered tree. Equality compares shape, labels and ranges,
/// not arena layout.
#[derive(Debug, Clone)]
pub struct DecompositionTree {
    n: usize,
    nodes: Vec<DecompositionNode>,
    root: NodeId,
}

impl PartialEq for DecompositionTree {
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let a = self.preorder();
        let b = other.preorder();
        a.len() == b.len()
            && a.iter().zip(&b).all(|(&u, &v)| {
                let (u, v) = (self.node(u), other.node(v));
                u.label == v.label
                    && u.position_range == v.position_range
                    && u.value_range == v.value_range
                    && u.children.len() == v.children.len()
            })
    }
}

impl Eq for DecompositionTree {}

impl DecompositionTree {
    pub(crate) fn from_arena(n: usize, nodes: Vec<DecompositionNode>, root: NodeId) -> Self {
        DecompositionTree { n, nodes, root }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &DecompositionNode {
        &self.nodes[id]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Node ids, parents before children, children left to right.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend(self.nodes[u].children.iter().rev());
        }
        order
    }

    /// Leaves read left to right.
    pub fn leaves(&self) -> Vec<usize> {
        self.preorder()
            .into_iter()
            .filter(|&u| self.nodes[u].label == NodeLabel::Leaf)
            .map(|u| self.nodes[u].position_range.begin)
            .collect()
    }

    /// Position ranges of all nodes, in preorder.
    pub fn node_intervals(&self) -> Vec<Interval> {
        self.preorder()
            .into_iter()
            .map(|u| self.nodes[u].position_range)
            .collect()
    }

    /// The permutation ranking the children of `id` by value.
    pub fn node_quotient(&self, id: NodeId) -> Result<Permutation> {
        let node = self
            .nodes
            .get(id)
            .ok_or_else(|| Error::Argument(format!("node {id} does not exist")))?;
        if node.children.is_empty() {
            return Err(Error::Argument("a leaf has no quotient".into()));
        }
        let mut order: Vec<usize> = (0..node.children.len()).collect();
        order.sort_unstable_by_key(|&i| self.nodes[node.children[i]].value_range.0);
        let mut ranks = vec![0; order.len()];
        for (rank, i) in order.into_iter().enumerate() {
            ranks[i] = rank + 1;
        }
        Permutation::new(ranks)
    }

    /// Emit every common interval exactly once: all nodes, plus each run
    /// of at least two (but not all) consecutive children of a linear node.
    /// Order: `y` ascending, then `x` descending.
    pub fn expand_family(&self, mut sink: impl FnMut(Interval)) -> usize {
        let mut all = Vec::new();
        for node in &self.nodes {
            all.push(node.position_range);
            if node.label.is_linear() {
                let k = node.children.len();
                for j in 1..k {
                    let end = self.nodes[node.children[j]].position_range.end;
                    for i in 0..j {
                        if i == 0 && j == k - 1 {
                            continue;
                        }
                        let begin = self.nodes[node.children[i]].position_range.begin;
                        all.push(Interval::new(begin, end));
                    }
                }
            }
        }
        let sorted = counting_sort_emission(self.n, all);
        let count = sorted.len();
        sorted.into_iter().for_each(&mut sink);
        count
    }

    /// Nested `{label, pos, val, children}` records, two-space indented,
    /// leaves on one line. Byte-stable for equal trees.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        // (node, next child index, depth)
        let mut stack: Vec<(NodeId, usize, usize)> = vec![(self.root, 0, 0)];
        while let Some(&mut (u, ref mut next, depth)) = stack.last_mut() {
            let node = &self.nodes[u];
            let pad = "  ".repeat(depth);
            let head = format!(
                "\"label\": \"{}\", \"pos\": [{}, {}], \"val\": [{}, {}]",
                node.label.as_str(),
                node.position_range.begin,
                node.position_range.end,
                node.value_range.0,
                node.value_range.1
            );
            if node.children.is_empty() {
                let _ = write!(out, "{pad}{{{head}, \"children\": []}}");
                stack.pop();
                continue;
            }
            if *next == 0 {
                let _ = writeln!(out, "{pad}{{{head}, \"children\": [");
            } else if *next < node.children.len() {
                out.push_str(",\n");
            } else {
                let _ = write!(out, "\n{pad}]}}");
                stack.pop();
                continue;
            }
            let child = node.children[*next];
            *next += 1;
            stack.push((child, 0, depth + 1));
        }
        out.push('\n');
        out
    }

    /// Graph-description text for rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph decomposition {\n  node [shape=box];\n");
        let order = self.preorder();
        let mut name = vec![0; self.nodes.len()];
        for (i, &u) in order.iter().enumerate() {
            name[u] = i;
        }
        for &u in &order {
            let node = &self.nodes[u];
            let label = match node.label {
                NodeLabel::Leaf => format!("{}", node.value_range.0),
                other => format!(
                    "{} [{},{}]",
                    other.as_str(),
                    node.position_range.begin,
                    node.position_range.end
                ),
            };
            let _ = writeln!(out, "  n{} [label=\"{}\"];", name[u], label);
        }
        for &u in &order {
            for &c in &self.nodes[u].children {
                let _ = writeln!(out, "  n{} -> n{};", name[u], name[c]);
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Sort into emission order (end asc, begin desc) with two counting passes.
fn counting_sort_emission(n: usize, items: Vec<Interval>) -> Vec<Interval> {
    let pass = |items: Vec<Interval>, key: &dyn Fn(&Interval) -> usize| {
        let mut counts = vec![0usize; n + 2];
        for i in &items {
            counts[key(i) + 1] += 1;
        }
        for k in 1..counts.len() {
            counts[k] += counts[k - 1];
        }
        let mut out = vec![Interval::singleton(1); items.len()];
        for i in items {
            let slot = &mut counts[key(&i)];
            out[*slot] = i;
            *slot += 1;
        }
        out
    };
    let by_begin_desc = pass(items, &|i| n - i.begin);
    pass(by_begin_desc, &|i| i.end)
}

/// Operation counters of one construction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub extensions: usize,
    pub prime_creations: usize,
}

impl BuildStats {
    pub fn operations(&self) -> usize {
        self.extensions + self.prime_creations
    }
}

/// Incremental construction state `<A_1, ..., A_p | A>`.
///
/// Drive it with [`begin_step`](TreeBuilder::begin_step), then
/// [`try_extension`](TreeBuilder::try_extension) /
/// [`try_prime_creation`](TreeBuilder::try_prime_creation) until both
/// fail, then [`end_step`](TreeBuilder::end_step).
#[derive(Debug)]
pub struct TreeBuilder<'a> {
    p: &'a Permutation,
    ext: SideExtrema,
    nodes: Vec<DecompositionNode>,
    forest: Vec<NodeId>,
    current: Option<NodeId>,
    y: usize,
    // potential beginnings; entry i spans positions [pot[i], pot[i+1] - 1],
    // the top spans [pot[top], y]
    pot: Vec<usize>,
    span_min: Vec<usize>,
    span_max: Vec<usize>,
    stats: BuildStats,
}

impl<'a> TreeBuilder<'a> {
    pub fn new(p: &'a Permutation) -> Self {
        let n = p.len();
        TreeBuilder {
            p,
            ext: side_extrema(p),
            nodes: Vec::with_capacity(2 * n),
            forest: Vec::new(),
            current: None,
            y: 0,
            pot: Vec::new(),
            span_min: Vec::new(),
            span_max: Vec::new(),
            stats: BuildStats::default(),
        }
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    /// Position processed by the current step (0 before the first).
    pub fn position(&self) -> usize {
        self.y
    }

    /// Labels of `A_1, ..., A_p` and of `A`.
    pub fn configuration(&self) -> (Vec<NodeLabel>, Option<NodeLabel>) {
        (
            self.forest.iter().map(|&u| self.nodes[u].label).collect(),
            self.current.map(|u| self.nodes[u].label),
        )
    }

    /// The rear forest tree `A_p`.
    pub fn rear(&self) -> Option<&DecompositionNode> {
        self.forest.last().map(|&u| &self.nodes[u])
    }

    /// The tree `A` under construction.
    pub fn current(&self) -> Option<&DecompositionNode> {
        self.current.map(|u| &self.nodes[u])
    }

    pub fn node(&self, id: NodeId) -> &DecompositionNode {
        &self.nodes[id]
    }

    /// Start the next position: update the potential beginnings and make
    /// `A` the leaf of `y`. Returns `y`, or `None` once all are consumed.
    pub fn begin_step(&mut self) -> Option<usize> {
        assert!(self.current.is_none(), "previous step not ended");
        if self.y == self.p.len() {
            return None;
        }
        self.y += 1;
        let y = self.y;
        let py = self.p.at(y);
        while let Some(&t) = self.pot.last() {
            if self.ext.min_greater_left[t - 1] < py || self.ext.max_smaller_left[t - 1] > py {
                self.pop_entry();
            } else {
                break;
            }
        }
        // the entry below now spans up to y - 1 already
        self.pot.push(y);
        self.span_min.push(py);
        self.span_max.push(py);
        self.nodes.push(DecompositionNode::leaf(y, py));
        self.current = Some(self.nodes.len() - 1);
        Some(y)
    }

    /// Drop the top potential beginning, folding its span into the entry below.
    fn pop_entry(&mut self) {
        let lo = self.span_min.pop().unwrap();
        let hi = self.span_max.pop().unwrap();
        self.pot.pop();
        if let Some(m) = self.span_min.last_mut() {
            *m = (*m).min(lo);
        }
        if let Some(m) = self.span_max.last_mut() {
            *m = (*m).max(hi);
        }
    }

    /// `A` absorbed trees down to position `start`: the old start of `A` is
    /// now interior and can never begin a later common interval.
    fn merge_top_entry(&mut self, start: usize) {
        self.pop_entry();
        assert_eq!(
            self.pot.last().copied(),
            Some(start),
            "new support start must be a potential beginning"
        );
    }

    /// Monotone extension of `A` by the rear tree `A_p` when their value
    /// ranges are adjacent.
    pub fn try_extension(&mut self) -> bool {
        let (Some(a), Some(&top)) = (self.current, self.forest.last()) else {
            return false;
        };
        let (tv, av) = (self.nodes[top].value_range, self.nodes[a].value_range);
        let label = if tv.1 + 1 == av.0 {
            NodeLabel::Increasing
        } else if av.1 + 1 == tv.0 {
            NodeLabel::Decreasing
        } else {
            return false;
        };
        debug_assert!(
            self.nodes[a].label != label,
            "rear tree and A both carry the extension label"
        );
        self.forest.pop();
        let start = self.nodes[top].position_range.begin;
        let merged = if self.nodes[top].label == label {
            let node = &mut self.nodes[top];
            node.children.push(a);
            top
        } else {
            self.nodes.push(DecompositionNode {
                label,
                position_range: self.nodes[top].position_range,
                value_range: tv,
                children: vec![top, a],
            });
            self.nodes.len() - 1
        };
        let node = &mut self.nodes[merged];
        node.position_range.end = self.y;
        node.value_range = (tv.0.min(av.0), tv.1.max(av.1));
        self.current = Some(merged);
        self.merge_top_entry(start);
        self.stats.extensions += 1;
        true
    }

    /// Prime super-node over `A_i, ..., A_p, A` when their union is a common
    /// interval. The only candidate `i` starts at the potential beginning
    /// just below the start of `A`.
    pub fn try_prime_creation(&mut self) -> bool {
        let Some(a) = self.current else {
            return false;
        };
        let len = self.pot.len();
        if len < 2 {
            return false;
        }
        let candidate = self.pot[len - 2];
        let lo = self.span_min[len - 2].min(self.span_min[len - 1]);
        let hi = self.span_max[len - 2].max(self.span_max[len - 1]);
        if hi - lo != self.y - candidate {
            return false;
        }
        let mut children = vec![a];
        loop {
            let t = self
                .forest
                .pop()
                .expect("candidate is the start of a forest tree");
            children.push(t);
            let begin = self.nodes[t].position_range.begin;
            if begin == candidate {
                break;
            }
            assert!(begin > candidate, "candidate is the start of a forest tree");
        }
        children.reverse();
        debug_assert!(children.len() >= 3, "two adjacent trees would extend");
        self.nodes.push(DecompositionNode {
            label: NodeLabel::Prime,
            position_range: Interval::new(candidate, self.y),
            value_range: (lo, hi),
            children,
        });
        self.current = Some(self.nodes.len() - 1);
        self.merge_top_entry(candidate);
        self.stats.prime_creations += 1;
        true
    }

    /// Push `A` onto the forest.
    pub fn end_step(&mut self) {
        let a = self.current.take().expect("no step in progress");
        self.forest.push(a);
    }

    /// Run one full step; false when all positions are consumed.
    pub fn step(&mut self) -> bool {
        if self.begin_step().is_none() {
            return false;
        }
        while self.try_extension() || self.try_prime_creation() {}
        self.end_step();
        true
    }

    pub fn finish(mut self) -> (DecompositionTree, BuildStats) {
        while self.step() {}
        assert_eq!(self.forest.len(), 1, "the whole range is a common interval");
        let root = self.forest[0];
        (
            DecompositionTree::from_arena(self.p.len(), self.nodes, root),
            self.stats,
        )
    }
}

/// The labeled decomposition tree of the common intervals of `p`. `O(n)`.
pub fn build_decomposition_tree(p: &Permutation) -> DecompositionTree {
    build_decomposition_tree_counted(p).0
}

pub fn build_decomposition_tree_counted(p: &Permutation) -> (DecompositionTree, BuildStats) {
    TreeBuilder::new(p).finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn root_shape(t: &DecompositionTree) -> (NodeLabel, usize) {
        let r = t.node(t.root());
        (r.label, r.children.len())
    }

    #[test]
    fn small_trees() {
        let t = build_decomposition_tree(&Permutation::identity(3));
        assert_eq!(root_shape(&t), (NodeLabel::Increasing, 3));
        let t = build_decomposition_tree(&perm(&[2, 1]));
        assert_eq!(root_shape(&t), (NodeLabel::Decreasing, 2));
        let t = build_decomposition_tree(&perm(&[1]));
        assert_eq!(root_shape(&t), (NodeLabel::Leaf, 0));
        let t = build_decomposition_tree(&perm(&[2, 4, 1, 3]));
        assert_eq!(root_shape(&t), (NodeLabel::Prime, 4));
        assert_eq!(t.leaves(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn extension_seeds_a_linear_node() {
        let p = perm(&[1, 2, 3]);
        let mut b = TreeBuilder::new(&p);
        assert_eq!(b.begin_step(), Some(1));
        assert!(!b.try_extension());
        assert!(!b.try_prime_creation());
        b.end_step();
        assert_eq!(b.begin_step(), Some(2));
        assert_eq!(
            b.configuration(),
            (vec![NodeLabel::Leaf], Some(NodeLabel::Leaf))
        );
        assert!(b.try_extension());
        assert_eq!(b.configuration(), (vec![], Some(NodeLabel::Increasing)));
        assert_eq!(b.current().unwrap().children.len(), 2);
        b.end_step();
        b.begin_step();
        assert!(b.try_extension());
        let a = b.current().unwrap();
        assert_eq!(
            (a.label, a.children.len(), a.value_range),
            (NodeLabel::Increasing, 3, (1, 3))
        );
    }

    #[test]
    fn prime_creation_after_extensions_fail() {
        let p = perm(&[2, 4, 1, 3]);
        let mut b = TreeBuilder::new(&p);
        for _ in 0..3 {
            assert!(b.step());
        }
        b.begin_step();
        assert!(!b.try_extension());
        assert!(b.try_prime_creation());
        assert_eq!(b.current().unwrap().children.len(), 4);
        b.end_step();
        assert_eq!(
            b.stats(),
            BuildStats {
                extensions: 0,
                prime_creations: 1
            }
        );
    }

    #[test]
    fn never_prime_on_identity_pairs() {
        let p = perm(&[1, 2]);
        let (_, stats) = build_decomposition_tree_counted(&p);
        assert_eq!(
            stats,
            BuildStats {
                extensions: 1,
                prime_creations: 0
            }
        );
    }

    #[test]
    fn quotients() {
        let t = build_decomposition_tree(&Permutation::identity(5));
        assert_eq!(t.node_quotient(t.root()).unwrap(), Permutation::identity(5));
        let t = build_decomposition_tree(&Permutation::reversal(4));
        assert_eq!(t.node_quotient(t.root()).unwrap(), Permutation::reversal(4));
        let leaf = t.node(t.root()).children[0];
        assert!(t.node_quotient(leaf).is_err());
        let t = build_decomposition_tree(&perm(&[2, 4, 1, 3]));
        assert_eq!(t.node_quotient(t.root()).unwrap(), perm(&[2, 4, 1, 3]));
    }

    #[test]
    fn expansion_counts() {
        let t = build_decomposition_tree(&Permutation::identity(6));
        assert_eq!(t.expand_family(|_| {}), 21);
        let t = build_decomposition_tree(&perm(&[2, 4, 1, 3]));
        assert_eq!(t.expand_family(|_| {}), 5);
    }

    #[test]
    fn json_shape() {
        let t = build_decomposition_tree(&perm(&[2, 1]));
        assert_eq!(
            t.to_json(),
            "{\"label\": \"Decreasing\", \"pos\": [1, 2], \"val\": [1, 2], \"children\": [\n  \
             {\"label\": \"Leaf\", \"pos\": [1, 1], \"val\": [2, 2], \"children\": []},\n  \
             {\"label\": \"Leaf\", \"pos\": [2, 2], \"val\": [1, 1], \"children\": []}\n]}\n"
        );
        let v: serde_json::Value = serde_json::from_str(
            &build_decomposition_tree(&perm(&[3, 8, 1, 5, 7, 4, 6, 2])).to_json(),
        )
        .unwrap();
        assert_eq!(v["pos"], serde_json::json!([1, 8]));
        assert!(t.to_dot().starts_with("digraph"));
    }
}
