//! Interval families of a labeled tree: connected intervals (E), intervals
//! contained in a path (F) and path intervals (G).

use std::collections::BTreeMap;

use crate::error::Result;
use crate::model::{check_vertex, Generator, Interval, LabeledTree};
use crate::sweep::{self, Behaviour, Meet, SweepOracle};

/// Disjoint sets with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merge the sets of `a` and `b`; returns the new representative.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        a
    }
}

/// Lowest common ancestors of a rooted tree over `1..=n` by Euler tour
/// and a sparse table of depth minima. `O(n log n)` build, `O(1)` query.
#[derive(Debug, Clone)]
pub struct LcaIndex {
    euler: Vec<u32>,
    first: Vec<u32>,
    depth: Vec<u32>,
    // table[k][i]: euler index of the shallowest entry in [i, i + 2^k)
    table: Vec<Vec<u32>>,
}

impl LcaIndex {
    /// `children[v]` lists the children of `v`; index 0 is unused.
    pub fn new(root: usize, children: &[Vec<usize>]) -> Self {
        let n = children.len() - 1;
        let mut euler = Vec::with_capacity(2 * n);
        let mut first = vec![0u32; n + 1];
        let mut depth = vec![0u32; n + 1];
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        first[root] = 0;
        euler.push(root as u32);
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < children[v].len() {
                let c = children[v][*next];
                *next += 1;
                depth[c] = depth[v] + 1;
                first[c] = euler.len() as u32;
                euler.push(c as u32);
                stack.push((c, 0));
            } else {
                stack.pop();
                if let Some(&(parent, _)) = stack.last() {
                    euler.push(parent as u32);
                }
            }
        }
        let m = euler.len();
        let mut table = vec![(0..m as u32).collect::<Vec<u32>>()];
        let mut width = 1;
        while 2 * width <= m {
            let prev = table.last().unwrap();
            let level: Vec<u32> = (0..=m - 2 * width)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + width]);
                    if depth[euler[a as usize] as usize] <= depth[euler[b as usize] as usize] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            table.push(level);
            width *= 2;
        }
        LcaIndex {
            euler,
            first,
            depth,
            table,
        }
    }

    #[inline]
    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut l, mut r) = (self.first[u] as usize, self.first[v] as usize);
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let k = (r - l + 1).ilog2() as usize;
        let (a, b) = (self.table[k][l], self.table[k][r + 1 - (1 << k)]);
        let (a, b) = (
            self.euler[a as usize] as usize,
            self.euler[b as usize] as usize,
        );
        if self.depth[a] <= self.depth[b] {
            a
        } else {
            b
        }
    }

    #[inline]
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v] as usize
    }
}

/// Constant-time minimum-label-on-path and on-path queries over a tree.
#[derive(Debug, Clone)]
pub struct MinPathIndex {
    n: usize,
    cartesian_parent: Vec<usize>,
    cartesian: LcaIndex,
    rooted: LcaIndex,
}

/// Build the index: a topological Cartesian tree (parent of each component
/// root is the smallest label joining it), plus LCA over both that tree and
/// the original tree rooted at `1`.
pub fn build_min_path_index(t: &LabeledTree) -> MinPathIndex {
    let n = t.n();
    // Vertices in decreasing label order; each absorbs the components of its
    // already-processed (larger) neighbours. The LCA of x and y in the
    // resulting tree is the smallest label on their path.
    let mut sets = DisjointSets::new(n + 1);
    let mut top = (0..=n).collect::<Vec<usize>>();
    let mut cartesian_parent = vec![0; n + 1];
    let mut cart_children = vec![Vec::new(); n + 1];
    for v in (1..=n).rev() {
        for &u in t.neighbors(v) {
            if u > v {
                let r = sets.find(u);
                let head = top[r];
                cartesian_parent[head] = v;
                cart_children[v].push(head);
                let rep = sets.union(v, r);
                top[rep] = v;
            }
        }
    }
    let cartesian = LcaIndex::new(1, &cart_children);

    let mut rooted_children = vec![Vec::new(); n + 1];
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &u in t.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                rooted_children[v].push(u);
                stack.push(u);
            }
        }
    }
    let rooted = LcaIndex::new(1, &rooted_children);
    MinPathIndex {
        n,
        cartesian_parent,
        cartesian,
        rooted,
    }
}

impl MinPathIndex {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Parent of `v` in the topological Cartesian tree (`0` for the root `1`).
    pub fn cartesian_parent(&self, v: usize) -> usize {
        self.cartesian_parent[v]
    }

    /// Smallest label on the path from `x` to `y`, endpoints included.
    pub fn min_on_path(&self, x: usize, y: usize) -> Result<usize> {
        check_vertex(self.n, "x", x)?;
        check_vertex(self.n, "y", y)?;
        Ok(self.min_on_path_unchecked(x, y))
    }

    #[inline]
    pub(crate) fn min_on_path_unchecked(&self, x: usize, y: usize) -> usize {
        self.cartesian.lca(x, y)
    }

    /// Number of edges between `a` and `b`.
    #[inline]
    pub fn distance(&self, a: usize, b: usize) -> usize {
        let c = self.rooted.lca(a, b);
        self.rooted.depth(a) + self.rooted.depth(b) - 2 * self.rooted.depth(c)
    }

    /// `z` lies on the path between `x` and `y`.
    #[inline]
    pub fn on_path(&self, z: usize, x: usize, y: usize) -> bool {
        self.distance(x, z) + self.distance(z, y) == self.distance(x, y)
    }

    /// One of the three vertices lies on the path of the other two.
    #[inline]
    pub fn aligned(&self, a: usize, b: usize, c: usize) -> bool {
        self.on_path(a, b, c) || self.on_path(b, a, c) || self.on_path(c, a, b)
    }
}

/// Store rule for connected intervals: pop `x` once the path from `x` to
/// `y` dips below `x`.
#[derive(Debug, Clone, Copy)]
pub struct ConnectedOracle<'a> {
    idx: &'a MinPathIndex,
}

impl<'a> ConnectedOracle<'a> {
    pub fn new(idx: &'a MinPathIndex) -> Self {
        ConnectedOracle { idx }
    }
}

impl SweepOracle for ConnectedOracle<'_> {
    fn behaviour(&self) -> Behaviour {
        Behaviour::Stack
    }

    #[inline]
    fn evict_back(&self, x: usize, y: usize) -> bool {
        self.idx.min_on_path_unchecked(x, y) < x
    }
}

/// Store rule for intervals lying on one path of the tree.
///
/// Tracks the contiguous label range `[front, y]` that lies on a path,
/// ordered along that path by a signed offset. At each arrival the
/// smallest labels are dropped until the path's two ends and `y` are
/// aligned; everything below `front` is then evicted from the store.
#[derive(Debug, Clone)]
pub struct InPathOracle<'a> {
    idx: &'a MinPathIndex,
    along: BTreeMap<i64, usize>,
    offset: Vec<i64>,
    front: usize,
    /// Labels dropped by the alignment test, in order.
    pub dropped: usize,
}

impl<'a> InPathOracle<'a> {
    pub fn new(idx: &'a MinPathIndex) -> Self {
        InPathOracle {
            idx,
            along: BTreeMap::new(),
            offset: vec![0; idx.n() + 1],
            front: 1,
            dropped: 0,
        }
    }

    fn ends(&self) -> Option<(usize, usize)> {
        let (_, &a) = self.along.first_key_value()?;
        let (_, &b) = self.along.last_key_value()?;
        Some((a, b))
    }
}

impl SweepOracle for InPathOracle<'_> {
    fn behaviour(&self) -> Behaviour {
        Behaviour::Deque
    }

    fn arrive(&mut self, y: usize) {
        let idx = self.idx;
        while let Some((a, b)) = self.ends() {
            if idx.aligned(a, b, y) {
                break;
            }
            self.along.remove(&self.offset[self.front]);
            self.front += 1;
            self.dropped += 1;
        }
        let key = match self.ends() {
            None => {
                self.front = y;
                0
            }
            Some((a, b)) => {
                if idx.on_path(y, a, b) {
                    self.offset[a] + idx.distance(a, y) as i64
                } else if idx.on_path(b, a, y) {
                    self.offset[b] + idx.distance(b, y) as i64
                } else {
                    self.offset[a] - idx.distance(a, y) as i64
                }
            }
        };
        self.offset[y] = key;
        self.along.insert(key, y);
    }

    fn evict_back(&self, _x: usize, _y: usize) -> bool {
        false
    }

    #[inline]
    fn evict_front(&self, x: usize, _y: usize) -> bool {
        x < self.front
    }
}

/// Index of `t` and of its reflection, for the two sweeps.
fn indexes(t: &LabeledTree) -> (MinPathIndex, MinPathIndex) {
    (build_min_path_index(t), build_min_path_index(&t.reflect()))
}

/// Generator of the intervals `I` with `T[I]` connected.
pub fn connected_interval_generator(t: &LabeledTree) -> Generator {
    let (fwd, mirror) = indexes(t);
    sweep::generator_from_oracles(
        t.n(),
        ConnectedOracle::new(&fwd),
        ConnectedOracle::new(&mirror),
    )
}

/// Emit the connected intervals in `O(n + K)` after index construction.
pub fn enumerate_connected_intervals(t: &LabeledTree, sink: impl FnMut(Interval)) -> usize {
    let (fwd, mirror) = indexes(t);
    sweep::enumerate_with_oracles(
        t.n(),
        ConnectedOracle::new(&fwd),
        ConnectedOracle::new(&mirror),
        sink,
    )
}

/// Generator of the intervals whose vertices all lie on one path of `t`.
pub fn in_path_generator(t: &LabeledTree) -> Generator {
    let (fwd, mirror) = indexes(t);
    sweep::generator_from_oracles(t.n(), InPathOracle::new(&fwd), InPathOracle::new(&mirror))
}

/// Generator of the intervals inducing a path: connected and on a path.
pub fn path_interval_generator(t: &LabeledTree) -> Generator {
    connected_interval_generator(t)
        .intersect(&in_path_generator(t))
        .expect("same size")
}

pub(crate) fn enumerate_class(
    kind: crate::FamilyKind,
    t: &LabeledTree,
    sink: impl FnMut(Interval),
) -> usize {
    use crate::FamilyKind as K;
    let (fwd, mirror) = indexes(t);
    let n = t.n();
    match kind {
        K::E => sweep::enumerate_with_oracles(
            n,
            ConnectedOracle::new(&fwd),
            ConnectedOracle::new(&mirror),
            sink,
        ),
        K::F => sweep::enumerate_with_oracles(
            n,
            InPathOracle::new(&fwd),
            InPathOracle::new(&mirror),
            sink,
        ),
        K::G => sweep::enumerate_with_oracles(
            n,
            Meet(ConnectedOracle::new(&fwd), InPathOracle::new(&fwd)),
            Meet(ConnectedOracle::new(&mirror), InPathOracle::new(&mirror)),
            sink,
        ),
        other => panic!("family {other} is not a tree family"),
    }
}
