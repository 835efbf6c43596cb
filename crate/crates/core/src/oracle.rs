//! Definition-level reference computations and seeded random instances.
//!
//! Everything here favours obviousness over speed; the families are
//! evaluated interval by interval from their defining predicates.
//!
//! Random instances are driven by SplitMix64 (Steele, Lea and Flood):
//! state `s += 0x9e3779b97f4a7c15`, output mixed by
//! `z = (z ^ z >> 30) * 0xbf58476d1ce4e5b9`, `z = (z ^ z >> 27) * 0x94d049bb133111eb`,
//! `z ^ z >> 31`. A bounded draw in `[0, k)` is `(u64 * k) >> 64` over 128
//! bits; a unit draw is `(u64 >> 11) * 2^-53`.

use std::collections::VecDeque;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::decomp::{DecompositionNode, DecompositionTree, NodeLabel};
use crate::error::{Error, Result};
use crate::model::{
    sort_emission_order, Dag, FamilyKind, Interval, LabeledTree, Permutation, Structure,
};

/// Seed of the deterministic instance generator.
pub type Seed = u64;

/// Deterministic random source shared by all instance generators.
#[derive(Debug, Clone)]
pub struct InstanceRng(SplitMix64);

impl InstanceRng {
    pub fn new(seed: Seed) -> Self {
        InstanceRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, bound)`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Uniform in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Fisher-Yates shuffle of `1..=n`.
    pub fn shuffled(&mut self, n: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = self.below(i + 1);
            v.swap(i, j);
        }
        v
    }
}

pub fn random_permutation(n: usize, seed: Seed) -> Permutation {
    Permutation::new(InstanceRng::new(seed).shuffled(n)).expect("shuffle is a bijection")
}

/// Each vertex after the first attaches to a uniform earlier one; labels are
/// then shuffled.
pub fn random_tree(n: usize, seed: Seed) -> LabeledTree {
    let mut rng = InstanceRng::new(seed);
    let parents: Vec<usize> = (1..n).map(|i| rng.below(i)).collect();
    let label = rng.shuffled(n);
    let edges = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| (label[i + 1], label[p]))
        .collect();
    LabeledTree::new(n, edges).expect("random tree is valid")
}

/// Vertices are put in a random order; each pair gets an arc from the
/// earlier to the later vertex with probability `density`.
pub fn random_dag(n: usize, density: f64, seed: Seed) -> Dag {
    let mut rng = InstanceRng::new(seed);
    let order = rng.shuffled(n);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.unit() < density {
                arcs.push((order[i], order[j]));
            }
        }
    }
    Dag::new(n, arcs).expect("arcs follow a linear order")
}

/// Arc density used by [`random_instance`] for DAG families.
pub const DEFAULT_DAG_DENSITY: f64 = 0.2;

/// A random structure of the kind family `kind` is defined on.
pub fn random_instance(kind: FamilyKind, n: usize, seed: Seed) -> Result<Structure> {
    if n == 0 {
        return Err(Error::Empty);
    }
    Ok(match kind.input() {
        crate::StructureKind::Permutation => Structure::Permutation(random_permutation(n, seed)),
        crate::StructureKind::Tree => Structure::Tree(random_tree(n, seed)),
        crate::StructureKind::Dag => Structure::Dag(random_dag(n, DEFAULT_DAG_DENSITY, seed)),
    })
}

fn mismatch(kind: FamilyKind) -> Error {
    Error::KindMismatch {
        kind,
        expected: kind.input().name(),
    }
}

/// Every member of family `kind` on `s`, by its definition, in emission order.
pub fn brute_force_family(kind: FamilyKind, s: &Structure) -> Result<Vec<Interval>> {
    use FamilyKind as K;
    let n = s.n();
    let test: Box<dyn Fn(usize, usize) -> bool + '_> = match (kind, s) {
        (K::A | K::B | K::C | K::D, Structure::Permutation(p)) => {
            let p = p.clone();
            Box::new(move |x, y| permutation_member(kind, &p, x, y))
        }
        (K::E | K::F | K::G, Structure::Tree(t)) => {
            let dist = all_distances(t);
            Box::new(move |x, y| tree_member(kind, t, &dist, x, y))
        }
        (K::H, Structure::Dag(d)) => {
            let reach = reachability(d);
            Box::new(move |x, y| {
                x == y
                    || reach[x..=y]
                        .iter()
                        .all(|r| r.iter().all(|&w| (x..=y).contains(&w)))
            })
        }
        _ => return Err(mismatch(kind)),
    };
    let mut out = Vec::new();
    for y in 1..=n {
        for x in (1..=y).rev() {
            if test(x, y) {
                out.push(Interval::new(x, y));
            }
        }
    }
    sort_emission_order(&mut out);
    Ok(out)
}

fn permutation_member(kind: FamilyKind, p: &Permutation, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    let vals: Vec<usize> = (x..=y).map(|k| p.at(k)).collect();
    let lo = *vals.iter().min().unwrap();
    let hi = *vals.iter().max().unwrap();
    let contiguous = hi - lo == y - x;
    match kind {
        FamilyKind::A => contiguous,
        FamilyKind::B => contiguous && lo == x,
        FamilyKind::C => p.at(x) <= p.at(y) && lo >= p.at(x) && hi <= p.at(y),
        FamilyKind::D => contiguous && lo == p.at(x) && hi == p.at(y),
        _ => unreachable!(),
    }
}

/// `dist[u][v]` in edges, by one BFS per vertex.
fn all_distances(t: &LabeledTree) -> Vec<Vec<usize>> {
    let n = t.n();
    let mut dist = vec![vec![usize::MAX; n + 1]; n + 1];
    for s in 1..=n {
        let d = &mut dist[s];
        d[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in t.neighbors(u) {
                if d[w] == usize::MAX {
                    d[w] = d[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

fn tree_member(kind: FamilyKind, t: &LabeledTree, dist: &[Vec<usize>], x: usize, y: usize) -> bool {
    let inside = |v: usize| (x..=y).contains(&v);
    let connected = || {
        let mut seen = vec![false; y + 1];
        seen[x] = true;
        let mut stack = vec![x];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in t.neighbors(u) {
                if inside(w) && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == y - x + 1
    };
    let on_a_path = || {
        // the farthest pair inside the interval spans the only candidate path
        let (mut a, mut b) = (x, x);
        for u in x..=y {
            for v in u..=y {
                if dist[u][v] > dist[a][b] {
                    (a, b) = (u, v);
                }
            }
        }
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            cur = *t
                .neighbors(cur)
                .iter()
                .find(|&&w| dist[w][b] + 1 == dist[cur][b])
                .expect("a neighbour is closer");
            path.push(cur);
        }
        (x..=y).all(|v| path.contains(&v))
    };
    let max_degree = || {
        (x..=y)
            .map(|v| t.neighbors(v).iter().filter(|&&w| inside(w)).count())
            .max()
            .unwrap()
    };
    match kind {
        FamilyKind::E => connected(),
        FamilyKind::F => on_a_path(),
        FamilyKind::G => connected() && max_degree() <= 2,
        _ => unreachable!(),
    }
}

/// `reach[v]`: every vertex reachable from `v`, `v` included.
fn reachability(d: &Dag) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut reach = vec![Vec::new(); n + 1];
    for (s, r) in reach.iter_mut().enumerate().skip(1) {
        let mut seen = vec![false; n + 1];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            r.push(u);
            for &w in d.successors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    reach
}

/// Decomposition tree from first principles: the overlap-free common
/// intervals ordered by inclusion, each internal node labeled by its quotient.
pub fn brute_force_decomposition(p: &Permutation) -> DecompositionTree {
    let n = p.len();
    let common = brute_force_family(FamilyKind::A, &Structure::Permutation(p.clone()))
        .expect("permutation input");
    let mut strong: Vec<Interval> = common
        .iter()
        .filter(|a| !common.iter().any(|b| a.overlaps(b)))
        .copied()
        .collect();
    // parents before children
    strong.sort_by_key(|i| (i.begin, std::cmp::Reverse(i.end)));

    let value_range = |i: &Interval| {
        let vals = (i.begin..=i.end).map(|k| p.at(k));
        (vals.clone().min().unwrap(), vals.max().unwrap())
    };
    let mut nodes: Vec<DecompositionNode> = strong
        .iter()
        .map(|i| DecompositionNode {
            label: if i.len() == 1 {
                NodeLabel::Leaf
            } else {
                NodeLabel::Prime
            },
            position_range: Interval::new(i.begin, i.end),
            value_range: value_range(i),
            children: Vec::new(),
        })
        .collect();
    let mut open: Vec<usize> = Vec::new();
    for (id, i) in strong.iter().enumerate() {
        while let Some(&top) = open.last() {
            if strong[top].contains_interval(i) {
                break;
            }
            open.pop();
        }
        if let Some(&top) = open.last() {
            nodes[top].children.push(id);
        }
        open.push(id);
    }
    for id in 0..nodes.len() {
        if nodes[id].children.is_empty() {
            continue;
        }
        let mins: Vec<usize> = nodes[id]
            .children
            .iter()
            .map(|&c| nodes[c].value_range.0)
            .collect();
        let increasing = mins.windows(2).all(|w| w[0] < w[1]);
        let decreasing = mins.windows(2).all(|w| w[0] > w[1]);
        nodes[id].label = if increasing {
            NodeLabel::Increasing
        } else if decreasing {
            NodeLabel::Decreasing
        } else {
            NodeLabel::Prime
        };
    }
    let root = strong
        .iter()
        .position(|i| i.begin == 1 && i.end == n)
        .expect("whole set is overlap-free");
    DecompositionTree::from_arena(n, nodes, root)
}

/// Any two overlapping members have their intersection in the family.
pub fn is_closed_under_intersection(members: &[Interval]) -> bool {
    let set: std::collections::HashSet<Interval> = members.iter().copied().collect();
    members.iter().all(|a| {
        members.iter().all(|b| match a.intersection(b) {
            Some(c) => set.contains(&c),
            None => true,
        })
    })
}
