#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use cintervals::{Interval, LabeledTree, Permutation};
use itertools::Itertools;
use proptest::prelude::*;

pub fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

/// Every permutation of `1..=n`.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n)
        .permutations(n)
        .map(|v| Permutation::new(v).unwrap())
}

pub fn set(v: impl IntoIterator<Item = Interval>) -> BTreeSet<Interval> {
    v.into_iter().collect()
}

pub fn permutation_strategy(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

/// `[x, y]` mapped to `[n + 1 - y, n + 1 - x]`.
pub fn reflect(n: usize, i: Interval) -> Interval {
    Interval::new(n + 1 - i.end, n + 1 - i.begin)
}

/// Smallest label on the path, by walking BFS parents.
pub fn naive_min_on_path(t: &LabeledTree, x: usize, y: usize) -> usize {
    let mut parent = vec![0; t.n() + 1];
    let mut seen = vec![false; t.n() + 1];
    seen[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for &w in t.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut best = y;
    let mut cur = y;
    while cur != x {
        cur = parent[cur];
        best = best.min(cur);
    }
    best
}

/// Rear-contiguity of store evictions, read off the right splitters: at
/// each step the evicted vertices all exceed the survivors (stack) or all
/// precede them (prefix).
pub fn evictions_contiguous(right: &[usize], at_rear: bool) -> bool {
    let n = right.len();
    (1..=n).all(|y| {
        let evicted: Vec<usize> = (1..y).filter(|&x| right[x - 1] == y).collect();
        let kept: Vec<usize> = (1..y).filter(|&x| right[x - 1] > y).collect();
        match (evicted.is_empty(), kept.is_empty()) {
            (true, _) | (_, true) => true,
            _ if at_rear => evicted[0] > *kept.last().unwrap(),
            _ => *evicted.last().unwrap() < kept[0],
        }
    })
}
