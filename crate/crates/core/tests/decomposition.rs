mod common;

use cintervals::oracle::{brute_force_decomposition, brute_force_family, random_permutation};
use cintervals::{
    build_decomposition_tree, build_decomposition_tree_counted, enumerate_common_intervals,
    is_simple, FamilyKind, NodeLabel, Permutation, Structure, TreeBuilder,
};
use common::{perm, permutation_strategy, set};
use proptest::prelude::*;

fn check_quotients(t: &cintervals::DecompositionTree) {
    for id in t.preorder() {
        let node = t.node(id);
        if node.label == NodeLabel::Leaf {
            assert!(node.children.is_empty());
            continue;
        }
        let q = t.node_quotient(id).unwrap();
        let k = q.len();
        assert!(k >= 2);
        match node.label {
            NodeLabel::Increasing => assert_eq!(q, Permutation::identity(k)),
            NodeLabel::Decreasing => assert_eq!(q, Permutation::reversal(k)),
            NodeLabel::Prime => assert!(k >= 4 && is_simple(&q), "{q}"),
            NodeLabel::Leaf => unreachable!(),
        }
    }
}

/// Run the builder step by step; before every extension attempt the rear
/// tree and `A` must not already share the label the extension would use.
fn build_checking_steps(p: &Permutation) -> usize {
    let mut b = TreeBuilder::new(p);
    let mut steps = 0;
    while b.begin_step().is_some() {
        loop {
            if let (Some(rear), Some(a)) = (b.rear(), b.current()) {
                let (rv, av) = (rear.value_range, a.value_range);
                if rv.1 + 1 == av.0 {
                    assert_ne!(a.label, NodeLabel::Increasing, "{p}");
                } else if av.1 + 1 == rv.0 {
                    assert_ne!(a.label, NodeLabel::Decreasing, "{p}");
                }
            }
            if !(b.try_extension() || b.try_prime_creation()) {
                break;
            }
        }
        b.end_step();
        steps += 1;
    }
    let (tree, stats) = b.finish();
    assert_eq!(tree, build_decomposition_tree(p));
    assert!(stats.operations() < p.len().max(1));
    steps
}

#[test]
fn small_examples() {
    let t = build_decomposition_tree(&perm(&[1, 2, 3]));
    assert_eq!(t.node(t.root()).label, NodeLabel::Increasing);
    assert_eq!(t.leaves(), vec![1, 2, 3]);
    let t = build_decomposition_tree(&perm(&[2, 1]));
    assert_eq!(t.node(t.root()).label, NodeLabel::Decreasing);
    let t = build_decomposition_tree(&perm(&[2, 4, 1, 3]));
    assert_eq!(t.node(t.root()).label, NodeLabel::Prime);
    assert_eq!(t.node(t.root()).children.len(), 4);
    let t = build_decomposition_tree(&perm(&[1]));
    assert_eq!(t.node(t.root()).label, NodeLabel::Leaf);
}

#[test]
fn step_invariants_on_random_inputs() {
    for seed in 0..300 {
        let n = 1 + (seed as usize * 37) % 200;
        assert_eq!(build_checking_steps(&random_permutation(n, seed)), n);
    }
}

#[test]
fn expansion_matches_enumeration_up_to_2000() {
    for (seed, n) in [(1, 2000), (2, 1500), (3, 777), (4, 2000)] {
        let p = random_permutation(n, seed);
        let t = build_decomposition_tree(&p);
        let mut expanded = Vec::new();
        t.expand_family(|i| expanded.push(i));
        let mut listed = Vec::new();
        enumerate_common_intervals(&p, |i| listed.push(i));
        assert_eq!(expanded, listed);
        check_quotients(&t);
    }
}

proptest! {
    #[test]
    fn tree_equals_oracle(p in permutation_strategy(30)) {
        let (t, stats) = build_decomposition_tree_counted(&p);
        prop_assert_eq!(&t, &brute_force_decomposition(&p));
        prop_assert!(stats.operations() < p.len().max(1));
        check_quotients(&t);
        build_checking_steps(&p);
    }

    #[test]
    fn nodes_are_the_overlap_free_members(p in permutation_strategy(25)) {
        let t = build_decomposition_tree(&p);
        let members = brute_force_family(FamilyKind::A, &Structure::Permutation(p.clone())).unwrap();
        let strong: Vec<_> = members
            .iter()
            .filter(|a| !members.iter().any(|b| a.overlaps(b)))
            .copied()
            .collect();
        prop_assert_eq!(set(t.node_intervals()), set(strong));
    }

    #[test]
    fn expansion_matches_enumeration(p in permutation_strategy(200)) {
        let t = build_decomposition_tree(&p);
        let mut expanded = Vec::new();
        let k = t.expand_family(|i| expanded.push(i));
        let mut listed = Vec::new();
        enumerate_common_intervals(&p, |i| listed.push(i));
        prop_assert_eq!(k, listed.len());
        prop_assert_eq!(expanded, listed);
    }
}

#[test]
fn serializations_are_stable() {
    let t = build_decomposition_tree(&perm(&[2, 1]));
    assert_eq!(
        t.to_json(),
        "{\"label\": \"Decreasing\", \"pos\": [1, 2], \"val\": [1, 2], \"children\": [\n  \
         {\"label\": \"Leaf\", \"pos\": [1, 1], \"val\": [2, 2], \"children\": []},\n  \
         {\"label\": \"Leaf\", \"pos\": [2, 2], \"val\": [1, 1], \"children\": []}\n]}\n"
    );
    let dot = t.to_dot();
    assert!(dot.starts_with("digraph") && dot.ends_with("}\n"));
    let v: serde_json::Value =
        serde_json::from_str(&build_decomposition_tree(&random_permutation(50, 9)).to_json())
            .unwrap();
    assert_eq!(v["pos"], serde_json::json!([1, 50]));
}
