mod common;

use cintervals::oracle::{brute_force_family, random_tree};
use cintervals::{
    build_min_path_index, common_interval_generator, connected_interval_generator,
    enumerate_connected_intervals, in_path_generator, path_interval_generator, FamilyKind,
    LabeledTree, Structure,
};
use common::{all_permutations, naive_min_on_path, set};
use proptest::prelude::*;

#[test]
fn min_on_path_matches_path_walk() {
    for (n, seed) in [(1, 0), (2, 1), (17, 2), (64, 3), (200, 4), (200, 5)] {
        let t = random_tree(n, seed);
        let idx = build_min_path_index(&t);
        for x in 1..=n {
            for y in 1..=n {
                assert_eq!(idx.min_on_path(x, y).unwrap(), naive_min_on_path(&t, x, y));
            }
        }
    }
}

#[test]
fn labeled_path_matches_common_intervals() {
    // the path visiting P(1), ..., P(n): [x, y] is connected iff the
    // positions of x..=y are consecutive, i.e. a common interval of P^-1
    for n in 1..=8 {
        for p in all_permutations(n) {
            let t = LabeledTree::path(p.values()).unwrap();
            assert_eq!(
                connected_interval_generator(&t).materialize(),
                common_interval_generator(&p.inverse()).materialize()
            );
        }
    }
}

#[test]
fn star_counts() {
    for n in [1, 2, 3, 10, 100] {
        let t = LabeledTree::star(n).unwrap();
        assert_eq!(
            connected_interval_generator(&t).materialize().len(),
            2 * n - 1
        );
        assert_eq!(enumerate_connected_intervals(&t, |_| {}), 2 * n - 1);
    }
}

proptest! {
    #[test]
    fn fast_paths_match_definitions(n in 1usize..40, seed: u64) {
        let t = random_tree(n, seed);
        let s = Structure::Tree(t.clone());
        let e = connected_interval_generator(&t).materialize();
        let f = in_path_generator(&t).materialize();
        let g = path_interval_generator(&t).materialize();
        prop_assert_eq!(&e, &brute_force_family(FamilyKind::E, &s).unwrap());
        prop_assert_eq!(&f, &brute_force_family(FamilyKind::F, &s).unwrap());
        prop_assert_eq!(&g, &brute_force_family(FamilyKind::G, &s).unwrap());
        let meet: Vec<_> = set(e).intersection(&set(f)).copied().collect();
        prop_assert_eq!(set(g.clone()), set(meet));
        for kind in [FamilyKind::E, FamilyKind::F, FamilyKind::G] {
            let listed = cintervals::family_members(kind, &s).unwrap();
            prop_assert_eq!(listed, cintervals::family_generator(kind, &s).unwrap().materialize());
        }
    }

    #[test]
    fn reflection_reflects_families(n in 1usize..30, seed: u64) {
        let t = random_tree(n, seed);
        let r = t.reflect();
        for (a, b) in [
            (connected_interval_generator(&t), connected_interval_generator(&r)),
            (in_path_generator(&t), in_path_generator(&r)),
        ] {
            let mirrored = set(a.materialize().into_iter().map(|i| common::reflect(n, i)));
            prop_assert_eq!(mirrored, set(b.materialize()));
        }
    }
}

#[test]
fn invalid_trees_are_rejected() {
    assert!(LabeledTree::new(3, vec![(1, 2)]).is_err());
    assert!(LabeledTree::new(3, vec![(1, 2), (1, 2)]).is_err());
    assert!(LabeledTree::new(3, vec![(1, 1), (2, 3)]).is_err());
    assert!(LabeledTree::new(2, vec![(1, 3)]).is_err());
    assert!(build_min_path_index(&LabeledTree::star(3).unwrap())
        .min_on_path(4, 1)
        .is_err());
}
