mod common;

use cintervals::oracle::{brute_force_family, is_closed_under_intersection, random_instance};
use cintervals::{family_generator, FamilyKind, Generator, Interval, Permutation, Structure};
use common::{all_permutations, set};
use proptest::prelude::*;

fn perm_structures(n: usize) -> impl Iterator<Item = Structure> {
    all_permutations(n).map(Structure::Permutation)
}

#[test]
fn membership_matches_definition_on_every_pair() {
    for kind in FamilyKind::ALL {
        for seed in 0..60 {
            let n = 1 + seed as usize % 10;
            let s = random_instance(kind, n, seed).unwrap();
            let g = family_generator(kind, &s).unwrap();
            let truth = set(brute_force_family(kind, &s).unwrap());
            for y in 1..=n {
                for x in 1..=y {
                    let member = g.is_member(x, y).unwrap();
                    assert_eq!(
                        member,
                        truth.contains(&Interval::new(x, y)),
                        "{kind} {x} {y}"
                    );
                }
            }
        }
    }
}

#[test]
fn intersection_is_set_intersection() {
    for n in 1..=8 {
        for s in perm_structures(n) {
            let a = family_generator(FamilyKind::A, &s).unwrap();
            let b = family_generator(FamilyKind::B, &s).unwrap();
            let c = family_generator(FamilyKind::C, &s).unwrap();
            for (g, h) in [(&a, &c), (&b, &c), (&a, &b)] {
                let expected: Vec<_> = set(g.materialize())
                    .intersection(&set(h.materialize()))
                    .copied()
                    .collect();
                assert_eq!(set(g.intersect(h).unwrap().materialize()), set(expected));
            }
        }
    }
}

#[test]
fn intersect_rejects_size_mismatch() {
    assert!(Generator::full(3).intersect(&Generator::full(4)).is_err());
}

proptest! {
    #[test]
    fn produced_families_are_intersection_closed(kind_ix in 0usize..8, n in 1usize..14, seed: u64) {
        let kind = FamilyKind::ALL[kind_ix];
        let s = random_instance(kind, n, seed).unwrap();
        let members = family_generator(kind, &s).unwrap().materialize();
        prop_assert!(is_closed_under_intersection(&members));
    }

    #[test]
    fn singletons_always_members(kind_ix in 0usize..8, n in 1usize..40, seed: u64) {
        let kind = FamilyKind::ALL[kind_ix];
        let g = family_generator(kind, &random_instance(kind, n, seed).unwrap()).unwrap();
        for x in 1..=n {
            prop_assert!(g.is_member(x, x).unwrap());
        }
    }

    #[test]
    fn materialize_agrees_with_membership(r_raw in proptest::collection::vec(0usize..100, 1..12), seed: u64) {
        // any valid (R, L) pair is a generator of something
        let n = r_raw.len();
        let r: Vec<usize> = r_raw.iter().enumerate().map(|(i, v)| i + 1 + v % (n - i)).collect();
        let l: Vec<usize> = (1..=n).map(|y| 1 + (seed as usize + y * 7) % y).collect();
        let g = Generator::new(r, l).unwrap();
        let listed = set(g.materialize());
        for y in 1..=n {
            for x in 1..=y {
                prop_assert_eq!(listed.contains(&Interval::new(x, y)), g.is_member(x, y).unwrap());
            }
        }
        prop_assert_eq!(g.canonical().materialize(), g.materialize());
    }
}

#[test]
fn kind_mismatch_is_reported() {
    let s = Structure::Permutation(Permutation::identity(3));
    assert!(family_generator(FamilyKind::E, &s).is_err());
    assert!(brute_force_family(FamilyKind::H, &s).is_err());
}
