mod common;

use cintervals::oracle::{brute_force_family, is_closed_under_intersection, random_dag};
use cintervals::{
    closed_interval_generator, enumerate_closed_intervals, reach_extrema, Dag, FamilyKind,
    Structure,
};
use common::set;
use proptest::prelude::*;

proptest! {
    #[test]
    fn fast_path_matches_closure(n in 1usize..33, seed: u64, density in prop::sample::select(vec![0.05, 0.2, 0.5])) {
        let d = random_dag(n, density, seed);
        let g = closed_interval_generator(&d).materialize();
        prop_assert_eq!(&g, &brute_force_family(FamilyKind::H, &Structure::Dag(d.clone())).unwrap());
        let mut listed = Vec::new();
        prop_assert_eq!(enumerate_closed_intervals(&d, |i| listed.push(i)), g.len());
        prop_assert_eq!(&listed, &g);
        prop_assert!(is_closed_under_intersection(&g));
    }

    #[test]
    fn extrema_recurrence(n in 1usize..40, seed: u64) {
        let d = random_dag(n, 0.2, seed);
        let e = reach_extrema(&d);
        for v in 1..=n {
            let lo = d.successors(v).iter().map(|&w| e.min_below[w]).fold(v, usize::min);
            let hi = d.successors(v).iter().map(|&w| e.max_below[w]).fold(v, usize::max);
            prop_assert_eq!(e.min_below[v], lo);
            prop_assert_eq!(e.max_below[v], hi);
        }
    }

    #[test]
    fn relabeling_reflects_the_family(n in 1usize..25, seed: u64) {
        let d = random_dag(n, 0.3, seed);
        let mirrored = set(closed_interval_generator(&d).materialize().into_iter().map(|i| common::reflect(n, i)));
        prop_assert_eq!(mirrored, set(closed_interval_generator(&d.reflect()).materialize()));
    }
}

#[test]
fn arc_free_dags_close_everything() {
    for n in [1, 2, 10, 100] {
        let d = Dag::new(n, vec![]).unwrap();
        assert_eq!(enumerate_closed_intervals(&d, |_| {}), n * (n + 1) / 2);
    }
}

#[test]
fn cycles_are_rejected() {
    assert!(matches!(
        Dag::new(3, vec![(1, 2), (2, 3), (3, 1)]),
        Err(cintervals::Error::CycleDetected)
    ));
}
