//! Closed intervals of a DAG: `[x, y]` equal to its reachability closure.
//! Singletons always belong to the family.

use crate::model::{Dag, Generator, Interval};
use crate::sweep::{self, Behaviour, SweepOracle};

/// Smallest and largest labels reachable from each vertex, itself included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachExtrema {
    /// Index 0 unused.
    pub min_below: Vec<usize>,
    pub max_below: Vec<usize>,
}

/// Dynamic programming in reverse topological order, `O(n + m)`.
pub fn reach_extrema(d: &Dag) -> ReachExtrema {
    let n = d.n();
    let mut min_below: Vec<usize> = (0..=n).collect();
    let mut max_below = min_below.clone();
    for &v in d.topological_order().iter().rev() {
        for &w in d.successors(v) {
            min_below[v] = min_below[v].min(min_below[w]);
            max_below[v] = max_below[v].max(max_below[w]);
        }
    }
    ReachExtrema {
        min_below,
        max_below,
    }
}

/// Store rule for closed intervals. A vertex reaching below itself never
/// enters the store.
#[derive(Debug, Clone, Copy)]
pub struct ClosedOracle<'a> {
    ext: &'a ReachExtrema,
    mirrored: bool,
}

impl<'a> ClosedOracle<'a> {
    pub fn forward(ext: &'a ReachExtrema) -> Self {
        ClosedOracle {
            ext,
            mirrored: false,
        }
    }

    /// The oracle of the relabeled DAG `v -> n + 1 - v`, read off `ext`.
    pub fn mirror(ext: &'a ReachExtrema) -> Self {
        ClosedOracle {
            ext,
            mirrored: true,
        }
    }

    #[inline]
    fn min_below(&self, y: usize) -> usize {
        if self.mirrored {
            let n1 = self.ext.min_below.len();
            n1 - self.ext.max_below[n1 - y]
        } else {
            self.ext.min_below[y]
        }
    }
}

impl SweepOracle for ClosedOracle<'_> {
    fn behaviour(&self) -> Behaviour {
        Behaviour::Stack
    }

    #[inline]
    fn dead_on_arrival(&self, y: usize) -> bool {
        self.min_below(y) < y
    }

    #[inline]
    fn evict_back(&self, x: usize, y: usize) -> bool {
        self.min_below(y) < x
    }
}

/// Generator of the closed intervals of `d`, `O(n + m)`.
pub fn closed_interval_generator(d: &Dag) -> Generator {
    let ext = reach_extrema(d);
    sweep::generator_from_oracles(
        d.n(),
        ClosedOracle::forward(&ext),
        ClosedOracle::mirror(&ext),
    )
}

/// Emit the closed intervals in emission order; returns their number.
pub fn enumerate_closed_intervals(d: &Dag, sink: impl FnMut(Interval)) -> usize {
    let ext = reach_extrema(d);
    sweep::enumerate_with_oracles(
        d.n(),
        ClosedOracle::forward(&ext),
        ClosedOracle::mirror(&ext),
        sink,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::sort_emission_order;

    fn family(n: usize, arcs: &[(usize, usize)]) -> Vec<Interval> {
        closed_interval_generator(&Dag::new(n, arcs.to_vec()).unwrap()).materialize()
    }

    fn with_singletons(n: usize, extra: &[(usize, usize)]) -> Vec<Interval> {
        let mut v: Vec<_> = (1..=n).map(Interval::singleton).collect();
        v.extend(extra.iter().map(|&(x, y)| Interval::new(x, y)));
        sort_emission_order(&mut v);
        v
    }

    #[test]
    fn extrema() {
        let chain = Dag::new(3, vec![(1, 2), (2, 3)]).unwrap();
        let e = reach_extrema(&chain);
        assert_eq!(e.min_below[1..], [1, 2, 3]);
        assert_eq!(e.max_below[1..], [3, 3, 3]);
        let back = Dag::new(3, vec![(2, 1)]).unwrap();
        assert_eq!(reach_extrema(&back).min_below[1..], [1, 1, 3]);
    }

    #[test]
    fn examples() {
        assert_eq!(family(3, &[]).len(), 6);
        assert_eq!(
            family(3, &[(1, 2), (2, 3)]),
            with_singletons(3, &[(2, 3), (1, 3)])
        );
        assert_eq!(family(3, &[(2, 1)]), with_singletons(3, &[(1, 2), (1, 3)]));
        let chain = Dag::new(3, vec![(1, 2), (2, 3)]).unwrap();
        assert_eq!(enumerate_closed_intervals(&chain, |_| {}), 5);
    }
}
