//! Dispatch from a family kind to its fast-path generator and enumerator.

use crate::error::{Error, Result};
use crate::model::{FamilyKind, Generator, Interval, Structure};
use crate::sweep::{self, Meet, SplitterVectors, SweepOracle, SweepStats};
use crate::{dag, perm, tree};

fn mismatch(kind: FamilyKind) -> Error {
    Error::KindMismatch {
        kind,
        expected: kind.input().name(),
    }
}

/// Generator of family `kind` on `s`, in linear time.
pub fn family_generator(kind: FamilyKind, s: &Structure) -> Result<Generator> {
    use FamilyKind as K;
    Ok(match (kind, s) {
        (K::A, Structure::Permutation(p)) => perm::common_interval_generator(p),
        (K::B, Structure::Permutation(p)) => perm::fixed_interval_generator(p),
        (K::C, Structure::Permutation(p)) => perm::frame_interval_generator(p),
        (K::D, Structure::Permutation(p)) => perm::hurdle_generator(p),
        (K::E, Structure::Tree(t)) => tree::connected_interval_generator(t),
        (K::F, Structure::Tree(t)) => tree::in_path_generator(t),
        (K::G, Structure::Tree(t)) => tree::path_interval_generator(t),
        (K::H, Structure::Dag(d)) => dag::closed_interval_generator(d),
        _ => return Err(mismatch(kind)),
    })
}

/// Emit every member of family `kind` on `s` in emission order
/// (`y` ascending, then `x` descending); returns their number.
pub fn enumerate_family(
    kind: FamilyKind,
    s: &Structure,
    sink: impl FnMut(Interval),
) -> Result<usize> {
    use FamilyKind as K;
    Ok(match (kind, s) {
        (K::A | K::B | K::C | K::D, Structure::Permutation(p)) => {
            perm::enumerate_class(kind, p, sink)
        }
        (K::E | K::F | K::G, Structure::Tree(t)) => tree::enumerate_class(kind, t, sink),
        (K::H, Structure::Dag(d)) => dag::enumerate_closed_intervals(d, sink),
        _ => return Err(mismatch(kind)),
    })
}

/// All members of family `kind` on `s`, collected.
pub fn family_members(kind: FamilyKind, s: &Structure) -> Result<Vec<Interval>> {
    let mut out = Vec::new();
    enumerate_family(kind, s, |i| out.push(i))?;
    Ok(out)
}

/// Work counters of the two splitter sweeps behind a generator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GeneratorStats {
    pub right: SweepStats,
    pub left: SweepStats,
}

/// Receives the forward and mirror oracles of one family.
trait OracleVisitor {
    type Out;
    fn visit<O: SweepOracle, M: SweepOracle>(self, n: usize, forward: O, mirror: M) -> Self::Out;
}

fn with_oracles<V: OracleVisitor>(kind: FamilyKind, s: &Structure, v: V) -> Result<V::Out> {
    use perm::{CommonOracle, FixedOracle, FrameOracle};
    use tree::{ConnectedOracle, InPathOracle};
    use FamilyKind as K;
    let n = s.n();
    Ok(match (kind, s) {
        (K::A | K::B | K::C | K::D, Structure::Permutation(p)) => {
            let ext = perm::side_extrema(p);
            let rc = p.reverse_complement();
            match kind {
                K::A => v.visit(
                    n,
                    CommonOracle::forward(p, &ext),
                    CommonOracle::mirror(p, &ext),
                ),
                K::B => v.visit(n, FixedOracle::new(p.clone()), FixedOracle::new(rc)),
                K::C => v.visit(n, FrameOracle::new(p.clone()), FrameOracle::new(rc)),
                _ => v.visit(
                    n,
                    Meet(CommonOracle::forward(p, &ext), FrameOracle::new(p.clone())),
                    Meet(CommonOracle::mirror(p, &ext), FrameOracle::new(rc)),
                ),
            }
        }
        (K::E | K::F | K::G, Structure::Tree(t)) => {
            let fwd = tree::build_min_path_index(t);
            let mir = tree::build_min_path_index(&t.reflect());
            match kind {
                K::E => v.visit(n, ConnectedOracle::new(&fwd), ConnectedOracle::new(&mir)),
                K::F => v.visit(n, InPathOracle::new(&fwd), InPathOracle::new(&mir)),
                _ => v.visit(
                    n,
                    Meet(ConnectedOracle::new(&fwd), InPathOracle::new(&fwd)),
                    Meet(ConnectedOracle::new(&mir), InPathOracle::new(&mir)),
                ),
            }
        }
        (K::H, Structure::Dag(d)) => {
            let ext = dag::reach_extrema(d);
            v.visit(
                n,
                dag::ClosedOracle::forward(&ext),
                dag::ClosedOracle::mirror(&ext),
            )
        }
        _ => return Err(mismatch(kind)),
    })
}

struct CountedGenerator;

impl OracleVisitor for CountedGenerator {
    type Out = (Generator, GeneratorStats);
    fn visit<O: SweepOracle, M: SweepOracle>(self, n: usize, forward: O, mirror: M) -> Self::Out {
        let (right, rs) = sweep::sweep_right_splitters_counted(n, forward);
        let (left, ls) = sweep::sweep_left_splitters_counted(n, mirror);
        let g = sweep::splitters_to_generator(&SplitterVectors { right, left });
        (
            g,
            GeneratorStats {
                right: rs,
                left: ls,
            },
        )
    }
}

/// As [`family_generator`], running both sweeps through one oracle each
/// (intersection families use the combined oracle) and reporting their
/// work counters.
pub fn family_generator_counted(
    kind: FamilyKind,
    s: &Structure,
) -> Result<(Generator, GeneratorStats)> {
    with_oracles(kind, s, CountedGenerator)
}

struct CountedEnumeration<F>(F);

impl<F: FnMut(Interval)> OracleVisitor for CountedEnumeration<F> {
    type Out = (usize, SweepStats);
    fn visit<O: SweepOracle, M: SweepOracle>(self, n: usize, forward: O, mirror: M) -> Self::Out {
        let left = sweep::sweep_left_splitters(n, mirror);
        sweep::sweep_enumerate_counted(n, forward, &left, self.0)
    }
}

/// As [`enumerate_family`], also returning the counters of the
/// enumerating sweep.
pub fn enumerate_family_counted(
    kind: FamilyKind,
    s: &Structure,
    sink: impl FnMut(Interval),
) -> Result<(usize, SweepStats)> {
    with_oracles(kind, s, CountedEnumeration(sink))
}
