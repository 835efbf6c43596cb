//! Generic splitter sweeps over a store of potential beginnings.
//!
//! A family plugs in a [`SweepOracle`]: a membership-update rule for the
//! store of potential beginnings as `y` advances from `1` to `n`. The same
//! machinery computes right-splitters, left-splitters (by sweeping the
//! reflected instance) and enumerates members in output-sensitive time.
//!
//! Sentinels: a right-splitter that never fires is `n + 1`, a left-splitter
//! that never fires is `0`.

use crate::model::{Generator, Interval};

/// Which end(s) of the store a family evicts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Behaviour {
    /// Removals only at the rear (largest vertices).
    Stack,
    /// Removals at the rear and as a prefix at the front.
    Deque,
}

/// Family-specific update rule for the store of potential beginnings.
///
/// At step `y` the engine calls [`arrive`](SweepOracle::arrive) once, then
/// evicts from the rear while `evict_back(rear, y)` holds, from the front
/// while `evict_front(front, y)` holds, and finally pushes `y` unless
/// `dead_on_arrival(y)`. Predicates are only asked about vertices that are
/// potential beginnings of `y - 1`.
pub trait SweepOracle {
    fn behaviour(&self) -> Behaviour;

    fn arrive(&mut self, _y: usize) {}

    /// `y` is not a potential beginning even of itself.
    fn dead_on_arrival(&self, _y: usize) -> bool {
        false
    }

    fn evict_back(&self, x: usize, y: usize) -> bool;

    fn evict_front(&self, _x: usize, _y: usize) -> bool {
        false
    }
}

impl<O: SweepOracle + ?Sized> SweepOracle for &mut O {
    fn behaviour(&self) -> Behaviour {
        (**self).behaviour()
    }
    fn arrive(&mut self, y: usize) {
        (**self).arrive(y)
    }
    fn dead_on_arrival(&self, y: usize) -> bool {
        (**self).dead_on_arrival(y)
    }
    fn evict_back(&self, x: usize, y: usize) -> bool {
        (**self).evict_back(x, y)
    }
    fn evict_front(&self, x: usize, y: usize) -> bool {
        (**self).evict_front(x, y)
    }
}

/// Oracle of the intersection of two families: a vertex stays a potential
/// beginning while it is one for both.
#[derive(Debug, Clone)]
pub struct Meet<P, Q>(pub P, pub Q);

impl<P: SweepOracle, Q: SweepOracle> SweepOracle for Meet<P, Q> {
    fn behaviour(&self) -> Behaviour {
        match (self.0.behaviour(), self.1.behaviour()) {
            (Behaviour::Stack, Behaviour::Stack) => Behaviour::Stack,
            _ => Behaviour::Deque,
        }
    }
    fn arrive(&mut self, y: usize) {
        self.0.arrive(y);
        self.1.arrive(y);
    }
    fn dead_on_arrival(&self, y: usize) -> bool {
        self.0.dead_on_arrival(y) || self.1.dead_on_arrival(y)
    }
    fn evict_back(&self, x: usize, y: usize) -> bool {
        self.0.evict_back(x, y) || self.1.evict_back(x, y)
    }
    fn evict_front(&self, x: usize, y: usize) -> bool {
        self.0.evict_front(x, y) || self.1.evict_front(x, y)
    }
}

/// Work counters of one sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub pushes: usize,
    pub dead_on_arrival: usize,
    pub back_removals: usize,
    pub front_removals: usize,
    pub predicate_evals: usize,
}

impl SweepStats {
    pub fn removals(&self) -> usize {
        self.back_removals + self.front_removals
    }

    /// Every vertex is either pushed or rejected on arrival, exactly once.
    pub fn arrivals(&self) -> usize {
        self.pushes + self.dead_on_arrival
    }
}

/// Growable array with a front cursor; live contents are `buf[front..]`.
#[derive(Debug, Default)]
struct Store {
    buf: Vec<usize>,
    front: usize,
}

impl Store {
    fn live(&self) -> &[usize] {
        &self.buf[self.front..]
    }
}

/// One step of the sweep: evict for `y`, then push `y` unless dead on
/// arrival. Evicted vertices are reported to `evicted`.
fn step<O: SweepOracle>(
    store: &mut Store,
    oracle: &mut O,
    y: usize,
    stats: &mut SweepStats,
    mut evicted: impl FnMut(usize),
) -> bool {
    oracle.arrive(y);
    while store.buf.len() > store.front {
        let x = *store.buf.last().unwrap();
        stats.predicate_evals += 1;
        if !oracle.evict_back(x, y) {
            break;
        }
        store.buf.pop();
        stats.back_removals += 1;
        evicted(x);
    }
    if oracle.behaviour() == Behaviour::Deque {
        while store.front < store.buf.len() {
            let x = store.buf[store.front];
            stats.predicate_evals += 1;
            if !oracle.evict_front(x, y) {
                break;
            }
            store.front += 1;
            stats.front_removals += 1;
            evicted(x);
        }
    }
    if store.front == store.buf.len() {
        store.buf.clear();
        store.front = 0;
    }
    let dead = oracle.dead_on_arrival(y);
    if dead {
        stats.dead_on_arrival += 1;
    } else {
        debug_assert!(store.buf.last().is_none_or(|&top| top < y));
        store.buf.push(y);
        stats.pushes += 1;
    }
    !dead
}

/// `RSplitter[x]` at index `x - 1`: the first `y > x` at which `x` stops
/// being a potential beginning, `n + 1` if it never does.
pub fn sweep_right_splitters<O: SweepOracle>(n: usize, oracle: O) -> Vec<usize> {
    sweep_right_splitters_counted(n, oracle).0
}

pub fn sweep_right_splitters_counted<O: SweepOracle>(
    n: usize,
    mut oracle: O,
) -> (Vec<usize>, SweepStats) {
    let mut rsplitter = vec![n + 1; n];
    let mut store = Store::default();
    let mut stats = SweepStats::default();
    for y in 1..=n {
        let pushed = step(&mut store, &mut oracle, y, &mut stats, |x| {
            rsplitter[x - 1] = y
        });
        if !pushed {
            rsplitter[y - 1] = y + 1;
        }
    }
    (rsplitter, stats)
}

/// `LSplitter[y]` at index `y - 1`: the last `x < y` such that `y` is not a
/// potential end of `x`, `0` if there is none.
///
/// `mirror` must be the family's oracle over the reflected instance (vertex
/// `v` relabeled `n + 1 - v`), under which potential ends become potential
/// beginnings.
pub fn sweep_left_splitters<O: SweepOracle>(n: usize, mirror: O) -> Vec<usize> {
    sweep_left_splitters_counted(n, mirror).0
}

pub fn sweep_left_splitters_counted<O: SweepOracle>(
    n: usize,
    mirror: O,
) -> (Vec<usize>, SweepStats) {
    let (reflected, stats) = sweep_right_splitters_counted(n, mirror);
    let lsplitter = (1..=n).map(|y| n + 1 - reflected[n - y]).collect();
    (lsplitter, stats)
}

/// Right and left splitters of one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitterVectors {
    pub right: Vec<usize>,
    pub left: Vec<usize>,
}

impl SplitterVectors {
    pub fn compute<O: SweepOracle, M: SweepOracle>(n: usize, forward: O, mirror: M) -> Self {
        SplitterVectors {
            right: sweep_right_splitters(n, forward),
            left: sweep_left_splitters(n, mirror),
        }
    }

    pub fn n(&self) -> usize {
        self.right.len()
    }

    /// `[x, y]` is a member iff `y < RSplitter[x]` and `x > LSplitter[y]`.
    pub fn is_member(&self, x: usize, y: usize) -> bool {
        y < self.right[x - 1] && x > self.left[y - 1]
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n();
        self.left.len() == n
            && (1..=n).all(|x| {
                let r = self.right[x - 1];
                let l = self.left[x - 1];
                x < r && r <= n + 1 && l < x
            })
    }
}

/// `(LSplitter + 1, RSplitter - 1)`.
pub fn splitters_to_generator(s: &SplitterVectors) -> Generator {
    debug_assert!(s.is_valid());
    let r = s.right.iter().map(|&r| r - 1).collect();
    let l = s.left.iter().map(|&l| l + 1).collect();
    Generator::from_parts_unchecked(r, l)
}

/// Two sweeps, then the generator.
pub fn generator_from_oracles<O: SweepOracle, M: SweepOracle>(
    n: usize,
    forward: O,
    mirror: M,
) -> Generator {
    splitters_to_generator(&SplitterVectors::compute(n, forward, mirror))
}

/// Emit every member, `y` ascending and, for one `y`, `x` descending.
/// Runs in `O(n + K)` predicate evaluations for `K` members.
pub fn sweep_enumerate<O: SweepOracle>(
    n: usize,
    oracle: O,
    lsplitter: &[usize],
    sink: impl FnMut(Interval),
) -> usize {
    sweep_enumerate_counted(n, oracle, lsplitter, sink).0
}

pub fn sweep_enumerate_counted<O: SweepOracle>(
    n: usize,
    mut oracle: O,
    lsplitter: &[usize],
    mut sink: impl FnMut(Interval),
) -> (usize, SweepStats) {
    assert_eq!(lsplitter.len(), n, "left splitters of a different instance");
    let mut store = Store::default();
    let mut stats = SweepStats::default();
    let mut count = 0;
    for y in 1..=n {
        let pushed = step(&mut store, &mut oracle, y, &mut stats, |_| {});
        if !pushed {
            sink(Interval::singleton(y));
            count += 1;
        }
        let bound = lsplitter[y - 1];
        // suffix property: members ending at y are a rear segment of the store
        for &x in store.live().iter().rev() {
            if x <= bound {
                break;
            }
            sink(Interval::new(x, y));
            count += 1;
        }
    }
    (count, stats)
}

/// Generator of the family plus its enumeration in one call.
pub fn enumerate_with_oracles<O: SweepOracle, M: SweepOracle>(
    n: usize,
    forward: O,
    mirror: M,
    sink: impl FnMut(Interval),
) -> usize {
    let lsplitter = sweep_left_splitters(n, mirror);
    sweep_enumerate(n, forward, &lsplitter, sink)
}
