//! Interval families of a permutation: common intervals (A), fixed
//! intervals (B), framed intervals (C) and hurdles (D), plus the
//! stack-based simplicity test and enumeration of common intervals.

use crate::error::{Error, Result};
use crate::model::{Generator, Interval, Permutation};
use crate::sweep::{self, Behaviour, Meet, SweepOracle};

/// Nearest value-neighbours of each position on either side.
///
/// `min_greater_left[x-1] = min { P(z) : z < x, P(z) > P(x) }` (sentinel
/// `n + 1`), `max_smaller_left[x-1] = max { P(z) : z < x, P(z) < P(x) }`
/// (sentinel `0`); the `_right` pair ranges over `z > x` instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideExtrema {
    pub min_greater_left: Vec<usize>,
    pub max_smaller_left: Vec<usize>,
    pub min_greater_right: Vec<usize>,
    pub max_smaller_right: Vec<usize>,
}

/// For `pos` indexed by value, the nearest value `w` in the direction
/// `values` iterates whose position beats `pos[v]` under `beats`.
fn nearest_by_position(
    pos: &[usize],
    values: impl Iterator<Item = usize>,
    beats: impl Fn(usize, usize) -> bool,
    sentinel: usize,
) -> Vec<usize> {
    // answers indexed by value; monotone stack of values
    let mut out = vec![sentinel; pos.len()];
    let mut stack: Vec<usize> = Vec::new();
    for v in values {
        while let Some(&w) = stack.last() {
            if beats(pos[v - 1], pos[w - 1]) {
                break;
            }
            stack.pop();
        }
        if let Some(&w) = stack.last() {
            out[v - 1] = w;
        }
        stack.push(v);
    }
    out
}

/// All four side-extrema arrays in linear time.
///
/// Read through the inverse permutation, "smallest larger value to the
/// left of x" is "first value above P(x) placed before x": a nearest
/// smaller/greater element problem over the value axis.
pub fn side_extrema(p: &Permutation) -> SideExtrema {
    let n = p.len();
    let inv = p.inverse();
    let pos = inv.values();
    let by_position =
        |by_value: Vec<usize>| -> Vec<usize> { (1..=n).map(|k| by_value[p.at(k) - 1]).collect() };
    let left = |a: usize, b: usize| b < a;
    let right = |a: usize, b: usize| b > a;
    SideExtrema {
        min_greater_left: by_position(nearest_by_position(pos, (1..=n).rev(), left, n + 1)),
        max_smaller_left: by_position(nearest_by_position(pos, 1..=n, left, 0)),
        min_greater_right: by_position(nearest_by_position(pos, (1..=n).rev(), right, n + 1)),
        max_smaller_right: by_position(nearest_by_position(pos, 1..=n, right, 0)),
    }
}

/// Store rule for common intervals: pop `x` when some `z < x` has a value
/// strictly between `P(x)` and `P(y)`.
#[derive(Debug, Clone)]
pub struct CommonOracle<'a> {
    p: &'a Permutation,
    ext: &'a SideExtrema,
    mirrored: bool,
}

impl<'a> CommonOracle<'a> {
    pub fn forward(p: &'a Permutation, ext: &'a SideExtrema) -> Self {
        CommonOracle {
            p,
            ext,
            mirrored: false,
        }
    }

    /// The same rule over the reverse-complement of `p`, read off the
    /// right-side extrema.
    pub fn mirror(p: &'a Permutation, ext: &'a SideExtrema) -> Self {
        CommonOracle {
            p,
            ext,
            mirrored: true,
        }
    }
}

impl SweepOracle for CommonOracle<'_> {
    fn behaviour(&self) -> Behaviour {
        Behaviour::Stack
    }

    #[inline]
    fn evict_back(&self, x: usize, y: usize) -> bool {
        if self.mirrored {
            let n = self.p.len();
            let (x, y) = (n + 1 - x, n + 1 - y);
            let py = self.p.at(y);
            self.ext.max_smaller_right[x - 1] > py || self.ext.min_greater_right[x - 1] < py
        } else {
            let py = self.p.at(y);
            self.ext.min_greater_left[x - 1] < py || self.ext.max_smaller_left[x - 1] > py
        }
    }
}

/// Store rule for `P(I) = I`: `x` survives while `x <= min P([x, y])`.
#[derive(Debug, Clone)]
pub struct FixedOracle {
    p: Permutation,
}

impl FixedOracle {
    pub fn new(p: Permutation) -> Self {
        FixedOracle { p }
    }
}

impl SweepOracle for FixedOracle {
    fn behaviour(&self) -> Behaviour {
        Behaviour::Stack
    }

    fn dead_on_arrival(&self, y: usize) -> bool {
        self.p.at(y) < y
    }

    #[inline]
    fn evict_back(&self, x: usize, y: usize) -> bool {
        self.p.at(y) < x
    }
}

/// Store rule for framed intervals: `x` survives while `P(x) <= min P([x, y])`.
#[derive(Debug, Clone)]
pub struct FrameOracle {
    p: Permutation,
}

impl FrameOracle {
    pub fn new(p: Permutation) -> Self {
        FrameOracle { p }
    }
}

impl SweepOracle for FrameOracle {
    fn behaviour(&self) -> Behaviour {
        Behaviour::Stack
    }

    #[inline]
    fn evict_back(&self, x: usize, y: usize) -> bool {
        self.p.at(y) < self.p.at(x)
    }
}

/// Generator of the intervals `I` with `P(I)` an interval. `O(n)`.
pub fn common_interval_generator(p: &Permutation) -> Generator {
    let ext = side_extrema(p);
    sweep::generator_from_oracles(
        p.len(),
        CommonOracle::forward(p, &ext),
        CommonOracle::mirror(p, &ext),
    )
}

/// Generator of the intervals `I` with `P(I) = I`, singletons included.
pub fn fixed_interval_generator(p: &Permutation) -> Generator {
    sweep::generator_from_oracles(
        p.len(),
        FixedOracle::new(p.clone()),
        FixedOracle::new(p.reverse_complement()),
    )
}

/// Generator of the intervals `[x, y]` with `P([x, y])` inside `[P(x), P(y)]`.
pub fn frame_interval_generator(p: &Permutation) -> Generator {
    sweep::generator_from_oracles(
        p.len(),
        FrameOracle::new(p.clone()),
        FrameOracle::new(p.reverse_complement()),
    )
}

/// Generator of the hurdles `P([x, y]) = [P(x), P(y)]`: the meet of the
/// common-interval and framed-interval generators.
pub fn hurdle_generator(p: &Permutation) -> Generator {
    common_interval_generator(p)
        .intersect(&frame_interval_generator(p))
        .expect("same size")
}

/// Enumerate one of the classes A-D through the generic sweep.
pub(crate) fn enumerate_class(
    kind: crate::FamilyKind,
    p: &Permutation,
    sink: impl FnMut(Interval),
) -> usize {
    use crate::FamilyKind as K;
    let n = p.len();
    let ext = side_extrema(p);
    let rc = p.reverse_complement();
    match kind {
        K::A => sweep::enumerate_with_oracles(
            n,
            CommonOracle::forward(p, &ext),
            CommonOracle::mirror(p, &ext),
            sink,
        ),
        K::B => sweep::enumerate_with_oracles(
            n,
            FixedOracle::new(p.clone()),
            FixedOracle::new(rc),
            sink,
        ),
        K::C => sweep::enumerate_with_oracles(
            n,
            FrameOracle::new(p.clone()),
            FrameOracle::new(rc),
            sink,
        ),
        K::D => sweep::enumerate_with_oracles(
            n,
            Meet(CommonOracle::forward(p, &ext), FrameOracle::new(p.clone())),
            Meet(CommonOracle::mirror(p, &ext), FrameOracle::new(rc)),
            sink,
        ),
        other => panic!("family {other} is not a permutation family"),
    }
}

/// `Q(k)` = position in `p2` of the element `p1(k)`. A common interval of
/// `(p1, p2)` is `p1(I)` for an interval `I` with `Q(I)` an interval.
pub fn reduce_two_permutations(p1: &Permutation, p2: &Permutation) -> Result<Permutation> {
    if p1.len() != p2.len() {
        return Err(Error::SizeMismatch(p1.len(), p2.len()));
    }
    let inv2 = p2.inverse();
    let q = p1.values().iter().map(|&v| inv2.at(v)).collect();
    Permutation::new(q)
}

/// Stack of potential beginnings with, for each entry `s_i`, the min and
/// max of `P` over `(s_{i-1}, s_i]`.
struct SpanStack {
    pot: Vec<usize>,
    min_before: Vec<usize>,
    max_before: Vec<usize>,
}

impl SpanStack {
    fn with_capacity(n: usize) -> Self {
        SpanStack {
            pot: Vec::with_capacity(n),
            min_before: Vec::with_capacity(n),
            max_before: Vec::with_capacity(n),
        }
    }

    /// Pop the entries that stop being potential beginnings at `y`, then
    /// push `y`. Returns the top before the push.
    fn advance(&mut self, p: &Permutation, ext: &SideExtrema, y: usize) -> Option<usize> {
        let py = p.at(y);
        let (mut mini, mut maxi) = (py, py);
        while let Some(&t) = self.pot.last() {
            if ext.min_greater_left[t - 1] < py || ext.max_smaller_left[t - 1] > py {
                mini = mini.min(self.min_before.pop().unwrap());
                maxi = maxi.max(self.max_before.pop().unwrap());
                self.pot.pop();
            } else {
                break;
            }
        }
        let top = self.pot.last().copied();
        self.pot.push(y);
        self.min_before.push(mini);
        self.max_before.push(maxi);
        top
    }
}

/// Some common interval of length strictly between `1` and `n`, if any.
/// The first one met by the left-to-right sweep is returned. `O(n)`.
pub fn find_nontrivial_common_interval(p: &Permutation) -> Option<Interval> {
    let n = p.len();
    let ext = side_extrema(p);
    let mut stack = SpanStack::with_capacity(n);
    for y in 1..=n {
        let Some(x) = stack.advance(p, &ext, y) else {
            continue;
        };
        let i = stack.pot.len() - 1;
        let lo = stack.min_before[i].min(p.at(x));
        let hi = stack.max_before[i].max(p.at(x));
        if hi - lo == y - x && !(x == 1 && y == n) {
            return Some(Interval::new(x, y));
        }
    }
    None
}

/// True when the only common intervals are the singletons and the whole
/// set. Sizes 1 and 2 are simple.
pub fn is_simple(p: &Permutation) -> bool {
    find_nontrivial_common_interval(p).is_none()
}

/// Emit every common interval in `O(n + K)`, `y` ascending then `x`
/// descending.
pub fn enumerate_common_intervals(p: &Permutation, sink: impl FnMut(Interval)) -> usize {
    enumerate_common_intervals_counted(p, sink).0
}

/// As [`enumerate_common_intervals`], also returning the number of span
/// tests performed.
pub fn enumerate_common_intervals_counted(
    p: &Permutation,
    mut sink: impl FnMut(Interval),
) -> (usize, usize) {
    let n = p.len();
    let ext = side_extrema(p);
    let mut stack = SpanStack::with_capacity(n);
    let mut count = 0;
    let mut tests = 0;
    for y in 1..=n {
        stack.advance(p, &ext, y);
        let (mut mini, mut maxi) = (p.at(y), p.at(y));
        for i in (0..stack.pot.len()).rev() {
            let x = stack.pot[i];
            let px = p.at(x);
            tests += 1;
            if maxi.max(px) - mini.min(px) != y - x {
                break;
            }
            sink(Interval::new(x, y));
            count += 1;
            mini = mini.min(stack.min_before[i]);
            maxi = maxi.max(stack.max_before[i]);
        }
    }
    (count, tests)
}
