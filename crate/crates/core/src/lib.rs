//! Intersection-closed interval families in linear time.
//!
//! A family of intervals of `{1, ..., n}` closed under intersection of
//! overlapping members is stored as a [`Generator`]: two arrays `R`, `L`
//! with `[x, y]` a member iff `R[x] >= y` and `L[y] <= x`. Generators are
//! computed by a sweep over a store of potential beginnings
//! ([`sweep`]), one oracle per family:
//!
//! | kind | structure   | member `[x, y]`                         |
//! |------|-------------|-----------------------------------------|
//! | A    | permutation | `P([x, y])` is an interval              |
//! | B    | permutation | `P([x, y]) = [x, y]`                    |
//! | C    | permutation | `P([x, y])` inside `[P(x), P(y)]`       |
//! | D    | permutation | `P([x, y]) = [P(x), P(y)]`              |
//! | E    | tree        | `T[x, y]` connected                     |
//! | F    | tree        | `[x, y]` lies on one path of `T`        |
//! | G    | tree        | `T[x, y]` is a path                     |
//! | H    | DAG         | `[x, y]` closed under reachability      |
//!
//! Singletons are members of every family. Permutation inputs also get a
//! simplicity test and the decomposition tree of their common intervals
//! ([`decomp`]). [`oracle`] holds the definition-level references.

pub mod dag;
pub mod decomp;
pub mod error;
pub mod family;
pub mod io;
pub mod model;
pub mod oracle;
pub mod perm;
pub mod sweep;
pub mod tree;

pub use dag::{closed_interval_generator, enumerate_closed_intervals, reach_extrema, ReachExtrema};
pub use decomp::{
    build_decomposition_tree, build_decomposition_tree_counted, BuildStats, DecompositionNode,
    DecompositionTree, NodeId, NodeLabel, TreeBuilder,
};
pub use error::{Error, Result};
pub use family::{
    enumerate_family, enumerate_family_counted, family_generator, family_generator_counted,
    family_members, GeneratorStats,
};
pub use model::{
    sort_emission_order, validate_structure, Dag, FamilyKind, Generator, Interval, LabeledTree,
    Permutation, RawInput, Structure, StructureKind,
};
pub use perm::{
    common_interval_generator, enumerate_common_intervals, find_nontrivial_common_interval,
    fixed_interval_generator, frame_interval_generator, hurdle_generator, is_simple,
    reduce_two_permutations, side_extrema, SideExtrema,
};
pub use sweep::{Behaviour, SplitterVectors, SweepOracle, SweepStats};
pub use tree::{
    build_min_path_index, connected_interval_generator, enumerate_connected_intervals,
    in_path_generator, path_interval_generator, MinPathIndex,
};
