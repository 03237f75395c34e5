//! Exact packing colorings of small graphs.
//!
//! The crate covers the three packing variants of a graph `G`: vertex
//! colorings (`χρ`), edge colorings (`χρ′`, via the line graph) and total
//! colorings (`χρ″`, via the total graph). It provides
//!
//! * [`graph`]: graphs, generators, line/total graphs and element distances,
//! * [`packing`]: validation, capacity counting and the exact solvers,
//! * [`bounds`]: independence and matching numbers and closed-form bounds,
//! * [`constructions`]: explicit colorings of stars, paths and cycles,
//! * [`certificate`]: the serialized, re-checkable coloring format,
//! * [`reproduce`]: table-driven checks of the known path, cycle and star
//!   values.

pub mod bitset;
pub mod bounds;
pub mod certificate;
pub mod constructions;
pub mod graph;
pub mod independent;
pub mod packing;
pub mod reproduce;

pub use graph::{Element, Graph};
pub use packing::{Budget, Color, PackingColoring, SolveReport, Target};
