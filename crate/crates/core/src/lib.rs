//! Exact maximum induced matching (MIM) for stacked-book graphs `S_m □ P_n`
//! and the small families they are built from.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! - [`graph`]: an immutable simple graph with canonical edge ids, BFS metrics
//!   and the Cartesian product.
//! - [`families`]: paths, cycles, stars, `P_3 □ P_n` grids and stacked books
//!   with a `(column, position)` labeling.
//! - [`engine`]: the conflict-graph reduction, validity checking, an exhaustive
//!   oracle, a branch-and-bound solver, forced-edge solving and enumeration of
//!   every maximum induced matching.
//! - [`formula`]: closed-form values and bounds, tagged exact / lower bound /
//!   conjectured.
//! - [`constructions`]: explicit certified witnesses for stacked books.
//!
//! IO, file formats, timing and the command line live in the `mim-harness`
//! crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod constructions;
pub mod engine;
mod error;
pub mod families;
pub mod formula;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{Distance, EdgeId, Graph, Vertex};
