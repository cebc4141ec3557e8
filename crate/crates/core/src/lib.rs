//! Threshold coloring of graphs.
//!
//! An edge labeling splits the edges of a graph into *near* and *far* edges.
//! An `(r, t)`-threshold coloring assigns every vertex an integer color so
//! that an edge is near exactly when the colors of its endpoints differ by at
//! most `t`. This crate provides the validity checker, exact backtracking
//! solvers, constructive colorers for the graph classes that always admit
//! such colorings, proper-interval recognition, the classical reductions, and
//! exact unit-cube contact layouts.
//!
//! The crate is `no_std` and only needs `alloc`; file formats, parallel
//! drivers and the command-line tool live in the `thresholdkit` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod coloring;
pub mod constructive;
pub mod cubes;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod interval;
pub mod random;
pub mod reductions;
pub mod solver;

pub use coloring::{normalize, verify, EdgeLabeling, Label, ThresholdColoring, Verdict};
pub use error::{Error, Result};
pub use graph::{Coord, Graph, GridKind, GridSpec};

/// Exact rational number used for all geometry and interval endpoints.
pub type Rational = num_rational::Ratio<i64>;
