//! Oriented firefighting on graphs.
//!
//! A defender orients every edge of an undirected graph, a fire then breaks
//! out at an adversarial vertex and spreads along arcs while `f` vertices per
//! time unit may be permanently protected. This crate provides:
//!
//! * [`graph`]: graphs, generators and the structural subroutines the
//!   constructions need (bridges, matchings, cliques, colourings, k-trees).
//! * [`orient`]: constructive orientations with guaranteed outdegree shape.
//! * [`game`]: deterministic fire simulation under scripted defence strategies.
//! * [`solver`]: exact optimal play for a fixed orientation and over all
//!   orientations of a small graph.
//! * [`bounds`]: closed-form lower and upper bounds, with explicit
//!   applicability.
//! * [`verify`]: named verification suites used by the CLI and the
//!   acceptance tests.

pub mod bitset;
pub mod bounds;
pub mod error;
pub mod game;
pub mod graph;
pub mod orient;
pub mod orientation;
pub mod solver;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use orientation::Orientation;
