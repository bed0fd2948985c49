//! Bounded-excess flows in cubic multigraphs.
//!
//! An `(r, α)`-flow assigns every edge of an orientation a value in `[1, r-1]` so that the
//! net imbalance at each vertex is at most `α`. The crate decides feasibility exactly,
//! computes the full feasible domain of a graph in the `r`-`α` plane, and builds orientable
//! 5-weak bisections, which certify a `(7/2, 1/2)`-flow in every cubic graph.

pub mod bisection;
pub mod canon;
pub mod cli;
pub mod flow;
pub mod error;
pub mod generate;
pub mod graph;
pub mod maxflow;
pub mod named;
pub mod orientation;
pub mod rational;
pub mod region;
pub mod weak5;

pub use error::{Error, Result};
pub use graph::{CubicMultigraph, VertexSet};
pub use rational::Rational;
