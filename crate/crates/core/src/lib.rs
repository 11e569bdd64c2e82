//! Exact total domination subdivision and multisubdivision numbers for
//! small graphs and trees, the labelled tree family with sd_γt = 3, and
//! exhaustive checks of the surrounding structural results.

pub mod canon;
pub mod characterization;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod subdivision;
pub mod verify;
pub mod vertex_set;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use vertex_set::VertexSet;
