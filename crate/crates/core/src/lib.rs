//! Exact counting of double stars in triangle-free graphs, extremal
//! constructions under degree-sum conditions, closed-form bounds, and an
//! exhaustive enumeration engine that checks all of them on small graphs.
//!
//! Everything is exact: counts are arbitrary precision, difference formulas
//! are evaluated over the integers, and only the continuous split optimizer
//! works in floating point.

pub mod bounds;
pub mod constructions;
pub mod count;
pub mod counting;
mod error;
pub mod graph;
pub mod search;
pub mod verify;

pub use count::Count;
pub use counting::DoubleStar;
pub use error::{Error, Result};
pub use graph::Graph;
