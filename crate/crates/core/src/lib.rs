//! Spectral Turán-type bounds for graphs without short odd cycles: graph
//! families, exact and floating spectral quantities, per-graph certificates
//! and exhaustive isomorphism-free search.

pub mod certify;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod spectral;

pub use cycles::{is_forbidden_free, odd_girth, shortest_odd_cycle, OddGirth};
pub use error::{Error, Result};
pub use graph::{BaseGraph, ConstructionSpec, Graph};
pub use graph6::{from_graph6, to_graph6};
pub use spectral::{spectrum, Spectrum};
