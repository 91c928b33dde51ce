//! Canonical forms, isomorph-free enumeration and exhaustive scans.

pub mod canon;
pub mod enumerate;
pub mod report;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, CANONICAL_MAX_N};
pub use enumerate::{count, enumerate, enumerate_fold, enumerate_map, max_order, Filter, DEFAULT_MAX_N, MAX_N_ENV};
pub use report::{counterexample_scan, equality_census, extremal_radius_search, SearchOptions, SearchReport};
