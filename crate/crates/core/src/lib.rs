//! Resolving-set parameters of simple connected graphs.
//!
//! The resolving number `res(G)` is the smallest `k` such that every
//! `k`-subset of vertices resolves the graph. It is computed here in cubic
//! time from the largest set of vertices that fail to distinguish a single
//! pair. Alongside it the crate provides exhaustive metric dimension and
//! upper dimension, classical invariants, generators for the graph families
//! that attain the known bounds, isomorph-free enumeration of small graphs,
//! and machine-checked verdicts for each bound.

pub mod bounds;
pub mod canonical;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod resolve;

pub use canonical::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, Vertex};
pub use invariants::{Girth, InvariantSummary};
pub use resolve::{resolving_number, ResolvingReport};
