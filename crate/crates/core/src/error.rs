use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    InvalidEdge(Vertex),
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    IndexOutOfRange { vertex: Vertex, n: usize },
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what}: order {n} exceeds the cap of {cap}")]
    TooLarge { what: &'static str, n: usize, cap: usize },
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("pair {{{0}, {0}}} is degenerate")]
    DegeneratePair(Vertex),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParam(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("res = 3 classification needs the resolving-number-3 catalog")]
    CatalogMissing,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("line {line}: {msg}")]
    MalformedLine { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
