use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised while reading the edge-list text format.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("missing \"n m\" header line")]
    MissingHeader,
    #[error("line {line}: malformed line {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("header declares {declared} edges but {found} were read")]
    CountMismatch { declared: usize, found: usize },
    #[error("line {line}: edge weight {weight} is not positive")]
    NonPositiveWeight { line: usize, weight: f64 },
    #[error("line {line}: edge weight {weight} is not finite")]
    NonFiniteWeight { line: usize, weight: f64 },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge {edge} has invalid weight {weight}")]
    InvalidWeight { edge: usize, weight: f64 },
    #[error("vertex {vertex} is not in the restricting vertex set")]
    NotInRestrict { vertex: VertexId },
    #[error("{what} is not a subset of the restricting vertex set")]
    NotSubset { what: &'static str },
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("source set is empty")]
    EmptySources,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("contraction window [{x_l}, {x_r}] is inverted")]
    InvalidWindow { x_l: f64, x_r: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}
