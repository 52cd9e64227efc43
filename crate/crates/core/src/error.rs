use thiserror::Error;

/// Input errors raised by library operations.
///
/// Semantic negatives (a rejected certificate, a failed bound) are values,
/// never errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("graph is not pure: facet {small} has {small_len} vertices but facet {large} has {large_len}")]
    NotPure {
        small: String,
        small_len: usize,
        large: String,
        large_len: usize,
    },
    #[error("graph is not a certified pseudomanifold{0}")]
    NotCertified(String),
    #[error("invalid sphere spec: {0}")]
    InvalidSphereSpec(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("coloring is not proper on the given graph: {0}")]
    ImproperColoring(String),
    #[error("order is not a permutation of the vertex set: {0}")]
    BadPermutation(String),
    #[error("decomposition does not match the graph: {0}")]
    DecompositionMismatch(String),
    #[error("expected a {expected}-simplex, got {got}")]
    SimplexDimension { expected: i64, got: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
