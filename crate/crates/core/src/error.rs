use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("line {line}: duplicate edge {a} - {b}")]
    DuplicateEdge { line: usize, a: String, b: String },

    #[error("line {line}: self-loop on {label}")]
    SelfLoop { line: usize, label: String },

    #[error("invalid label {0:?}: labels must be non-empty, contain no whitespace and not start with '#'")]
    InvalidLabel(String),

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("vertex id {id} out of range for a graph with {size} vertices")]
    VertexOutOfRange { id: usize, size: usize },

    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("graph has {vertices} vertices, above the enumeration limit of {limit}")]
    VertexLimit { vertices: usize, limit: usize },

    #[error("search space of {required} candidates exceeds the cap of {cap}")]
    CapExceeded { required: u128, cap: u128 },

    #[error("valid profile set is truncated; a complete set is required")]
    IncompleteProfileSet,

    #[error("graph is not a forest")]
    NotForest,

    #[error("vertex {0} has even degree; an odd-degree graph is required")]
    NotOddDegree(usize),

    #[error("vertex {0} has odd degree; an even-degree graph is required")]
    NotEvenDegree(usize),

    #[error("graph has {0} vertices; a positive even vertex count is required")]
    OddVertexCount(usize),

    #[error("profile is not valid under the local majority rule")]
    InvalidProfile,

    #[error("invalid integer set: {0}")]
    InvalidIntegers(String),

    #[error("internal consistency violation: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
