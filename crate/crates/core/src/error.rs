use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("points coincide at ({x}, {y})")]
    EqualPoints { x: String, y: String },
    #[error("hyperedge {0:?} has fewer than two vertices")]
    SingletonEdge(Vec<String>),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate point id {0:?}")]
    DuplicateId(String),
    #[error("points {first:?} and {second:?} share coordinates")]
    DuplicatePoint { first: String, second: String },
    #[error("{what} has size {size}, exceeding the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("hyperedge {0:?} is not contiguous in the given ordering")]
    NotContiguous(Vec<String>),
    #[error("ordering is not a permutation of the vertex set: {0}")]
    BadOrdering(String),
    #[error("graph edge {0:?} does not have exactly two endpoints")]
    NotAGraphEdge(Vec<String>),
    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Format(err.to_string())
    }
}
