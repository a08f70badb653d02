use thiserror::Error;

/// Errors surfaced by the library. Internal invariant violations panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported ring d={0}; expected one of -2, -7, -11, -15")]
    UnsupportedRing(i64),

    #[error("ring mismatch: d={left} vs d={right}")]
    RingMismatch { left: i64, right: i64 },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph on {n} vertices exceeds the canonical-form bound of {limit}")]
    SizeBound { n: usize, limit: usize },

    #[error("{0}")]
    InvalidFamily(String),

    #[error("search budget exhausted: {0}")]
    Budget(String),

    #[error("bad input: {0}")]
    BadInput(String),

    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::BadInput(e.to_string())
    }
}
