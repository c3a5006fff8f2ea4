use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not square ({rows} rows, {len} entries)")]
    NotSquare { rows: usize, len: usize },
    #[error("eigenvalue iteration did not converge after {sweeps} sweeps")]
    NonConvergence { sweeps: usize },
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("invalid mixed extension type: {0}")]
    InvalidType(String),
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("graph order {n} exceeds the limit of {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("unsupported tuple shape: {0}")]
    UnsupportedShape(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
