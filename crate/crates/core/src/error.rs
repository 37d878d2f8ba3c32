use thiserror::Error;

/// Errors raised by graph, code, and enumeration operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("{{{u},{v}}} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("invalid bipartition: {0}")]
    InvalidPartition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("generator matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("i/o error: {0}")]
    Io(String),

    /// Two independent computations disagreed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
