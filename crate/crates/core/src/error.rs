use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("source set is empty")]
    EmptySource,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("set {0} is not a power dominating set")]
    NotPowerDominating(String),

    #[error("set {0} is not a zero forcing set")]
    NotZeroForcing(String),

    #[error("graph is disconnected (enable per-component solving to allow this)")]
    Disconnected,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid split partition: {0}")]
    InvalidPartition(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
