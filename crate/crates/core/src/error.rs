use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A constructor or operation was called outside its parameter domain.
    #[error("invalid parameters: {0}")]
    Domain(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("blocks do not partition the vertex set: {0}")]
    NotPartition(String),

    #[error("partition is not equitable: block {from} vertices see {first} and {second} neighbors in block {to}")]
    NotEquitable {
        from: usize,
        to: usize,
        first: usize,
        second: usize,
    },

    #[error("order {n} exceeds the limit of {cap} for this operation")]
    TooLarge { n: usize, cap: usize },

    #[error("eigenvalue iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
