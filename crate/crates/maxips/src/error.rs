use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on a numeric argument was violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// A point-set file could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A construction produced a rational point set for which no
    /// integral-coordinate embedding was found among the anchor embeddings.
    #[error("no integral-coordinate embedding found: {0}")]
    NoIntegralEmbedding(String),
    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
