use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input must be a positive integer, got 0")]
    ZeroInput,

    #[error("{what}: {detail}")]
    OutOfDomain { what: &'static str, detail: String },

    #[error("partition is not in the image of the factorization bijection: {0}")]
    NotBijectionImage(String),

    #[error("cannot overline {requested} parts: only {available} singleton part sizes")]
    TooManyOverlines { requested: u32, available: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfDomain {
            what,
            detail: detail.into(),
        }
    }
}
