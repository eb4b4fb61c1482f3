use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty set")]
    Empty,

    #[error("duplicate element {0}")]
    Duplicate(i64),

    #[error("element {0} is outside the supported range (|a| <= {max})", max = crate::set::ELEMENT_LIMIT)]
    Overflow(i64),

    #[error("malformed set literal: {0}")]
    Parse(String),

    #[error("doubling value {t} is out of range for k = {k}; valid interval is [{lo}, {hi}]")]
    Range { k: usize, t: usize, lo: usize, hi: usize },

    #[error("illegal parameters: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("set is not decomposable into a stable decomposition")]
    NotDecomposable,

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("factorization failed for {0}")]
    FactorizationFailed(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
