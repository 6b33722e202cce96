use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("exponent overflow: {0}")]
    ExponentOverflow(String),
    #[error("{q} is not a power of the characteristic {p}")]
    NotPowerOfP { q: u64, p: u64 },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a local question at the origin: {0}")]
    NotLocal(String),
    #[error("ideal is not generated by monomials")]
    NonMonomial,
    #[error("{0} and {1} are not coprime")]
    NotCoprime(String, String),
    #[error("{what} did not stabilize within {cap} steps")]
    CapExceeded { what: String, cap: usize },
    #[error("stabilization check failed: {0}")]
    Unstable(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
