use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation was called outside its domain (missing edge, bad shape, ...).
    Precondition(String),
    /// A configured search or size budget was exhausted before an exact answer.
    Budget {
        resource: &'static str,
        limit: usize,
        detail: String,
    },
    /// A vertex-set family failed the bramble axioms.
    InvalidBramble(String),
    /// A result contradicted a theorem the code relies on. Always a bug.
    Invariant(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn budget(resource: &'static str, limit: usize, detail: impl Into<String>) -> Self {
        Error::Budget {
            resource,
            limit,
            detail: detail.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::Budget {
                resource,
                limit,
                detail,
            } => write!(f, "budget exceeded: {resource} (limit {limit}): {detail}"),
            Error::InvalidBramble(m) => write!(f, "invalid bramble: {m}"),
            Error::Invariant(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl core::error::Error for Error {}
