use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Verification failures that describe a property of user input (a rainbow
/// copy was found, a lemma bound is violated) are reported through the
/// dedicated report types, not through this enum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid contraction: vertices {u} and {v} are adjacent")]
    InvalidContraction { u: usize, v: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("n = {n} is too small: {reason}")]
    NTooSmall { n: usize, reason: String },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    /// A configured cap was exceeded. `lower`/`upper` bracket the quantity
    /// being computed when the operation is an optimization.
    #[error("resource limit exceeded: {what} (bracket {lower:?}..={upper:?})")]
    ResourceLimit {
        what: String,
        lower: Option<u64>,
        upper: Option<u64>,
    },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("construction failed verification: {0}")]
    ConstructionBug(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn limit(what: impl Into<String>) -> Self {
        Error::ResourceLimit {
            what: what.into(),
            lower: None,
            upper: None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
