use thiserror::Error;

/// Errors raised by the group engine and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration or search outgrew its budget.
    #[error("resource limit exceeded: {what} (reached {reached}, cap {cap})")]
    Resource {
        what: String,
        reached: usize,
        cap: usize,
    },

    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A checker was called on a group that does not meet its hypotheses.
    #[error("precondition failed for {check}: {reason}")]
    Precondition { check: String, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(check: &str, reason: impl Into<String>) -> Self {
        Error::Precondition {
            check: check.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
