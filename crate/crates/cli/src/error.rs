use std::fmt;

use realgraph_core::Error as CoreError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// A command failure, classified by the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments, unreadable or malformed spec, invalid construction.
    Usage(String),
    /// An enumeration cap was hit.
    Resource(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Resource(m) => write!(f, "error: {m} (raise --cap to allow more)"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Resource { .. } => CliError::Resource(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}
