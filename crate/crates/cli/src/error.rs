use thiserror::Error;

/// Failures surfaced to the command-line user, each mapped to an exit code:
/// usage errors exit 1, verification failures exit 2, resource limits exit 3.
/// (Success is exit 0; those four values are the entire exit-code surface.)
#[derive(Debug, Error)]
pub enum CliError {
    /// A bad invocation or unparsable input.
    #[error("{0}")]
    Usage(String),
    /// A verification suite found at least one failing criterion. The report
    /// still goes to stdout so the pass/fail lines are not lost.
    #[error("verification failed")]
    Verification { report: String },
    /// A resource guard refused the work, or exploration hit its budget.
    /// `partial` holds whatever truncated output is still worth printing.
    #[error("{message}")]
    Limit {
        message: String,
        partial: Option<String>,
    },
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    pub fn limit(message: impl Into<String>) -> Self {
        CliError::Limit {
            message: message.into(),
            partial: None,
        }
    }

    /// Stdout content that should be printed even though the command failed.
    pub fn partial_output(&self) -> Option<&str> {
        match self {
            CliError::Usage(_) => None,
            CliError::Verification { report } => Some(report),
            CliError::Limit { partial, .. } => partial.as_deref(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification { .. } => 2,
            CliError::Limit { .. } => 3,
        }
    }
}
