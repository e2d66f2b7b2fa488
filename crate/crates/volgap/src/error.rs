use thiserror::Error;

/// Everything that can stop a command.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments; reported before any computation.
    #[error("{0}")]
    Usage(String),
    /// A numerical routine rejected its input or failed.
    #[error(transparent)]
    Compute(#[from] volgap_core::Error),
    /// Writing output failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// Serializing output failed.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub(crate) fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }

    /// Process exit code: 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
