use thiserror::Error;

/// Failure classes mapped onto the process exit codes: configuration
/// problems exit 2, numerical failures exit 3.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error("numerical failure: alpha = {alpha}, state became non-finite at step {step}")]
    Numerical { alpha: f64, step: usize },

    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numerical { .. } => 3,
        }
    }
}
