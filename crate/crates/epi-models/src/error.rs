use thiserror::Error;

/// Validation errors for model parameters and states.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    /// A rate constant must be strictly positive.
    #[error("rate `{name}` must be > 0, got {value}")]
    NonPositiveRate { name: &'static str, value: f64 },

    /// A state component must be finite and nonnegative.
    #[error("state component `{name}` must be finite and >= 0, got {value}")]
    InvalidState { name: &'static str, value: f64 },
}
