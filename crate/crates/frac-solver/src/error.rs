use thiserror::Error;

/// Errors raised by the solver and its special functions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    /// Fractional order outside (0, 1].
    #[error("fractional order must satisfy 0 < alpha <= 1, got {alpha}")]
    InvalidOrder { alpha: f64 },

    /// Step size or horizon violates `step > 0`, `t_end >= step`.
    #[error("invalid grid: step = {step}, t_end = {t_end} (need step > 0 and t_end >= step)")]
    InvalidGrid { step: f64, t_end: f64 },

    /// Gamma function argument outside its supported domain.
    #[error("gamma: argument must be positive, got {x}")]
    GammaDomain { x: f64 },

    /// Gamma function result would overflow an f64.
    #[error("gamma: {x} exceeds the representable factorial range")]
    GammaOverflow { x: f64 },

    /// Mittag-Leffler argument outside the series-accuracy guard.
    #[error("mittag-leffler: |z| = {z} exceeds the series guard |z| <= 30")]
    MittagLefflerDomain { z: f64 },

    /// Initial state length does not match the field dimension.
    #[error("dimension mismatch: field has dimension {expected}, state has {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Corrector iteration count outside 1..=10.
    #[error("corrector iterations must lie in 1..=10, got {given}")]
    InvalidCorrectorIterations { given: u32 },

    /// Weight index out of range for the requested step.
    #[error("weight index {j} out of range (max {max})")]
    WeightIndex { j: usize, max: usize },

    /// Initial state contains a non-finite component.
    #[error("initial state component {index} is not finite")]
    NonFiniteInitialState { index: usize },

    /// A state component became NaN or infinite during integration.
    #[error("state became non-finite at step {step}")]
    NonFiniteState { step: usize },
}
