use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilityError {
    /// Only 2x2 and 3x3 matrices are supported.
    #[error("expected a 2x2 or 3x3 matrix, got {rows}x{cols}")]
    Dimension { rows: usize, cols: usize },

    /// The incidence guard makes the Jacobian undefined near N = 0.
    #[error("jacobian undefined: total population {n} is at or below the incidence guard")]
    JacobianUndefined { n: f64 },
}
