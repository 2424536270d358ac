use crate::SolverError;

/// Caputo derivative order `α` restricted to `0 < α ≤ 1`.
///
/// Both the solver weights and the epidemiological parameter
/// fractionalization share this value, so it is validated once at
/// construction and copied freely afterwards.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    /// The classical integer-order case `α = 1`.
    pub const ONE: FractionalOrder = FractionalOrder(1.0);

    pub fn new(alpha: f64) -> Result<Self, SolverError> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
            Ok(FractionalOrder(alpha))
        } else {
            Err(SolverError::InvalidOrder { alpha })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl std::fmt::Display for FractionalOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}
