use crate::ModelError;
use frac_solver::FractionalOrder;

/// Fractionalized rate `p^α`, the dimension fix applied to every model
/// parameter.
pub fn effective_rate(p: f64, alpha: FractionalOrder) -> Result<f64, ModelError> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(ModelError::NonPositiveRate {
            name: "p",
            value: p,
        });
    }
    Ok(p.powf(alpha.value()))
}
