use crate::StabilityError;
use epi_models::{SirsParams, SirsRates, SirsState, SisParams, SisRates, SisState, POPULATION_GUARD};

/// Analytic Jacobian of the SIS field at a point. The guarded incidence
/// term is not differentiable where the guard is active, so total
/// populations at or below the guard are rejected.
pub fn sis_jacobian(params: &SisParams, point: &SisState) -> Result<[[f64; 2]; 2], StabilityError> {
    sis_jacobian_rates(&params.effective(), point.q_s(), point.q_i())
}

pub(crate) fn sis_jacobian_rates(
    e: &SisRates,
    q_s: f64,
    q_i: f64,
) -> Result<[[f64; 2]; 2], StabilityError> {
    let n = q_s + q_i;
    if n <= POPULATION_GUARD {
        return Err(StabilityError::JacobianUndefined { n });
    }
    // d(incidence)/dQ_S = phi Q_I^2 / N^2, d(incidence)/dQ_I = phi Q_S^2 / N^2.
    let d_s = e.infection * q_i * q_i / (n * n);
    let d_i = e.infection * q_s * q_s / (n * n);
    Ok([
        [-d_s - e.natural_death, -d_i + e.return_rate],
        [
            d_s,
            d_i - (e.disease_death + e.natural_death + e.return_rate),
        ],
    ])
}

/// Analytic Jacobian of the SIRS field at a point; same guard as
/// [`sis_jacobian`].
pub fn sirs_jacobian(
    params: &SirsParams,
    point: &SirsState,
) -> Result<[[f64; 3]; 3], StabilityError> {
    sirs_jacobian_rates(&params.effective(), point.q_s(), point.q_i(), point.q_r())
}

pub(crate) fn sirs_jacobian_rates(
    e: &SirsRates,
    q_s: f64,
    q_i: f64,
    q_r: f64,
) -> Result<[[f64; 3]; 3], StabilityError> {
    let n = q_s + q_i + q_r;
    if n <= POPULATION_GUARD {
        return Err(StabilityError::JacobianUndefined { n });
    }
    let g = e.infection / (n * n);
    let d_s = g * q_i * (q_i + q_r);
    let d_i = g * q_s * (q_s + q_r);
    let d_r = -g * q_s * q_i;
    Ok([
        [-d_s - e.natural_death, -d_i, -d_r + e.immunity_loss],
        [
            d_s,
            d_i - (e.disease_death + e.recovery + e.natural_death),
            d_r,
        ],
        [
            0.0,
            e.recovery,
            -(e.natural_death + e.immunity_loss),
        ],
    ])
}
