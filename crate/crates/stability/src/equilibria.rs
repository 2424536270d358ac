use epi_models::{SirsParams, SirsRates, SisParams, SisRates};
use serde::Serialize;

/// Existence gate for the endemic point: the closed forms degenerate at
/// R0 = 1, so presence requires R0 to clear 1 by more than float noise.
const ENDEMIC_GATE: f64 = 1e-12;

/// Disease-free point, optional endemic point, and the reproduction number
/// they derive from. The endemic point is present iff `r0 > 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquilibriumSet {
    pub disease_free: Vec<f64>,
    pub endemic: Option<Vec<f64>>,
    pub r0: f64,
}

impl EquilibriumSet {
    /// The attractor the analysis predicts: endemic when it exists,
    /// disease-free otherwise.
    pub fn predicted(&self) -> &[f64] {
        self.endemic.as_deref().unwrap_or(&self.disease_free)
    }
}

/// `R0 = φ^α / (η^α + ν^α + ω^α)` for the SIS model.
pub fn sis_r0(params: &SisParams) -> f64 {
    sis_r0_rates(&params.effective())
}

pub(crate) fn sis_r0_rates(e: &SisRates) -> f64 {
    e.infection / (e.disease_death + e.natural_death + e.return_rate)
}

/// `R0 = φ^α / (δ^α + κ^α + ν^α)` for the SIRS model.
pub fn sirs_r0(params: &SirsParams) -> f64 {
    sirs_r0_rates(&params.effective())
}

pub(crate) fn sirs_r0_rates(e: &SirsRates) -> f64 {
    e.infection / (e.disease_death + e.recovery + e.natural_death)
}

/// SIS equilibria: `H_df = (Λ^α/ν^α, 0)` always, and for `R0 > 1`
/// `H_en = (Λ^α/D, (R0−1)Λ^α/D)` with `D = ν^α + (η^α+ν^α)(R0−1)`.
pub fn sis_equilibria(params: &SisParams) -> EquilibriumSet {
    sis_equilibria_rates(&params.effective())
}

pub(crate) fn sis_equilibria_rates(e: &SisRates) -> EquilibriumSet {
    let r0 = sis_r0_rates(e);
    let disease_free = vec![e.recruitment / e.natural_death, 0.0];
    let endemic = (r0 > 1.0 + ENDEMIC_GATE).then(|| {
        let den = e.natural_death + (e.disease_death + e.natural_death) * (r0 - 1.0);
        vec![e.recruitment / den, (r0 - 1.0) * e.recruitment / den]
    });
    let set = EquilibriumSet {
        disease_free,
        endemic,
        r0,
    };
    debug_assert!(sis_residual_norm(e, &set) <= 1e-10);
    set
}

fn sis_residual_norm(e: &SisRates, set: &EquilibriumSet) -> f64 {
    let mut worst = 0.0_f64;
    for point in std::iter::once(&set.disease_free).chain(set.endemic.iter()) {
        let dy = e.rhs(point[0], point[1]);
        worst = worst.max(dy[0].hypot(dy[1]));
    }
    worst
}

/// SIRS equilibria: `P_df = (Λ^α/ν^α, 0, 0)` always, and for `R0 > 1` the
/// closed-form `P_en` with common denominator
/// `D = δ^α(γ^α+ν^α)(R0−1) + ν^α(γ^α+κ^α+ν^α)R0`.
pub fn sirs_equilibria(params: &SirsParams) -> EquilibriumSet {
    sirs_equilibria_rates(&params.effective())
}

pub(crate) fn sirs_equilibria_rates(e: &SirsRates) -> EquilibriumSet {
    let r0 = sirs_r0_rates(e);
    let disease_free = vec![e.recruitment / e.natural_death, 0.0, 0.0];
    let endemic = (r0 > 1.0 + ENDEMIC_GATE).then(|| {
        let excess = r0 - 1.0;
        let den = e.disease_death * (e.immunity_loss + e.natural_death) * excess
            + e.natural_death * (e.immunity_loss + e.recovery + e.natural_death) * r0;
        vec![
            e.recruitment * (e.immunity_loss + e.recovery + e.natural_death) / den,
            e.recruitment * (e.immunity_loss + e.natural_death) * excess / den,
            e.recruitment * e.recovery * excess / den,
        ]
    });
    let set = EquilibriumSet {
        disease_free,
        endemic,
        r0,
    };
    debug_assert!(sirs_residual_norm(e, &set) <= 1e-10);
    set
}

fn sirs_residual_norm(e: &SirsRates, set: &EquilibriumSet) -> f64 {
    let mut worst = 0.0_f64;
    for point in std::iter::once(&set.disease_free).chain(set.endemic.iter()) {
        let dy = e.rhs(point[0], point[1], point[2]);
        worst = worst.max((dy[0] * dy[0] + dy[1] * dy[1] + dy[2] * dy[2]).sqrt());
    }
    worst
}
