use crate::{ModelError, POPULATION_GUARD};
use frac_solver::{FractionalOrder, VectorField};

/// Positive rate constants of the SIRS model plus the Caputo order.
///
/// Rates: recruitment Λ, infection φ, natural death ν, recovery κ,
/// disease-induced death δ, loss of immunity γ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SirsParams {
    recruitment: f64,
    infection: f64,
    natural_death: f64,
    recovery: f64,
    disease_death: f64,
    immunity_loss: f64,
    alpha: FractionalOrder,
}

/// Rate bundle as used by the field (fractionalized `p^α`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SirsRates {
    pub recruitment: f64,
    pub infection: f64,
    pub natural_death: f64,
    pub recovery: f64,
    pub disease_death: f64,
    pub immunity_loss: f64,
}

impl SirsParams {
    pub fn new(
        recruitment: f64,
        infection: f64,
        natural_death: f64,
        recovery: f64,
        disease_death: f64,
        immunity_loss: f64,
        alpha: FractionalOrder,
    ) -> Result<Self, ModelError> {
        for (name, value) in [
            ("recruitment", recruitment),
            ("infection", infection),
            ("natural_death", natural_death),
            ("recovery", recovery),
            ("disease_death", disease_death),
            ("immunity_loss", immunity_loss),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(ModelError::NonPositiveRate { name, value });
            }
        }
        Ok(SirsParams {
            recruitment,
            infection,
            natural_death,
            recovery,
            disease_death,
            immunity_loss,
            alpha,
        })
    }

    pub fn alpha(&self) -> FractionalOrder {
        self.alpha
    }

    pub fn effective(&self) -> SirsRates {
        let a = self.alpha.value();
        SirsRates {
            recruitment: self.recruitment.powf(a),
            infection: self.infection.powf(a),
            natural_death: self.natural_death.powf(a),
            recovery: self.recovery.powf(a),
            disease_death: self.disease_death.powf(a),
            immunity_loss: self.immunity_loss.powf(a),
        }
    }
}

/// Nonnegative SIRS compartments `(Q_S, Q_I, Q_R)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SirsState {
    q_s: f64,
    q_i: f64,
    q_r: f64,
}

impl SirsState {
    pub fn new(q_s: f64, q_i: f64, q_r: f64) -> Result<Self, ModelError> {
        for (name, value) in [("Q_S", q_s), ("Q_I", q_i), ("Q_R", q_r)] {
            if !(value.is_finite() && value >= 0.0) {
                return Err(ModelError::InvalidState { name, value });
            }
        }
        Ok(SirsState { q_s, q_i, q_r })
    }

    pub fn q_s(&self) -> f64 {
        self.q_s
    }

    pub fn q_i(&self) -> f64 {
        self.q_i
    }

    pub fn q_r(&self) -> f64 {
        self.q_r
    }

    /// Total population `N = Q_S + Q_I + Q_R`.
    pub fn total(&self) -> f64 {
        self.q_s + self.q_i + self.q_r
    }
}

impl SirsRates {
    /// Field evaluation on raw components; see [`SisRates::rhs`](crate::SisRates::rhs).
    #[inline]
    pub fn rhs(&self, q_s: f64, q_i: f64, q_r: f64) -> [f64; 3] {
        let n = q_s + q_i + q_r;
        let incidence = if n <= POPULATION_GUARD {
            0.0
        } else {
            self.infection * q_s * q_i / n
        };
        [
            self.recruitment - incidence - self.natural_death * q_s + self.immunity_loss * q_r,
            incidence - (self.disease_death + self.recovery + self.natural_death) * q_i,
            self.recovery * q_i - (self.natural_death + self.immunity_loss) * q_r,
        ]
    }
}

/// Right-hand side of the dimension-consistent SIRS system.
pub fn sirs_rhs(state: &SirsState, params: &SirsParams) -> [f64; 3] {
    params
        .effective()
        .rhs(state.q_s(), state.q_i(), state.q_r())
}

/// SIRS model as a solver field.
#[derive(Debug, Clone, Copy)]
pub struct SirsField {
    rates: SirsRates,
}

impl SirsField {
    pub fn new(params: &SirsParams) -> Self {
        SirsField {
            rates: params.effective(),
        }
    }

    pub fn rates(&self) -> &SirsRates {
        &self.rates
    }
}

impl VectorField for SirsField {
    fn dim(&self) -> usize {
        3
    }

    fn eval(&self, _t: f64, y: &[f64], dy: &mut [f64]) {
        let out = self.rates.rhs(y[0], y[1], y[2]);
        dy.copy_from_slice(&out);
    }
}
