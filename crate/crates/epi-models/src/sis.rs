use crate::{ModelError, POPULATION_GUARD};
use frac_solver::{FractionalOrder, VectorField};

/// Positive rate constants of the SIS model plus the Caputo order.
///
/// Rates: recruitment Λ, infection φ, natural death ν, return to the
/// susceptible class ω, disease-induced death η.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SisParams {
    recruitment: f64,
    infection: f64,
    natural_death: f64,
    return_rate: f64,
    disease_death: f64,
    alpha: FractionalOrder,
}

/// Rate bundle as used by the field: either fractionalized (`p^α`) or raw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SisRates {
    pub recruitment: f64,
    pub infection: f64,
    pub natural_death: f64,
    pub return_rate: f64,
    pub disease_death: f64,
}

impl SisParams {
    pub fn new(
        recruitment: f64,
        infection: f64,
        natural_death: f64,
        return_rate: f64,
        disease_death: f64,
        alpha: FractionalOrder,
    ) -> Result<Self, ModelError> {
        for (name, value) in [
            ("recruitment", recruitment),
            ("infection", infection),
            ("natural_death", natural_death),
            ("return_rate", return_rate),
            ("disease_death", disease_death),
        ] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(ModelError::NonPositiveRate { name, value });
            }
        }
        Ok(SisParams {
            recruitment,
            infection,
            natural_death,
            return_rate,
            disease_death,
            alpha,
        })
    }

    pub fn alpha(&self) -> FractionalOrder {
        self.alpha
    }

    /// Fractionalized rates `p^α`.
    pub fn effective(&self) -> SisRates {
        let a = self.alpha.value();
        SisRates {
            recruitment: self.recruitment.powf(a),
            infection: self.infection.powf(a),
            natural_death: self.natural_death.powf(a),
            return_rate: self.return_rate.powf(a),
            disease_death: self.disease_death.powf(a),
        }
    }

    /// Raw rates, as used by the legacy dimensionally-inconsistent field.
    pub fn raw(&self) -> SisRates {
        SisRates {
            recruitment: self.recruitment,
            infection: self.infection,
            natural_death: self.natural_death,
            return_rate: self.return_rate,
            disease_death: self.disease_death,
        }
    }
}

/// Nonnegative SIS compartments `(Q_S, Q_I)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SisState {
    q_s: f64,
    q_i: f64,
}

impl SisState {
    pub fn new(q_s: f64, q_i: f64) -> Result<Self, ModelError> {
        for (name, value) in [("Q_S", q_s), ("Q_I", q_i)] {
            if !(value.is_finite() && value >= 0.0) {
                return Err(ModelError::InvalidState { name, value });
            }
        }
        Ok(SisState { q_s, q_i })
    }

    pub fn q_s(&self) -> f64 {
        self.q_s
    }

    pub fn q_i(&self) -> f64 {
        self.q_i
    }

    /// Total population `N = Q_S + Q_I`.
    pub fn total(&self) -> f64 {
        self.q_s + self.q_i
    }
}

impl SisRates {
    /// Field evaluation on raw components. Numerical overshoot may hand the
    /// solver slightly negative values, so no sign restriction applies here.
    #[inline]
    pub fn rhs(&self, q_s: f64, q_i: f64) -> [f64; 2] {
        let n = q_s + q_i;
        let incidence = if n <= POPULATION_GUARD {
            0.0
        } else {
            self.infection * q_s * q_i / n
        };
        [
            self.recruitment - incidence - self.natural_death * q_s + self.return_rate * q_i,
            incidence - (self.disease_death + self.natural_death + self.return_rate) * q_i,
        ]
    }
}

/// Right-hand side of the dimension-consistent SIS system
/// `(Λ^α − φ^α Q_S Q_I/N − ν^α Q_S + ω^α Q_I,  φ^α Q_S Q_I/N − (η^α+ν^α+ω^α) Q_I)`.
pub fn sis_rhs(state: &SisState, params: &SisParams) -> [f64; 2] {
    params.effective().rhs(state.q_s(), state.q_i())
}

/// Same field with raw (non-exponentiated) rates; α-independent.
pub fn sis_rhs_legacy(state: &SisState, params: &SisParams) -> [f64; 2] {
    params.raw().rhs(state.q_s(), state.q_i())
}

/// SIS model as a solver field. `new` builds the fractionalized field,
/// `legacy` the raw-rate variant.
#[derive(Debug, Clone, Copy)]
pub struct SisField {
    rates: SisRates,
}

impl SisField {
    pub fn new(params: &SisParams) -> Self {
        SisField {
            rates: params.effective(),
        }
    }

    pub fn legacy(params: &SisParams) -> Self {
        SisField {
            rates: params.raw(),
        }
    }

    pub fn rates(&self) -> &SisRates {
        &self.rates
    }
}

impl VectorField for SisField {
    fn dim(&self) -> usize {
        2
    }

    fn eval(&self, _t: f64, y: &[f64], dy: &mut [f64]) {
        let out = self.rates.rhs(y[0], y[1]);
        dy.copy_from_slice(&out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(a: f64) -> FractionalOrder {
        FractionalOrder::new(a).unwrap()
    }

    fn disease_free_params(alpha: f64) -> SisParams {
        SisParams::new(0.01, 0.06, 0.01, 0.02, 0.2, order(alpha)).unwrap()
    }

    fn endemic_params(alpha: f64) -> SisParams {
        SisParams::new(0.01, 0.45, 0.01, 0.2, 0.05, order(alpha)).unwrap()
    }

    #[test]
    fn disease_free_point_annihilates_field() {
        for alpha in [0.6, 0.9, 1.0] {
            let p = disease_free_params(alpha);
            let e = p.effective();
            let state = SisState::new(e.recruitment / e.natural_death, 0.0).unwrap();
            let dy = sis_rhs(&state, &p);
            assert!(dy[0].abs() <= 1e-15 && dy[1] == 0.0, "alpha = {alpha}");
        }
    }

    #[test]
    fn hand_evaluated_point() {
        let p = disease_free_params(1.0);
        let dy = sis_rhs(&SisState::new(0.95, 0.05).unwrap(), &p);
        assert!((dy[0] - (-0.00135)).abs() <= 1e-12);
        assert!((dy[1] - (-0.00865)).abs() <= 1e-12);
    }

    #[test]
    fn endemic_point_is_near_equilibrium() {
        // Closed-form equilibrium rounded to seven digits; the field there
        // is zero to well under the residual from the rounding itself.
        let p = endemic_params(1.0);
        let dy = sis_rhs(&SisState::new(0.185_714_3, 0.135_714_3).unwrap(), &p);
        assert!(dy[0].abs() <= 1e-7 && dy[1].abs() <= 1e-7);
    }

    #[test]
    fn legacy_field_ignores_order() {
        let states = [(0.95, 0.05), (0.2, 0.7), (1.3, 0.0)];
        for (q_s, q_i) in states {
            let s = SisState::new(q_s, q_i).unwrap();
            let at_one = sis_rhs_legacy(&s, &disease_free_params(1.0));
            for alpha in [0.3, 0.77, 0.95] {
                assert_eq!(sis_rhs_legacy(&s, &disease_free_params(alpha)), at_one);
            }
            // At alpha = 1 the corrected field coincides with the legacy one.
            assert_eq!(sis_rhs(&s, &disease_free_params(1.0)), at_one);
        }
    }

    #[test]
    fn legacy_disease_free_point() {
        let p = disease_free_params(0.8);
        let r = p.raw();
        let state = SisState::new(r.recruitment / r.natural_death, 0.0).unwrap();
        let dy = sis_rhs_legacy(&state, &p);
        assert!(dy[0].abs() <= 1e-15 && dy[1] == 0.0);
    }

    #[test]
    fn empty_population_produces_no_infections() {
        let p = endemic_params(0.9);
        let dy = p.effective().rhs(0.0, 0.0);
        let e = p.effective();
        assert_eq!(dy, [e.recruitment, 0.0]);
    }

    #[test]
    fn rejects_invalid_inputs() {
        assert!(SisParams::new(0.0, 0.1, 0.1, 0.1, 0.1, order(1.0)).is_err());
        assert!(SisParams::new(0.1, 0.1, -0.1, 0.1, 0.1, order(1.0)).is_err());
        assert!(SisState::new(-0.1, 0.0).is_err());
        assert!(SisState::new(f64::NAN, 0.0).is_err());
    }
}
