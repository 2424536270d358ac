use crate::equilibria::{sirs_equilibria_rates, sis_equilibria_rates};
use crate::jacobian::{sirs_jacobian_rates, sis_jacobian_rates};
use crate::{
    char_poly, classify_endemic_sirs, eigenvalues, matignon_check, routh_hurwitz_quadratic,
    CharPoly, Classification, EigenSet, EquilibriumSet, QuadraticPoly, SquareMatrix,
    StabilityVerdict,
};
use epi_models::{SirsParams, SisParams, SisRates};
use frac_solver::FractionalOrder;
use serde::Serialize;

/// Full stability workup of one equilibrium point: the Jacobian and its
/// spectrum, the direct angle-condition verdict, the coefficient-level
/// (Routh–Hurwitz / proposition) verdict, and the resolved verdict — the
/// algebraic route when it is definite, the eigenvalue route otherwise.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquilibriumAnalysis {
    pub equilibrium: String,
    pub point: Vec<f64>,
    pub jacobian: Vec<Vec<f64>>,
    pub char_poly: CharPoly,
    pub eigenvalues: EigenSet,
    pub matignon: StabilityVerdict,
    pub algebraic: StabilityVerdict,
    pub verdict: StabilityVerdict,
    /// `Some(true/false)` when both routes returned a definite
    /// classification, `None` otherwise.
    pub routes_agree: Option<bool>,
}

/// Per-model, per-order stability report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    pub model: String,
    pub alpha: f64,
    pub r0: f64,
    pub equilibria: EquilibriumSet,
    pub analyses: Vec<EquilibriumAnalysis>,
}

impl StabilityReport {
    pub fn disease_free(&self) -> &EquilibriumAnalysis {
        &self.analyses[0]
    }

    pub fn endemic(&self) -> Option<&EquilibriumAnalysis> {
        self.analyses.get(1)
    }

    /// Analysis of the predicted attractor (endemic when it exists).
    pub fn predicted(&self) -> &EquilibriumAnalysis {
        self.endemic().unwrap_or_else(|| self.disease_free())
    }
}

/// Coefficient-level verdict for a quadratic: Routh–Hurwitz signs give
/// stability, a negative determinant pins a saddle (one positive real
/// root, unstable at every order), everything else stays open.
fn quadratic_algebraic(p: &QuadraticPoly) -> StabilityVerdict {
    let classification = if routh_hurwitz_quadratic(p) {
        Classification::LocallyAsymptoticallyStable
    } else if p.a2 < 0.0 {
        Classification::Unstable
    } else {
        Classification::Inconclusive
    };
    StabilityVerdict {
        classification,
        rule_fired: "RH-quadratic".to_string(),
        margin: None,
        discriminant: None,
        matignon_cross: None,
    }
}

fn assemble(
    equilibrium: &str,
    point: &[f64],
    jacobian: Vec<Vec<f64>>,
    cp: CharPoly,
    alpha: FractionalOrder,
    algebraic: StabilityVerdict,
) -> EquilibriumAnalysis {
    let eigs = eigenvalues(&cp);
    let matignon = matignon_check(&eigs, alpha);
    let verdict = if algebraic.is_definite() {
        algebraic.clone()
    } else {
        matignon.clone()
    };
    let routes_agree = (matignon.is_definite() && algebraic.is_definite())
        .then(|| matignon.classification == algebraic.classification);
    EquilibriumAnalysis {
        equilibrium: equilibrium.to_string(),
        point: point.to_vec(),
        jacobian,
        char_poly: cp,
        eigenvalues: eigs,
        matignon,
        algebraic,
        verdict,
        routes_agree,
    }
}

fn sis_analysis(
    e: &SisRates,
    alpha: FractionalOrder,
    equilibrium: &str,
    point: &[f64],
) -> EquilibriumAnalysis {
    let j = sis_jacobian_rates(e, point[0], point[1])
        .expect("equilibrium populations are strictly positive");
    let cp = char_poly(&SquareMatrix::Two(j));
    let algebraic = match &cp {
        CharPoly::Quadratic(q) => quadratic_algebraic(q),
        CharPoly::Cubic(_) => unreachable!("2x2 matrix"),
    };
    let rows = j.iter().map(|r| r.to_vec()).collect();
    assemble(equilibrium, point, rows, cp, alpha, algebraic)
}

fn sis_report_rates(e: &SisRates, alpha: FractionalOrder, model: &str) -> StabilityReport {
    let equilibria = sis_equilibria_rates(e);
    let mut analyses = vec![sis_analysis(e, alpha, "disease_free", &equilibria.disease_free)];
    if let Some(en) = &equilibria.endemic {
        analyses.push(sis_analysis(e, alpha, "endemic", en));
    }
    StabilityReport {
        model: model.to_string(),
        alpha: alpha.value(),
        r0: equilibria.r0,
        equilibria,
        analyses,
    }
}

/// Report for the dimension-consistent SIS model.
pub fn sis_report(params: &SisParams) -> StabilityReport {
    sis_report_rates(&params.effective(), params.alpha(), "sis")
}

/// Report for the legacy raw-rate SIS field. Its equilibria and Jacobians
/// are order-independent, but the angle condition still involves the
/// Caputo order the field is solved at.
pub fn sis_legacy_report(params: &SisParams) -> StabilityReport {
    sis_report_rates(&params.raw(), params.alpha(), "sis-legacy")
}

/// Report for the fractional SIRS model.
pub fn sirs_report(params: &SirsParams) -> StabilityReport {
    let e = params.effective();
    let alpha = params.alpha();
    let equilibria = sirs_equilibria_rates(&e);

    let mut analyses = Vec::with_capacity(2);
    {
        let point = &equilibria.disease_free;
        let j = sirs_jacobian_rates(&e, point[0], point[1], point[2])
            .expect("disease-free population is strictly positive");
        let cp = char_poly(&SquareMatrix::Three(j));
        // One eigenvalue of J(P_df) is -nu^a < 0; the other two come from
        // the lower-right 2x2 block, which Routh-Hurwitz settles.
        let block = QuadraticPoly {
            a1: -(j[1][1] + j[2][2]),
            a2: j[1][1] * j[2][2] - j[1][2] * j[2][1],
        };
        let algebraic = quadratic_algebraic(&block);
        let rows = j.iter().map(|r| r.to_vec()).collect();
        analyses.push(assemble("disease_free", point, rows, cp, alpha, algebraic));
    }
    if let Some(en) = &equilibria.endemic {
        let j = sirs_jacobian_rates(&e, en[0], en[1], en[2])
            .expect("endemic population is strictly positive");
        let cp = char_poly(&SquareMatrix::Three(j));
        let algebraic = match &cp {
            CharPoly::Cubic(c) => classify_endemic_sirs(c, alpha),
            CharPoly::Quadratic(_) => unreachable!("3x3 matrix"),
        };
        let rows = j.iter().map(|r| r.to_vec()).collect();
        analyses.push(assemble("endemic", en, rows, cp, alpha, algebraic));
    }
    StabilityReport {
        model: "sirs".to_string(),
        alpha: alpha.value(),
        r0: equilibria.r0,
        equilibria,
        analyses,
    }
}
