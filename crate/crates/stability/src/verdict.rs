use crate::{CubicPoly, EigenSet, QuadraticPoly};
use frac_solver::FractionalOrder;
use serde::Serialize;

/// Outcome of a local-stability test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    LocallyAsymptoticallyStable,
    Unstable,
    Inconclusive,
}

/// A classification together with the rule that produced it.
///
/// `margin` is `min_i |arg λ_i| − απ/2` whenever eigenvalues were computed
/// (positive means the angle condition holds strictly); `discriminant` is
/// the cubic discriminant where one was evaluated. `matignon_cross` carries
/// the direct eigenvalue check when the proposition casework was
/// inconclusive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityVerdict {
    pub classification: Classification,
    pub rule_fired: String,
    pub margin: Option<f64>,
    pub discriminant: Option<f64>,
    pub matignon_cross: Option<Classification>,
}

impl Classification {
    /// Short lowercase form used in tabular output.
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::LocallyAsymptoticallyStable => "stable",
            Classification::Unstable => "unstable",
            Classification::Inconclusive => "inconclusive",
        }
    }
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        self.classification == Classification::LocallyAsymptoticallyStable
    }

    pub fn is_definite(&self) -> bool {
        self.classification != Classification::Inconclusive
    }
}

/// Fractional-order angle condition: locally asymptotically stable iff
/// every eigenvalue satisfies `|arg λ| > απ/2` strictly. An eigenvalue that
/// is exactly zero has no argument and yields `Inconclusive`.
pub fn matignon_check(eigs: &EigenSet, alpha: FractionalOrder) -> StabilityVerdict {
    let threshold = alpha.value() * std::f64::consts::FRAC_PI_2;
    if eigs.values.iter().any(|v| v.re == 0.0 && v.im == 0.0) {
        return StabilityVerdict {
            classification: Classification::Inconclusive,
            rule_fired: "matignon".to_string(),
            margin: None,
            discriminant: None,
            matignon_cross: None,
        };
    }
    let min_arg = eigs
        .values
        .iter()
        .map(|v| v.arg().abs())
        .fold(f64::INFINITY, f64::min);
    let margin = min_arg - threshold;
    StabilityVerdict {
        classification: if margin > 0.0 {
            Classification::LocallyAsymptoticallyStable
        } else {
            Classification::Unstable
        },
        rule_fired: "matignon".to_string(),
        margin: Some(margin),
        discriminant: None,
        matignon_cross: None,
    }
}

/// Routh–Hurwitz test for `λ² + a1·λ + a2`: true iff `a1 > 0` and `a2 > 0`
/// strictly, i.e. both roots lie in the open left half-plane.
pub fn routh_hurwitz_quadratic(p: &QuadraticPoly) -> bool {
    p.a1 > 0.0 && p.a2 > 0.0
}

/// Discriminant of `x³ + w1·x² + w2·x + w3`:
/// `D = 18·w1·w2·w3 + (w1·w2)² − 4·w3·w1³ − 4·w2³ − 27·w3²`.
///
/// `D > 0` iff the roots are three distinct reals; `D < 0` iff one real
/// root is paired with a complex-conjugate pair.
pub fn cubic_discriminant(p: &CubicPoly) -> f64 {
    18.0 * p.w1 * p.w2 * p.w3 + (p.w1 * p.w2).powi(2)
        - 4.0 * p.w3 * p.w1.powi(3)
        - 4.0 * p.w2.powi(3)
        - 27.0 * p.w3 * p.w3
}

/// Five-case endemic classification for the SIRS cubic, applied in order:
///
/// 1. `D > 0` with the Routh–Hurwitz signs (`w1 > 0`, `w3 > 0`,
///    `w1·w2 > w3`) — stable.
/// 2. `D < 0`, `w1 ≥ 0`, `w2 ≥ 0`, `w3 > 0`, `α < 2/3` — stable.
/// 3. `D < 0`, `w1 < 0`, `w2 < 0`, `α > 2/3` — the roots satisfy the angle
///    condition.
/// 4. `D < 0`, `w1 > 0`, `w2 > 0`, `w1·w2 = w3` (to 1e-9 relative) — stable
///    for every `α` in (0, 1].
/// 5. `w3 ≤ 0` — not stable (`w3 > 0` is necessary).
///
/// When no case applies the verdict is `Inconclusive` and the direct
/// eigenvalue check is attached as `matignon_cross`.
pub fn classify_endemic_sirs(p: &CubicPoly, alpha: FractionalOrder) -> StabilityVerdict {
    let d = cubic_discriminant(p);
    let a = alpha.value();
    let eigs = crate::eigenvalues(&crate::CharPoly::Cubic(*p));
    let direct = matignon_check(&eigs, alpha);

    let equal_rel = |x: f64, y: f64| (x - y).abs() <= 1e-9 * x.abs().max(y.abs());
    let (classification, rule, cross) = if d > 0.0 && p.w1 > 0.0 && p.w3 > 0.0 && p.w1 * p.w2 > p.w3
    {
        (Classification::LocallyAsymptoticallyStable, "prop-i", None)
    } else if d < 0.0 && p.w1 >= 0.0 && p.w2 >= 0.0 && p.w3 > 0.0 && a < 2.0 / 3.0 {
        (Classification::LocallyAsymptoticallyStable, "prop-ii", None)
    } else if d < 0.0 && p.w1 < 0.0 && p.w2 < 0.0 && a > 2.0 / 3.0 {
        (Classification::LocallyAsymptoticallyStable, "prop-iii", None)
    } else if d < 0.0 && p.w1 > 0.0 && p.w2 > 0.0 && equal_rel(p.w1 * p.w2, p.w3) {
        (Classification::LocallyAsymptoticallyStable, "prop-iv", None)
    } else if p.w3 <= 0.0 {
        (Classification::Unstable, "prop-v", None)
    } else {
        (
            Classification::Inconclusive,
            "inconclusive",
            Some(direct.classification),
        )
    };
    StabilityVerdict {
        classification,
        rule_fired: rule.to_string(),
        margin: direct.margin,
        discriminant: Some(d),
        matignon_cross: cross,
    }
}
