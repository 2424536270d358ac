//! Local stability analysis for the fractional SIS and SIRS models.
//!
//! The pipeline mirrors the analytic treatment of the models: closed-form
//! equilibria and basic reproduction numbers, hard-coded analytic Jacobians,
//! characteristic polynomials by trace/minor/determinant identities, roots
//! by quadratic formula or trigonometric/Cardano casework, and verdicts by
//! two routes that are kept separate and cross-checked:
//!
//! - the fractional angle condition `|arg λ_i| > απ/2` on computed
//!   eigenvalues ([`matignon_check`]), and
//! - coefficient-level algebra: Routh–Hurwitz signs for the quadratic cases
//!   and the discriminant-based five-case proposition for the SIRS endemic
//!   cubic ([`classify_endemic_sirs`]).
//!
//! [`sis_report`] / [`sirs_report`] assemble everything into a serializable
//! report with an agreement flag between the routes.

mod eigen;
mod equilibria;
mod error;
mod jacobian;
mod matrix;
mod report;
mod verdict;

pub use eigen::{eigenvalues, EigenSet, Eigenvalue};
pub use equilibria::{sirs_equilibria, sirs_r0, sis_equilibria, sis_r0, EquilibriumSet};
pub use error::StabilityError;
pub use jacobian::{sirs_jacobian, sis_jacobian};
pub use matrix::{char_poly, CharPoly, CubicPoly, QuadraticPoly, SquareMatrix};
pub use report::{
    sirs_report, sis_legacy_report, sis_report, EquilibriumAnalysis, StabilityReport,
};
pub use verdict::{
    classify_endemic_sirs, cubic_discriminant, matignon_check, routh_hurwitz_quadratic,
    Classification, StabilityVerdict,
};
