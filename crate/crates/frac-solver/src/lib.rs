//! Fixed-step predictor–corrector (PECE) integration for Caputo fractional
//! systems `D^α y(t) = f(t, y)` with order `0 < α ≤ 1` on uniform grids.
//!
//! The scheme is the fractional Adams–Bashforth–Moulton method: a fractional
//! rectangle-rule predictor followed by one or more fractional trapezoid
//! corrector passes, both built on the full-memory convolution of the
//! power-law kernel. No history truncation is performed, so a solve over
//! `N` steps costs `O(N²)` right-hand-side weight accumulations.
//!
//! For `α = 1` the weights degenerate to the classical rectangle and
//! trapezoid rules; [`rk4_solve`] provides an independent fourth-order
//! reference integrator for that case, and [`mittag_leffler`] the analytic
//! solution of the scalar linear test equation.
//!
//! # Example
//!
//! ```
//! use frac_solver::{pece_solve, FnField, FractionalOrder, GridSpec};
//!
//! // D^0.5 y = -y, y(0) = 1
//! let field = FnField::new(1, |_t, y, dy| dy[0] = -y[0]);
//! let alpha = FractionalOrder::new(0.5).unwrap();
//! let grid = GridSpec::new(0.01, 1.0).unwrap();
//! let traj = pece_solve(&field, alpha, &[1.0], grid, 1).unwrap();
//! assert!(traj.final_state()[0] > 0.0);
//! ```

mod error;
mod field;
mod gamma;
mod grid;
mod mittag_leffler;
mod order;
mod pece;
mod rk4;
mod trajectory;

pub use error::SolverError;
pub use field::{FnField, VectorField};
pub use gamma::gamma;
pub use grid::GridSpec;
pub use mittag_leffler::mittag_leffler;
pub use order::FractionalOrder;
pub use pece::{corrector_weight, pece_solve, pece_solve_with, predictor_weight, PeceConfig};
pub use rk4::rk4_solve;
pub use trajectory::Trajectory;
