//! Compartmental epidemic vector fields with Caputo-order dynamics.
//!
//! Two models share the same construction: every rate constant `p` enters
//! the field as `p^α`, so both sides of `D^α y = f(y)` carry the time
//! dimension `(time)^(-α)`. The SIS model additionally ships a "legacy"
//! variant that keeps the raw rates; it is dimensionally inconsistent for
//! `α < 1` and exists for contrast experiments only.
//!
//! Populations use standard incidence `φ^α Q_S Q_I / N`; an empty
//! population produces no infections, so the incidence term is defined as
//! zero once `N` drops below [`POPULATION_GUARD`].

mod error;
mod rates;
mod sis;
mod sirs;

pub use error::ModelError;
pub use rates::effective_rate;
pub use sis::{sis_rhs, sis_rhs_legacy, SisField, SisParams, SisRates, SisState};
pub use sirs::{sirs_rhs, SirsField, SirsParams, SirsRates, SirsState};

/// Below this total population the incidence term is defined as 0.
pub const POPULATION_GUARD: f64 = 1e-12;
