//! Scenario ingestion, simulation orchestration across Caputo orders, and
//! emission of CSV trajectories, SVG plots, and JSON stability reports.
//!
//! The binary (`fracepi`) is a thin dispatcher over [`commands`]; the rest
//! of the crate is reusable machinery: [`scenario`] parses and validates
//! scenario files, [`presets`] holds the fourteen published figure
//! scenarios, [`run`] drives the solver per order, and [`output`] / [`svg`]
//! render the artifacts.

pub mod commands;
mod error;
pub mod output;
pub mod presets;
pub mod run;
pub mod scenario;
pub mod svg;

pub use error::CliError;
