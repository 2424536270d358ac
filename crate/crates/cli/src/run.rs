use crate::scenario::{ModelKind, Scenario};
use crate::CliError;
use epi_models::{SirsField, SisField};
use frac_solver::{pece_solve_with, FractionalOrder, PeceConfig, SolverError, Trajectory};
use rayon::prelude::*;
use stability::{sirs_report, sis_legacy_report, sis_report, StabilityReport};

fn map_solver_error(alpha: FractionalOrder, err: SolverError) -> CliError {
    match err {
        SolverError::NonFiniteState { step } => CliError::Numerical {
            alpha: alpha.value(),
            step,
        },
        other => CliError::config(format!("solver: {other}")),
    }
}

/// Integrate the scenario's model at one order.
pub fn solve_at(scenario: &Scenario, alpha: FractionalOrder) -> Result<Trajectory, CliError> {
    let config = PeceConfig {
        corrector_iterations: scenario.corrector_iterations,
        clamp_nonnegative: scenario.clamp_nonnegative,
    };
    let result = match scenario.model {
        ModelKind::Sis => {
            let field = SisField::new(&scenario.sis_params(alpha)?);
            pece_solve_with(&field, alpha, &scenario.initial_state, scenario.grid, config)
        }
        ModelKind::SisLegacy => {
            let field = SisField::legacy(&scenario.sis_params(alpha)?);
            pece_solve_with(&field, alpha, &scenario.initial_state, scenario.grid, config)
        }
        ModelKind::Sirs => {
            let field = SirsField::new(&scenario.sirs_params(alpha)?);
            pece_solve_with(&field, alpha, &scenario.initial_state, scenario.grid, config)
        }
    };
    result.map_err(|e| map_solver_error(alpha, e))
}

/// Integrate at every requested order. Runs orders in parallel; results
/// come back in the order the scenario lists them, and the first failure
/// (in that same order) wins.
pub fn solve_all(scenario: &Scenario) -> Result<Vec<(FractionalOrder, Trajectory)>, CliError> {
    let results: Vec<Result<Trajectory, CliError>> = scenario
        .alphas
        .par_iter()
        .map(|&alpha| solve_at(scenario, alpha))
        .collect();
    scenario
        .alphas
        .iter()
        .zip(results)
        .map(|(&alpha, r)| r.map(|t| (alpha, t)))
        .collect()
}

/// Stability report for the scenario's model at one order.
pub fn report_at(scenario: &Scenario, alpha: FractionalOrder) -> Result<StabilityReport, CliError> {
    Ok(match scenario.model {
        ModelKind::Sis => sis_report(&scenario.sis_params(alpha)?),
        ModelKind::SisLegacy => sis_legacy_report(&scenario.sis_params(alpha)?),
        ModelKind::Sirs => sirs_report(&scenario.sirs_params(alpha)?),
    })
}

/// Euclidean distance from a trajectory's final state to a point.
pub fn distance_to(traj: &Trajectory, point: &[f64]) -> f64 {
    traj.final_state()
        .iter()
        .zip(point)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}
