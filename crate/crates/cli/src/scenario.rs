use crate::CliError;
use epi_models::{SirsParams, SisParams};
use frac_solver::{FractionalOrder, GridSpec};
use serde::Deserialize;
use std::path::Path;

/// Which model a scenario runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Sis,
    SisLegacy,
    Sirs,
}

impl ModelKind {
    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::Sis => "sis",
            ModelKind::SisLegacy => "sis-legacy",
            ModelKind::Sirs => "sirs",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ModelKind::Sis | ModelKind::SisLegacy => 2,
            ModelKind::Sirs => 3,
        }
    }

    pub fn components(&self) -> &'static [&'static str] {
        match self {
            ModelKind::Sis | ModelKind::SisLegacy => &["Q_S", "Q_I"],
            ModelKind::Sirs => &["Q_S", "Q_I", "Q_R"],
        }
    }
}

/// Raw rate constants from the scenario file (no order attached yet).
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SisRatesSpec {
    pub recruitment: f64,
    pub infection: f64,
    pub natural_death: f64,
    pub return_rate: f64,
    pub disease_death: f64,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SirsRatesSpec {
    pub recruitment: f64,
    pub infection: f64,
    pub natural_death: f64,
    pub recovery: f64,
    pub disease_death: f64,
    pub immunity_loss: f64,
}

#[derive(Debug, Clone, Copy)]
pub enum ModelParams {
    Sis(SisRatesSpec),
    Sirs(SirsRatesSpec),
}

/// Requested artifacts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputKind {
    Csv,
    Svg,
    Report,
}

impl OutputKind {
    pub(crate) fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(OutputKind::Csv),
            "svg" => Ok(OutputKind::Svg),
            // The CLI flag vocabulary calls the stability report "json".
            "report" | "json" => Ok(OutputKind::Report),
            other => Err(CliError::config(format!(
                "outputs: unknown kind `{other}` (expected csv, svg, report)"
            ))),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    step: f64,
    t_end: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    model: String,
    params: serde_json::Value,
    alphas: Vec<f64>,
    initial_state: Vec<f64>,
    grid: RawGrid,
    #[serde(default = "default_corrector_iterations")]
    corrector_iterations: u32,
    #[serde(default)]
    clamp_nonnegative: bool,
    #[serde(default = "default_outputs")]
    outputs: Vec<String>,
}

fn default_corrector_iterations() -> u32 {
    1
}

fn default_outputs() -> Vec<String> {
    vec!["csv".to_string()]
}

/// A validated simulation request: model, rates, orders, initial state,
/// grid, and output selection.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub model: ModelKind,
    pub params: ModelParams,
    pub alphas: Vec<FractionalOrder>,
    pub initial_state: Vec<f64>,
    pub grid: GridSpec,
    pub corrector_iterations: u32,
    pub clamp_nonnegative: bool,
    pub outputs: Vec<OutputKind>,
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let raw: RawScenario = serde_json::from_str(text)
            .map_err(|e| CliError::config(format!("scenario: {e}")))?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawScenario) -> Result<Self, CliError> {
        let model = match raw.model.as_str() {
            "sis" => ModelKind::Sis,
            "sis-legacy" => ModelKind::SisLegacy,
            "sirs" => ModelKind::Sirs,
            other => {
                return Err(CliError::config(format!(
                    "model: unknown model `{other}` (expected sis, sirs, sis-legacy)"
                )))
            }
        };

        let params = match model {
            ModelKind::Sis | ModelKind::SisLegacy => {
                let p: SisRatesSpec = serde_json::from_value(raw.params)
                    .map_err(|e| CliError::config(format!("params: {e}")))?;
                ModelParams::Sis(p)
            }
            ModelKind::Sirs => {
                let p: SirsRatesSpec = serde_json::from_value(raw.params)
                    .map_err(|e| CliError::config(format!("params: {e}")))?;
                ModelParams::Sirs(p)
            }
        };

        if raw.alphas.is_empty() {
            return Err(CliError::config(
                "alphas: must contain at least one order in (0, 1]",
            ));
        }
        let alphas = raw
            .alphas
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                FractionalOrder::new(a)
                    .map_err(|_| CliError::config(format!("alphas[{i}]: {a} is outside (0, 1]")))
            })
            .collect::<Result<Vec<_>, _>>()?;

        if raw.initial_state.len() != model.dim() {
            return Err(CliError::config(format!(
                "initial_state: expected {} components for model {}, got {}",
                model.dim(),
                model.name(),
                raw.initial_state.len()
            )));
        }
        if let Some((i, &v)) = raw
            .initial_state
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v >= 0.0))
        {
            return Err(CliError::config(format!(
                "initial_state[{i}]: {v} is not a finite nonnegative population"
            )));
        }

        let grid = GridSpec::new(raw.grid.step, raw.grid.t_end)
            .map_err(|e| CliError::config(format!("grid: {e}")))?;

        if !(1..=10).contains(&raw.corrector_iterations) {
            return Err(CliError::config(format!(
                "corrector_iterations: {} is outside 1..=10",
                raw.corrector_iterations
            )));
        }

        let outputs = raw
            .outputs
            .iter()
            .map(|s| OutputKind::parse(s))
            .collect::<Result<Vec<_>, _>>()?;

        let scenario = Scenario {
            model,
            params,
            alphas,
            initial_state: raw.initial_state,
            grid,
            corrector_iterations: raw.corrector_iterations,
            clamp_nonnegative: raw.clamp_nonnegative,
            outputs,
        };
        scenario.validate_rates()?;
        Ok(scenario)
    }

    fn validate_rates(&self) -> Result<(), CliError> {
        // Building the typed params runs the positivity checks; the first
        // order stands in for all of them.
        let alpha = self.alphas[0];
        match self.params {
            ModelParams::Sis(_) => self.sis_params(alpha).map(|_| ()),
            ModelParams::Sirs(_) => self.sirs_params(alpha).map(|_| ()),
        }
    }

    /// Apply `--h` / `--t-end` overrides.
    pub fn with_grid_overrides(
        mut self,
        h: Option<f64>,
        t_end: Option<f64>,
    ) -> Result<Self, CliError> {
        if h.is_some() || t_end.is_some() {
            let step = h.unwrap_or_else(|| self.grid.step());
            let end = t_end.unwrap_or_else(|| self.grid.t_end());
            self.grid =
                GridSpec::new(step, end).map_err(|e| CliError::config(format!("grid: {e}")))?;
        }
        Ok(self)
    }

    pub fn sis_params(&self, alpha: FractionalOrder) -> Result<SisParams, CliError> {
        match &self.params {
            ModelParams::Sis(p) => SisParams::new(
                p.recruitment,
                p.infection,
                p.natural_death,
                p.return_rate,
                p.disease_death,
                alpha,
            )
            .map_err(|e| CliError::config(format!("params: {e}"))),
            ModelParams::Sirs(_) => unreachable!("SIS params requested for a SIRS scenario"),
        }
    }

    pub fn sirs_params(&self, alpha: FractionalOrder) -> Result<SirsParams, CliError> {
        match &self.params {
            ModelParams::Sirs(p) => SirsParams::new(
                p.recruitment,
                p.infection,
                p.natural_death,
                p.recovery,
                p.disease_death,
                p.immunity_loss,
                alpha,
            )
            .map_err(|e| CliError::config(format!("params: {e}"))),
            ModelParams::Sis(_) => unreachable!("SIRS params requested for an SIS scenario"),
        }
    }
}
