use crate::scenario::{ModelKind, ModelParams, OutputKind, Scenario, SirsRatesSpec, SisRatesSpec};
use frac_solver::{FractionalOrder, GridSpec};

/// The published comparison set of Caputo orders.
pub const PRESET_ALPHAS: [f64; 4] = [1.0, 0.99, 0.95, 0.90];

/// What a figure displays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureContent {
    /// One state component against time, one curve per order.
    TimeSeries { component: usize },
    /// Q_I against Q_S, one sub-panel per order.
    PhasePortrait,
}

pub struct FigurePreset {
    pub id: &'static str,
    pub content: FigureContent,
    pub scenario: Scenario,
}

fn alphas() -> Vec<FractionalOrder> {
    PRESET_ALPHAS
        .iter()
        .map(|&a| FractionalOrder::new(a).expect("preset orders are valid"))
        .collect()
}

fn scenario(model: ModelKind, params: ModelParams, t_end: f64) -> Scenario {
    let initial_state = match model.dim() {
        2 => vec![0.95, 0.05],
        _ => vec![0.95, 0.05, 0.0],
    };
    Scenario {
        model,
        params,
        alphas: alphas(),
        initial_state,
        grid: GridSpec::new(0.05, t_end).expect("preset grid is valid"),
        corrector_iterations: 1,
        clamp_nonnegative: false,
        outputs: vec![OutputKind::Csv, OutputKind::Svg],
    }
}

/// Disease-free presets decay at the natural death rate 0.01 and need the
/// longer horizon; endemic presets settle faster.
const DF_T_END: f64 = 2000.0;
const EN_T_END: f64 = 1000.0;

pub fn sis_disease_free() -> Scenario {
    scenario(
        ModelKind::Sis,
        ModelParams::Sis(SisRatesSpec {
            recruitment: 0.01,
            infection: 0.06,
            natural_death: 0.01,
            return_rate: 0.02,
            disease_death: 0.2,
        }),
        DF_T_END,
    )
}

pub fn sis_endemic() -> Scenario {
    scenario(
        ModelKind::Sis,
        ModelParams::Sis(SisRatesSpec {
            recruitment: 0.01,
            infection: 0.45,
            natural_death: 0.01,
            return_rate: 0.2,
            disease_death: 0.05,
        }),
        EN_T_END,
    )
}

pub fn sirs_disease_free() -> Scenario {
    scenario(
        ModelKind::Sirs,
        ModelParams::Sirs(SirsRatesSpec {
            recruitment: 0.01,
            infection: 0.06,
            natural_death: 0.01,
            recovery: 0.3,
            disease_death: 0.15,
            immunity_loss: 0.02,
        }),
        DF_T_END,
    )
}

pub fn sirs_endemic() -> Scenario {
    scenario(
        ModelKind::Sirs,
        ModelParams::Sirs(SirsRatesSpec {
            recruitment: 0.01,
            infection: 0.5,
            natural_death: 0.01,
            recovery: 0.2,
            disease_death: 0.015,
            immunity_loss: 0.02,
        }),
        EN_T_END,
    )
}

pub const FIGURE_IDS: [&str; 14] = [
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11",
    "fig12", "fig13", "fig14",
];

/// Scenario and display type behind each published figure.
pub fn figure_preset(id: &str) -> Option<FigurePreset> {
    use FigureContent::{PhasePortrait, TimeSeries};
    let (content, scenario) = match id {
        "fig1" => (TimeSeries { component: 0 }, sis_disease_free()),
        "fig2" => (TimeSeries { component: 1 }, sis_disease_free()),
        "fig3" => (PhasePortrait, sis_disease_free()),
        "fig4" => (TimeSeries { component: 0 }, sis_endemic()),
        "fig5" => (TimeSeries { component: 1 }, sis_endemic()),
        "fig6" => (PhasePortrait, sis_endemic()),
        "fig7" => (TimeSeries { component: 0 }, sirs_disease_free()),
        "fig8" => (TimeSeries { component: 1 }, sirs_disease_free()),
        "fig9" => (TimeSeries { component: 2 }, sirs_disease_free()),
        "fig10" => (PhasePortrait, sirs_disease_free()),
        "fig11" => (TimeSeries { component: 0 }, sirs_endemic()),
        "fig12" => (TimeSeries { component: 1 }, sirs_endemic()),
        "fig13" => (TimeSeries { component: 2 }, sirs_endemic()),
        "fig14" => (PhasePortrait, sirs_endemic()),
        _ => return None,
    };
    let id = FIGURE_IDS
        .iter()
        .find(|&&f| f == id)
        .expect("matched above");
    Some(FigurePreset {
        id,
        content,
        scenario,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fourteen_resolve() {
        for id in FIGURE_IDS {
            let p = figure_preset(id).unwrap();
            assert_eq!(p.id, id);
            assert_eq!(p.scenario.alphas.len(), 4);
            assert_eq!(p.scenario.initial_state.len(), p.scenario.model.dim());
        }
        assert!(figure_preset("fig15").is_none());
        assert!(figure_preset("fig0").is_none());
    }

    #[test]
    fn horizons_follow_regime() {
        assert_eq!(figure_preset("fig2").unwrap().scenario.grid.t_end(), 2000.0);
        assert_eq!(figure_preset("fig6").unwrap().scenario.grid.t_end(), 1000.0);
        assert_eq!(figure_preset("fig10").unwrap().scenario.grid.t_end(), 2000.0);
        assert_eq!(figure_preset("fig14").unwrap().scenario.grid.t_end(), 1000.0);
    }
}
