use crate::output::{alpha_label, format_float, trajectory_csv, write_text};
use crate::presets::{figure_preset, FigureContent};
use crate::run::{distance_to, report_at, solve_all};
use crate::scenario::{OutputKind, Scenario};
use crate::svg::{phase_portrait_svg, time_series_svg, Series};
use crate::CliError;
use frac_solver::{FractionalOrder, Trajectory};
use std::path::Path;

type Runs = Vec<(FractionalOrder, Trajectory)>;

fn csv_name(stem: &str, alpha: FractionalOrder) -> String {
    format!("{stem}_alpha{}.csv", alpha_label(alpha.value()))
}

fn write_run_csvs(out: &Path, stem: &str, runs: &Runs, components: &[&str]) -> Result<(), CliError> {
    for (alpha, traj) in runs {
        write_text(
            &out.join(csv_name(stem, *alpha)),
            &trajectory_csv(traj, components),
        )?;
    }
    Ok(())
}

fn component_series(runs: &Runs, component: usize) -> Vec<Series> {
    runs.iter()
        .map(|(alpha, traj)| Series {
            label: format!("α = {}", alpha_label(alpha.value())),
            points: traj.rows().map(|(t, y)| (t, y[component])).collect(),
        })
        .collect()
}

fn phase_series(runs: &Runs) -> Vec<Series> {
    runs.iter()
        .map(|(alpha, traj)| Series {
            label: format!("α = {}", alpha_label(alpha.value())),
            points: traj.rows().map(|(_, y)| (y[0], y[1])).collect(),
        })
        .collect()
}

/// `simulate`: one CSV per order, plus SVG time series and/or a JSON
/// stability report when requested.
pub fn cmd_simulate(
    scenario_path: &Path,
    out: &Path,
    h: Option<f64>,
    t_end: Option<f64>,
    formats: Option<Vec<String>>,
) -> Result<(), CliError> {
    let mut scenario = Scenario::load(scenario_path)?.with_grid_overrides(h, t_end)?;
    if let Some(formats) = formats {
        scenario.outputs = formats
            .iter()
            .map(|s| OutputKind::parse(s))
            .collect::<Result<Vec<_>, _>>()?;
    }
    let components = scenario.model.components();
    let stem = scenario.model.name();
    let runs = solve_all(&scenario)?;

    if scenario.outputs.contains(&OutputKind::Csv) {
        write_run_csvs(out, stem, &runs, components)?;
    }
    if scenario.outputs.contains(&OutputKind::Svg) {
        for (c, name) in components.iter().enumerate() {
            let svg = time_series_svg(
                &format!("{stem}: {name}(t)"),
                "t",
                name,
                &component_series(&runs, c),
            );
            write_text(&out.join(format!("{stem}_{name}.svg")), &svg)?;
        }
    }
    if scenario.outputs.contains(&OutputKind::Report) {
        let reports = scenario
            .alphas
            .iter()
            .map(|&a| report_at(&scenario, a))
            .collect::<Result<Vec<_>, _>>()?;
        let json = serde_json::to_string_pretty(&reports)
            .map_err(|e| CliError::Io(format!("report serialization: {e}")))?;
        write_text(&out.join(format!("{stem}_report.json")), &(json + "\n"))?;
    }
    Ok(())
}

/// `analyze`: stability reports for every order, JSON array on stdout.
pub fn cmd_analyze(scenario_path: &Path) -> Result<(), CliError> {
    let scenario = Scenario::load(scenario_path)?;
    let reports = scenario
        .alphas
        .iter()
        .map(|&a| report_at(&scenario, a))
        .collect::<Result<Vec<_>, _>>()?;
    let json = serde_json::to_string_pretty(&reports)
        .map_err(|e| CliError::Io(format!("report serialization: {e}")))?;
    println!("{json}");
    Ok(())
}

/// `reproduce`: run one published figure scenario and emit its CSVs plus
/// the figure-typed SVG.
pub fn cmd_reproduce(
    figure: &str,
    out: &Path,
    h: Option<f64>,
    t_end: Option<f64>,
) -> Result<(), CliError> {
    let preset = figure_preset(figure).ok_or_else(|| {
        CliError::config(format!("figure: unknown id `{figure}` (expected fig1..fig14)"))
    })?;
    let scenario = preset.scenario.with_grid_overrides(h, t_end)?;
    let components = scenario.model.components();
    let runs = solve_all(&scenario)?;

    write_run_csvs(out, preset.id, &runs, components)?;
    let svg = match preset.content {
        FigureContent::TimeSeries { component } => time_series_svg(
            &format!("{}: {}(t), {}", preset.id, components[component], scenario.model.name()),
            "t",
            components[component],
            &component_series(&runs, component),
        ),
        FigureContent::PhasePortrait => phase_portrait_svg(
            &format!("{}: SI plane, {}", preset.id, scenario.model.name()),
            "Q_S",
            "Q_I",
            &phase_series(&runs),
        ),
    };
    write_text(&out.join(format!("{}.svg", preset.id)), &svg)?;
    Ok(())
}

/// `sweep-alpha`: final state, distance to the predicted equilibrium, and
/// verdict for every order in the range, one CSV row per order.
pub fn cmd_sweep_alpha(
    scenario_path: &Path,
    start: f64,
    end: f64,
    step: f64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    if !(start > 0.0 && end <= 1.0 && start <= end && step > 0.0) {
        return Err(CliError::config(format!(
            "alpha range: need 0 < start <= end <= 1 and step > 0, got start = {start}, end = {end}, step = {step}"
        )));
    }
    let scenario = Scenario::load(scenario_path)?;
    let mut alphas = Vec::new();
    let mut k = 0u32;
    loop {
        // Snap away accumulation noise (0.9 + 0.05 = 0.9500000000000001).
        let a = ((start + f64::from(k) * step) * 1e12).round() / 1e12;
        if a > end + 1e-12 {
            break;
        }
        alphas.push(
            FractionalOrder::new(a.min(1.0))
                .map_err(|_| CliError::config(format!("alpha range: {a} is outside (0, 1]")))?,
        );
        k += 1;
    }

    let components = scenario.model.components();
    let mut csv = format!("alpha,{},distance,verdict,margin\n", components.join(","));
    for &alpha in alphas.iter() {
        let sweep_scenario = Scenario {
            alphas: vec![alpha],
            ..scenario.clone()
        };
        let (_, traj) = solve_all(&sweep_scenario)?.pop().expect("one run");
        let report = report_at(&scenario, alpha)?;
        let predicted = report.equilibria.predicted().to_vec();
        let analysis = report.predicted();
        // The angle-condition margin is defined whenever eigenvalues were
        // computed, even when the resolved verdict came from coefficients.
        let margin = analysis.verdict.margin.or(analysis.matignon.margin);
        csv.push_str(&alpha_label(alpha.value()));
        for v in traj.final_state() {
            csv.push(',');
            csv.push_str(&format_float(*v));
        }
        csv.push(',');
        csv.push_str(&format_float(distance_to(&traj, &predicted)));
        csv.push(',');
        csv.push_str(analysis.verdict.classification.as_str());
        csv.push(',');
        if let Some(m) = margin {
            csv.push_str(&format_float(m));
        }
        csv.push('\n');
    }

    match out {
        Some(dir) => write_text(&dir.join("sweep.csv"), &csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}
