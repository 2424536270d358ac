//! `fracepi` — simulate the fractional SIS/SIRS epidemic models, analyze
//! the local stability of their equilibria, and reproduce the published
//! figure scenarios as CSV trajectories and SVG plots.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical failure.

use clap::{Parser, Subcommand};
use fracepi::{commands, CliError};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fracepi",
    version,
    about = "Caputo-order SIS/SIRS epidemic simulation and stability analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and write per-order trajectory files
    Simulate {
        /// Scenario JSON file
        scenario: PathBuf,
        /// Output directory
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Override the grid step
        #[arg(long)]
        h: Option<f64>,
        /// Override the horizon
        #[arg(long = "t-end")]
        t_end: Option<f64>,
        /// Output formats (csv, json, svg), overriding the scenario's list
        #[arg(long, value_delimiter = ',')]
        format: Option<Vec<String>>,
    },
    /// Print per-order stability reports as JSON on stdout
    Analyze {
        /// Scenario JSON file
        scenario: PathBuf,
    },
    /// Re-run one of the published figure scenarios (fig1..fig14)
    Reproduce {
        /// Figure id
        figure: String,
        /// Output directory
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Override the grid step
        #[arg(long)]
        h: Option<f64>,
        /// Override the horizon
        #[arg(long = "t-end")]
        t_end: Option<f64>,
    },
    /// Summarize convergence and verdicts over a range of orders
    SweepAlpha {
        /// Scenario JSON file
        scenario: PathBuf,
        /// First order in the range
        #[arg(long)]
        start: f64,
        /// Last order in the range
        #[arg(long)]
        end: f64,
        /// Range increment
        #[arg(long)]
        step: f64,
        /// Write sweep.csv here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Simulate {
            scenario,
            out,
            h,
            t_end,
            format,
        } => commands::cmd_simulate(&scenario, &out, h, t_end, format),
        Command::Analyze { scenario } => commands::cmd_analyze(&scenario),
        Command::Reproduce {
            figure,
            out,
            h,
            t_end,
        } => commands::cmd_reproduce(&figure, &out, h, t_end),
        Command::SweepAlpha {
            scenario,
            start,
            end,
            step,
            out,
        } => commands::cmd_sweep_alpha(&scenario, start, end, step, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
