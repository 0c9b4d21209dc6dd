//! `eigloc`: eigenvalue inclusion regions for stochastic matrices and spectral
//! bounds for Randić matrices, from the command line.
//!
//! Exit codes: 0 on success, 1 on a numerical or internal failure, 2 on bad
//! input (unreadable or malformed file, failed validation).

mod commands;
mod num;
mod svg;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eigloc::{parse_edge_list, parse_matrix, validate_stochastic, StochasticMatrix, DEFAULT_ROW_SUM_TOL};

#[derive(Parser)]
#[command(name = "eigloc", version, about = "Eigenvalue localization for stochastic matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inclusion region of a stochastic matrix, with the classic single discs.
    Localize(RunArgs),
    /// Spectral bounds for the Randić matrix of a graph given as an edge list.
    Randic(RunArgs),
    /// Compare each deflated region with the classic single discs.
    Compare(RunArgs),
    /// Draw the deflated regions as SVG.
    Plot(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Matrix file (localize, compare, plot) or edge list (randic).
    #[arg(long)]
    input: PathBuf,
    /// Output format; defaults to svg for `plot` and text otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Also compute eigenvalues with the built-in solver and check them.
    #[arg(long)]
    with_eigs: bool,
    /// Allowed deviation of each row sum from 1.
    #[arg(long, default_value_t = DEFAULT_ROW_SUM_TOL)]
    row_sum_tol: f64,
    /// Slack for region membership and tightness checks.
    #[arg(long, default_value_t = 1e-8)]
    slack: f64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subcmd {
    Localize,
    Randic,
    Compare,
    Plot,
}

/// Resolved settings for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub subcommand: Subcmd,
    pub input_path: PathBuf,
    pub format: Format,
    pub with_eigs: bool,
    pub row_sum_tol: f64,
    pub slack: f64,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn from_cli(cli: Cli) -> Self {
        let (subcommand, args) = match cli.command {
            Command::Localize(a) => (Subcmd::Localize, a),
            Command::Randic(a) => (Subcmd::Randic, a),
            Command::Compare(a) => (Subcmd::Compare, a),
            Command::Plot(a) => (Subcmd::Plot, a),
        };
        let default_format = if subcommand == Subcmd::Plot {
            Format::Svg
        } else {
            Format::Text
        };
        RunConfig {
            subcommand,
            input_path: args.input,
            format: args.format.unwrap_or(default_format),
            with_eigs: args.with_eigs,
            row_sum_tol: args.row_sum_tol,
            slack: args.slack,
            out: args.out,
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Numeric(String),
}

impl From<eigloc::Error> for Failure {
    fn from(e: eigloc::Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Numeric(e.to_string())
        }
    }
}

fn load_matrix(cfg: &RunConfig) -> Result<StochasticMatrix, Failure> {
    if !(cfg.row_sum_tol >= 0.0 && cfg.row_sum_tol.is_finite()) {
        return Err(Failure::Input("--row-sum-tol must be a non-negative number".into()));
    }
    let text = read_input(cfg)?;
    let m = parse_matrix(&text).map_err(|e| with_path(cfg, e))?;
    Ok(validate_stochastic(m, cfg.row_sum_tol)?)
}

fn read_input(cfg: &RunConfig) -> Result<String, Failure> {
    fs::read_to_string(&cfg.input_path)
        .map_err(|e| Failure::Input(format!("{}: {e}", cfg.input_path.display())))
}

fn with_path(cfg: &RunConfig, e: eigloc::Error) -> Failure {
    Failure::Input(format!("{}: {e}", cfg.input_path.display()))
}

fn run(cfg: &RunConfig) -> Result<(), Failure> {
    if !(cfg.slack >= 0.0 && cfg.slack.is_finite()) {
        return Err(Failure::Input("--slack must be a non-negative number".into()));
    }
    let output = match cfg.subcommand {
        Subcmd::Localize => commands::localize(&load_matrix(cfg)?, cfg)?,
        Subcmd::Compare => commands::compare(&load_matrix(cfg)?, cfg)?,
        Subcmd::Plot => commands::plot(&load_matrix(cfg)?, cfg)?,
        Subcmd::Randic => {
            let g = parse_edge_list(&read_input(cfg)?).map_err(|e| with_path(cfg, e))?;
            commands::randic(&g, cfg)?
        }
    };
    if cfg.format != Format::Text {
        for w in &output.warnings {
            eprintln!("{w}");
        }
    }
    let written = match &cfg.out {
        Some(path) => fs::write(path, output.body.as_bytes()),
        None => io::stdout().lock().write_all(output.body.as_bytes()),
    };
    written.map_err(|e| Failure::Numeric(format!("writing output: {e}")))
}

fn main() -> ExitCode {
    let cfg = RunConfig::from_cli(Cli::parse());
    match run(&cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
