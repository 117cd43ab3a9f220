//! `bearing`: Laman tests, Henneberg generation and bearing rigidity from the shell.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or input error.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bearing_core::repro::Figure;
use bearing_core::TolPolicy;

pub use commands::{CliError, Verdict};

#[derive(Parser, Debug)]
#[command(
    name = "bearing",
    version,
    about = "Bearing rigidity and Laman graph toolkit"
)]
pub struct Cli {
    /// Absolute eigenvalue threshold for numerical rank (default: relative 100·dim·ε·λmax).
    #[arg(long, global = true, value_name = "FLOAT")]
    pub tol: Option<f64>,

    /// Suppress the JSON report on standard output.
    #[arg(long, short, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Pebble,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FigureArg {
    Fig1,
    Fig3,
    Fig5,
}

impl From<FigureArg> for Figure {
    fn from(f: FigureArg) -> Self {
        match f {
            FigureArg::Fig1 => Figure::Fig1,
            FigureArg::Fig3 => Figure::Fig3,
            FigureArg::Fig5 => Figure::Fig5,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check whether a graph is Laman (exit 0) or not (exit 1).
    Laman {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Grow a random Laman graph by Henneberg steps.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of an edge splitting (when one is possible) instead of a vertex addition.
        #[arg(long, default_value_t = 0.5)]
        op_mix: f64,
        #[arg(long)]
        out: PathBuf,
        /// Where to write the step trace.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Replay a Henneberg trace and report the resulting graph.
    Replay {
        trace: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bearing rigidity of a network: exit 0 rigid, 1 not rigid.
    Rigidity { network: PathBuf },
    /// Sample random configurations to test generic bearing rigidity.
    Generic {
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rebuild a worked example and write DOT files per panel.
    Repro {
        #[arg(value_enum)]
        figure: FigureArg,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a graph as Graphviz DOT.
    ExportDot {
        graph: PathBuf,
        /// Output file (standard output when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Cli {
    pub fn policy(&self) -> Result<TolPolicy, CliError> {
        match self.tol {
            None => Ok(TolPolicy::default()),
            Some(t) if t.is_finite() && t >= 0.0 => Ok(TolPolicy::absolute(t)),
            Some(t) => Err(CliError::Usage(format!(
                "--tol must be a finite non-negative number, got {t}"
            ))),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
