//! The `schurcon` command line: deterministic, machine-readable access to
//! the distribution, the exact simulator, the exponent machinery, and the
//! protocol accounting.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage or input error,
//! 3 resource guard.

pub mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

#[derive(Parser, Debug)]
#[command(
    name = "schurcon",
    version,
    about = "Variable-size entanglement concentration: distributions, exact simulation, exponents, and protocol accounting"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Low,
    High,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    /// Comma-separated eigenvalues of the reduced state, e.g. 0.75,0.25
    #[arg(long)]
    pub spectrum: String,
    /// Rescale a spectrum whose sum is off by more than 1e-9
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this path instead of standard output
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Closed-form outcome distribution over diagrams
    Dist {
        #[command(flatten)]
        spectrum: SpectrumArgs,
        /// Number of copies
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact two-sided block measurement on the tensored input
    Simulate {
        #[command(flatten)]
        spectrum: SpectrumArgs,
        /// Number of copies (at most 6)
        #[arg(long)]
        n: usize,
        /// Also run the concentration and report Bell fidelities (qubits only)
        #[arg(long)]
        certify_bell: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sample insertion shapes and compare against the closed form
    Sample {
        #[command(flatten)]
        spectrum: SpectrumArgs,
        /// Number of copies per shot
        #[arg(long)]
        n: usize,
        /// Number of shots
        #[arg(long, default_value_t = 10_000)]
        shots: u64,
        /// Seed for the deterministic sample stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exponent curves (parametric, primal, random-coding) over a rate grid
    Exponent {
        #[command(flatten)]
        spectrum: SpectrumArgs,
        /// Grid start in bits (default 0)
        #[arg(long)]
        rate_min: Option<f64>,
        /// Grid end in bits (default log2 d)
        #[arg(long)]
        rate_max: Option<f64>,
        /// Number of grid intervals
        #[arg(long, default_value_t = 20)]
        steps: usize,
        /// Also estimate -(1/n) log2 of the exact tail at this copy count
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact tail sums of the outcome distribution over a rate grid
    Tail {
        #[command(flatten)]
        spectrum: SpectrumArgs,
        /// Number of copies
        #[arg(long)]
        n: usize,
        /// Which tail to sum
        #[arg(long, value_enum, default_value_t = SideArg::Low)]
        side: SideArg,
        /// Grid start in bits (default 0)
        #[arg(long)]
        rate_min: Option<f64>,
        /// Grid end in bits (default log2 d)
        #[arg(long)]
        rate_max: Option<f64>,
        /// Number of grid intervals
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Consistency checks; exit 1 when a check fails
    Check {
        #[command(subcommand)]
        which: CheckCommand,
    },
    /// Concentration yield table and mean ebits per copy
    Yield {
        #[command(flatten)]
        spectrum: SpectrumArgs,
        /// Number of copies
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Teleportation transcript over a perfect Bell pair
    Teleport {
        /// Bell size D (at most 32)
        #[arg(long)]
        bell_size: usize,
        /// Seed choosing the input state and measurement branch
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dense-coding transcript over a perfect Bell pair
    Densecode {
        /// Bell size D (at most 32)
        #[arg(long)]
        bell_size: usize,
        /// Seed for the decoding measurement stream
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Exact block-dimension identity: sum of dim U * dim V = d^n
    Dims {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dimension-entropy bound with the stated and derived coefficients
    Lemma3 {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Outcome probabilities sum to one at every copy count
    Completeness {
        #[command(flatten)]
        spectrum: SpectrumArgs,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// A finished command: rendered text plus the exit code to report.
pub struct CommandOutput {
    pub text: String,
    pub exit: i32,
    pub out_path: Option<std::path::PathBuf>,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Guard(_) => 3,
        Error::InvalidInput(_) | Error::DegenerateSpectrum | Error::UnsupportedDimension(_) => 2,
    }
}

/// Parses and runs, writing output to the chosen destination. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    match commands::dispatch(cli.command) {
        Ok(output) => {
            let write_result = match &output.out_path {
                Some(path) => std::fs::write(path, output.text.as_bytes()),
                None => std::io::stdout().write_all(output.text.as_bytes()),
            };
            if let Err(err) = write_result {
                eprintln!("error: cannot write output: {err}");
                return 2;
            }
            output.exit
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}
