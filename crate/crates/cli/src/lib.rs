//! Command-line front end for the `frobenius` crate.
//!
//! [`run`] is the whole program minus process exit, so tests can drive it
//! with in-memory streams.

pub mod commands;
pub mod error;
pub mod instance;
pub mod render;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frobenius::Int;

pub use error::{CliError, ExitCode};
pub use instance::{Family, Instance};
pub use render::Format;
pub use sweep::{ParamRange, Summary, SweepConfig, VerifyRecord};

#[derive(Debug, Parser)]
#[command(name = "frobenius", version, about = "Frobenius numbers, genus and pseudo-Frobenius sets of numerical semigroups")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Largest least generator for which the shortest-path oracle runs
    /// [default: 100000].
    #[arg(long, global = true, value_name = "N")]
    pub oracle_limit: Option<Int>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of explicit generators or of a named family member.
    Compute(ComputeArgs),
    /// Compare closed forms with the oracle over a parameter grid.
    Verify(VerifyArgs),
    /// Greedy presentations over (1, 3, ..., 2^k - 1) for M = 0..=max.
    Table(TableArgs),
    /// Decide whether greedy change-making is optimal for a coin system.
    Orderly(OrderlyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum SourceChoice {
    /// Closed form when its hypotheses hold, otherwise the oracle.
    #[default]
    Auto,
    Oracle,
    Closed,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["gens", "family"]))]
pub struct ComputeArgs {
    /// Comma-separated generators, e.g. 3,7.
    #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true)]
    pub gens: Option<Vec<Int>>,

    #[arg(long, value_enum)]
    pub family: Option<Family>,

    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<Int>,
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<Int>,
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<Int>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<Int>,
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<Int>,

    /// Include the pseudo-Frobenius set even when it takes an oracle run.
    #[arg(long)]
    pub pf: bool,

    /// Include the list of gaps.
    #[arg(long)]
    pub gaps: bool,

    /// Include the Apéry set with respect to the least generator.
    #[arg(long)]
    pub apery: bool,

    #[arg(long, value_enum, default_value_t)]
    pub source: SourceChoice,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// TOML sweep description; flags given here override it.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[arg(long, value_enum)]
    pub family: Option<Family>,

    /// Ranges as N, LO..HI or LO..=HI (inclusive).
    #[arg(long, value_name = "RANGE")]
    pub a: Option<ParamRange>,
    #[arg(long, value_name = "RANGE")]
    pub d: Option<ParamRange>,
    #[arg(long, value_name = "RANGE")]
    pub k: Option<ParamRange>,
    #[arg(long, value_name = "RANGE")]
    pub m: Option<ParamRange>,
    #[arg(long, value_name = "RANGE")]
    pub n: Option<ParamRange>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 4)]
    pub k: usize,

    #[arg(long, value_name = "M_MAX")]
    pub max: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Method {
    Onepoint,
    Exhaustive,
    #[default]
    Both,
}

#[derive(Debug, Args)]
pub struct OrderlyArgs {
    /// Comma-separated denominations starting at 1, e.g. 1,5,16.
    #[arg(value_delimiter = ',', required = true)]
    pub denominations: Vec<u64>,

    #[arg(long, value_enum, default_value_t)]
    pub method: Method,

    /// Largest amount for exhaustive checking [default: b_{k-1} + b_k, which
    /// is complete].
    #[arg(long)]
    pub bound: Option<u64>,
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Errors go to `err` as a JSON object.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    ExitCode::Success.code()
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    ExitCode::Usage.code()
                }
            };
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(code) => code.code(),
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_json());
            e.exit.code()
        }
    }
}
