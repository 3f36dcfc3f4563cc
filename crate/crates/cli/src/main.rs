//! `hookseries`: batch front end for Hilbert series of hook Schur rings,
//! hook partition counts, hook Schur polynomials and the identity checks.
//!
//! Exit codes: 0 on success, 1 when a verified identity fails, 2 on a usage
//! error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hookseries::{Partition, DEFAULT_ORDER};

mod commands;

#[derive(Debug, Parser)]
#[command(name = "hookseries", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert series of the (k, l) hook Schur ring, truncated at t^N.
    Hilbert(HilbertArgs),
    /// Count (or list) the partitions of n that fit in the (k, l)-hook.
    Count(CountArgs),
    /// Expand the hook Schur polynomial HS_λ(x_1..x_k; y_1..y_l).
    Hookschur(HookschurArgs),
    /// Check identities over a range of parameters.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'l')]
    pub l: usize,
    /// Truncation order.
    #[arg(short = 'N', default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'l')]
    pub l: usize,
    /// Print the partitions themselves, largest first.
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct HookschurArgs {
    /// Weakly decreasing parts, comma separated, e.g. 3,1,1.
    #[arg(short = 'p', value_parser = parse_partition, allow_hyphen_values = true)]
    pub partition: Partition,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'l')]
    pub l: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: hookseries::Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Lemma,
    Theorem,
    Tbinomial,
    Vandermonde,
    Intermediate,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 5)]
    pub max_k: usize,
    #[arg(long, default_value_t = 5)]
    pub max_l: usize,
    /// Truncation order for series comparisons.
    #[arg(short = 'N', default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

/// 0 when everything passed, 1 when a gating identity check failed, 2 for
/// usage errors.
fn exit_status(out: &Result<commands::Output, String>) -> u8 {
    match out {
        Ok(out) if out.ok => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Hilbert(args) => Ok(commands::hilbert(&args)),
        Command::Count(args) => Ok(commands::count(&args)),
        Command::Hookschur(args) => Ok(commands::hookschur(&args)),
        Command::Verify(args) => commands::verify(&args),
    };
    let status = exit_status(&out);
    match out {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() || stdout.flush().is_err() {
                return ExitCode::FAILURE;
            }
            for note in &out.notes {
                eprintln!("note: {note}");
            }
        }
        Err(msg) => eprintln!("error: {msg}"),
    }
    ExitCode::from(status)
}
