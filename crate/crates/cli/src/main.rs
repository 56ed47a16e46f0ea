//! `k3aut` — exact computation of root classes, Kähler-cone chambers,
//! discriminant gluing data, and automorphism groups for rank-2 even
//! lattices, with a verification harness for every documented claim.

mod commands;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "k3aut",
    version,
    about = "Automorphism groups of K3 surfaces with rank-2 even Néron–Severi lattices, in exact arithmetic"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: roots, chamber, gluing, and the automorphism group.
    Compute(ComputeArgs),
    /// Re-check every documented claim; prints PASS/DISCREPANCY/FAIL lines.
    #[command(name = "verify-paper")]
    VerifyPaper(VerifyArgs),
    /// Brute-force isometry scan, each entry matched to a generator word.
    Oracle(OracleArgs),
    /// Solve x² − D·y² = N in integers, exactly.
    Pell(PellArgs),
}

/// Lattice selection shared by `compute` and `oracle`: either a documented
/// family with its parameter, or an explicit Gram triple.
#[derive(Args)]
pub struct FormArgs {
    /// Lattice family (requires --d).
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Family parameter: an odd integer ≥ 3.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    /// Gram matrix as g00,g01,g11 (diagonal entries must be even).
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["family", "d"])]
    gram: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum Family {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "M", alias = "m")]
    M,
}

#[derive(Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    form: FormArgs,
    /// Word-collision certificate depth (default 8; env K3AUT_DEPTH).
    #[arg(long)]
    depth: Option<u32>,
    /// Enumeration bound for root and isotropic classes.
    #[arg(long, default_value_t = k3aut::aut::DEFAULT_ROOT_BOUND)]
    root_bound: i64,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Case selector: l3, ld:<d>, md:<d> with d in {3,5,7}, or all.
    #[arg(long, default_value = "all")]
    case: String,
}

#[derive(Args)]
pub struct OracleArgs {
    #[command(flatten)]
    form: FormArgs,
    /// Entry bound for the scan (≥ 0).
    #[arg(long, default_value_t = 30)]
    bound: i64,
}

#[derive(Args)]
pub struct PellArgs {
    /// Radicand D: a positive non-square integer.
    #[arg(long = "D", allow_hyphen_values = true)]
    d: i64,
    /// Right-hand side N: one of 1, -1, 4, -4.
    #[arg(long = "N", allow_hyphen_values = true)]
    n: i64,
    /// Number of solutions to list from the stream.
    #[arg(long, default_value_t = 1)]
    count: usize,
}

/// Errors carry their process exit code: 2 for invalid input, 3 for a
/// structurally valid but unsupported lattice, 1 for I/O trouble.
pub enum CliError {
    Invalid(String),
    Unsupported(String),
    Failure(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Failure(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Unsupported(m) | CliError::Failure(m) => m,
        }
    }
}

/// Map library errors onto the exit-code contract: parity and signature
/// problems are "unsupported form", everything else is invalid input.
pub fn form_error(e: k3aut::Error) -> CliError {
    match e {
        k3aut::Error::OddDiagonal(_)
        | k3aut::Error::DegenerateForm
        | k3aut::Error::NotHyperbolic { .. } => CliError::Unsupported(e.to_string()),
        other => CliError::Invalid(other.to_string()),
    }
}

/// A rendered command: the text to emit and the process exit code.
pub struct RunOutput {
    pub text: String,
    pub exit: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compute(args) => commands::compute(args, cli.format),
        Command::VerifyPaper(args) => verify::run(args, cli.format),
        Command::Oracle(args) => commands::oracle(args, cli.format),
        Command::Pell(args) => commands::pell(args, cli.format),
    };
    let output = match outcome {
        Ok(output) => output,
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.code());
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &output.text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    } else {
        print!("{}", output.text);
    }
    ExitCode::from(output.exit)
}
