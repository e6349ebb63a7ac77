mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homnerve::{CoefficientSpec, Error};
use num_rational::BigRational;

/// Homology, nerves and nerve-theorem checks on finite simplicial complexes.
///
/// Reports are written to stdout as JSON; a short summary goes to stderr.
/// Exit codes: 0 pass, 1 property failure, 2 input error, 3 invalid cover,
/// 4 theorem falsified.
#[derive(Parser, Debug)]
#[command(name = "homnerve", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology of a complex file.
    Homology {
        complex: PathBuf,
        /// Coefficients: z, q or p:<prime>.
        #[arg(long, default_value = "z")]
        coeff: CoefficientSpec,
        /// Report reduced homology.
        #[arg(long)]
        reduced: bool,
    },
    /// Nerve of a cover file, written as a complex file.
    Nerve {
        cover: PathBuf,
        /// Truncate the nerve above this dimension.
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Vietoris-Rips complex of a points file, with its integral homology.
    Rips {
        points: PathBuf,
        /// Scale: simplices have all pairwise distances strictly below r.
        #[arg(long, value_parser = input::positive_rational)]
        r: BigRational,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Check a property of a cover.
    Check {
        cover: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Theorem)]
        mode: Mode,
        /// Connectivity level for theorem mode and degree bound for gmap.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Coefficients for prop1, collapse, dowker and gmap (collapse needs a field).
        #[arg(long)]
        coeff: Option<CoefficientSpec>,
        /// In theorem mode, replay the proof steps and include them in the report.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Theorem,
    Prop1,
    Collapse,
    Dowker,
    Gmap,
}

/// A failed command: exit code plus message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Uncovered(_) | Error::NotSubcomplex { .. } => 3,
            Error::TheoremFalsified { .. } => 4,
            _ => 2,
        };
        let mut message = e.to_string();
        if let Error::Uncovered(missing) = &e {
            for s in missing {
                message.push_str(&format!("\n  uncovered: {s}"));
            }
        }
        Failure { code, message }
    }
}

/// Outcome of a command that ran to completion.
pub struct Report {
    /// Pretty-printed JSON, fields in declaration order.
    pub json: String,
    pub summary: String,
    pub passed: bool,
}

impl Report {
    pub fn new(doc: &impl serde::Serialize, summary: String, passed: bool) -> Self {
        let json = serde_json::to_string_pretty(doc).expect("report serializes");
        Report { json, summary, passed }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Homology { complex, coeff, reduced } => commands::homology(&complex, coeff, reduced),
        Command::Nerve { cover, max_dim } => commands::nerve(&cover, max_dim),
        Command::Rips { points, r, max_dim } => commands::rips(&points, &r, max_dim),
        Command::Check { cover, mode, k, coeff, trace } => commands::check(&cover, mode, k, coeff, trace),
    };
    match result {
        Ok(report) => {
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", report.json);
            eprintln!("{}", report.summary);
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
