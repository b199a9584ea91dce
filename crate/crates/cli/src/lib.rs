//! Command-line front end: `predict`, `construct`, `resolve`, `verify`,
//! `survey`.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical mismatch or
//! failed computation, 2 on usage and precondition errors.

mod commands;
mod survey;

use std::ffi::OsString;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::case_for;

#[derive(Debug, Parser)]
#[command(name = "trigonal", version, about = "Betti tables of trigonal curves on rational normal scrolls")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Predicted Betti table from the mapping cone and the closed formulas.
    Predict {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Sample a smooth curve and write its model file.
    Construct {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        field: FieldArgs,
        /// Output path; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Minimal free resolution of the curve ideal stored in a model file.
    Resolve {
        model: PathBuf,
        /// Use the elimination ideal instead of the fast-path generators.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Construct, resolve, compare with the prediction and test projective normality.
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        field: FieldArgs,
        /// Largest degree for the Hilbert function comparison.
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Symbolic checks over ranges of genera and twists.
    Survey {
        /// Genus range `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        g: RangeInclusive<i64>,
        /// Twist range `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<i64>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CaseArgs {
    /// Genus.
    #[arg(long)]
    pub g: i64,
    /// Twist: the curve is embedded by K_C - nT.
    #[arg(long)]
    pub n: i64,
    /// Maroni invariant; defaults to floor((g - 2) / 2).
    #[arg(long)]
    pub m: Option<i64>,
    /// Admit b = -1 and the undetermined very-ampleness case n = m, g < 3m + 3.
    #[arg(long)]
    pub allow_boundary: bool,
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Characteristic of the coefficient field.
    #[arg(long, default_value_t = 32003)]
    pub p: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |v: &str| v.trim().parse::<i64>().map_err(|_| format!("`{s}` is not a range `a..b`"));
    match s.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let mut out = Outcome::default();
    let result = match cli.command {
        Command::Predict { case, format } => commands::predict(&case, format, &mut out),
        Command::Construct { case, field, out: path } => commands::construct(&case, &field, path.as_deref(), &mut out),
        Command::Resolve { model, oracle, format } => commands::resolve(&model, oracle, format, &mut out),
        Command::Verify { case, field, m_max, oracle, format } => {
            commands::verify(&case, &field, m_max, oracle, format, &mut out)
        }
        Command::Survey { g, n, format } => survey::survey(g, n, format, &mut out),
    };
    match result {
        Ok(code) => out.code = code,
        Err(e) => {
            out.stderr.push_str(&format!("error: {e}\n"));
            out.code = e.code();
        }
    }
    out
}
