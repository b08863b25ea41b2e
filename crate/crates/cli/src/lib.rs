//! The `zassenhaus` command-line tool: compute, render, cache and verify
//! the exponents `W_k` of
//! `exp(X1 + ... + Xn) = exp(X1) ... exp(Xn) exp(W2) exp(W3) ...`.

pub mod cache;
pub mod commands;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use zassenhaus_core::freealg::AlgebraError;
use zassenhaus_core::oracle::OracleError;
use zassenhaus_core::zassenhaus::EngineError;

use cache::CacheError;

/// Version tag embedded in every JSON document the tool prints.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zassenhaus",
    version,
    about = "Exponents of the multivariable Zassenhaus formula"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print W_2..W_K.
    Terms(TermsArgs),
    /// Check W_2..W_K against independent oracles; prints a JSON report.
    Verify(VerifyArgs),
    /// Print f_{1,k}.
    F1k(F1kArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathArg {
    Generic,
    Expanded,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Assoc,
    Comm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Numeric,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum F1kPath {
    Comm,
    Direct,
    Both,
}

#[derive(Debug, clap::Args)]
pub struct TermsArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 6)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = PathArg::Generic)]
    pub path: PathArg,
    #[arg(long, value_enum, default_value_t = Form::Assoc)]
    pub form: Form,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Cache root; defaults to $ZASSENHAUS_CACHE_DIR when set.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 6)]
    pub max_degree: usize,
    #[arg(long, value_enum, default_value_t = Mode::All)]
    pub mode: Mode,
    /// Matrix dimension for the numeric check.
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Step sizes for the numeric check, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.2, 0.1])]
    pub t: Vec<f64>,
}

#[derive(Debug, clap::Args)]
pub struct F1kArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = F1kPath::Both)]
    pub path: F1kPath,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant(_) => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::InvalidContext { .. }
            | AlgebraError::LetterOutOfRange { .. }
            | AlgebraError::DegreeOverflow { .. } => CliError::Usage(e.to_string()),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::InvalidArgument(_) | EngineError::DegreeOverflow { .. } => {
                CliError::Usage(e.to_string())
            }
            EngineError::Algebra(inner) => inner.into(),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::InvalidArgument(message) => CliError::Usage(message),
            OracleError::Algebra(inner) => inner.into(),
            OracleError::Engine(inner) => inner.into(),
        }
    }
}

/// What a successful command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    /// False when a verification ran and failed.
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VERIFICATION_FAILED
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Terms(args) => commands::cmd_terms(args),
        Command::Verify(args) => commands::cmd_verify(args),
        Command::F1k(args) => commands::cmd_f1k(args),
    }
}
