//! Command-line driver: builds constructions, runs the verifiers and
//! solvers on graph files, and keeps a JSON-lines catalog of experiments.

mod catalog;
mod commands;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use catalog::{digest_file, read_catalog, ExperimentRecord, FileDigest};
pub use output::{Format, Record};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] mct_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("catalog: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 2 for problems with the invocation or its inputs, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        use mct_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Core(
                E::InvalidParameter(_)
                | E::InvalidContraction { .. }
                | E::InvalidPartition(_)
                | E::InvalidPattern(_)
                | E::NTooSmall { .. }
                | E::InvalidQuery(_)
                | E::Parse { .. },
            ) => 2,
            CliError::Core(_) | CliError::Json(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "mct", version, about = "Multicolor Turán experiments on small graphs")]
pub struct Cli {
    /// Output format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Append one experiment record per command to this JSON-lines file.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    /// Seed for randomized operations (required by those operations).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named construction and write it with a certificate sidecar.
    Construct(ConstructArgs),
    /// Run checks on a colored graph file.
    Verify(VerifyArgs),
    /// Integral and fractional packing number of a pattern in a host file.
    Pack(PackArgs),
    /// Exact multicolor number by exhaustive search.
    Oracle(OracleArgs),
    /// Render a catalog as a table.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionName {
    PrimeBlowup,
    CycleBlowup,
    Ruzsa,
    Theorem1,
    ErBlowup,
    AvoidingSet,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub name: ConstructionName,
    /// Cycle length or equation arity.
    #[arg(long)]
    pub k: Option<usize>,
    /// Blow-up factor.
    #[arg(long)]
    pub t: Option<usize>,
    /// Prime blow-up factor.
    #[arg(long)]
    pub s: Option<usize>,
    /// Range bound of the avoiding set.
    #[arg(long = "N")]
    pub bound: Option<usize>,
    /// Field order.
    #[arg(long)]
    pub q: Option<usize>,
    /// Number of host vertices.
    #[arg(long)]
    pub n: Option<usize>,
    /// Pattern name (C3..C9, K3..K5, P2..P9) or graph file.
    #[arg(long)]
    pub pattern: Option<String>,
    #[arg(long)]
    pub u: Option<usize>,
    #[arg(long)]
    pub v: Option<usize>,
    /// Output file; the certificate goes to `<out>.cert`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Packing,
    Certificate,
    Rainbow,
    Census,
    Cherries,
    Lemma53,
    Witness,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    /// Pattern of the color classes.
    #[arg(long)]
    pub pattern: String,
    /// Graph that must have no rainbow copy.
    #[arg(long)]
    pub forbidden: Option<String>,
    /// Checks to run; defaults to packing, plus rainbow with --forbidden
    /// and certificate when a sidecar exists.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<Check>,
    /// Partition samples for the witness check.
    #[arg(long, default_value_t = mct_core::verify::WITNESS_MAX_TRIES)]
    pub max_tries: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PackMode {
    Integral,
    Fractional,
    Both,
}

#[derive(Debug, Args)]
pub struct PackArgs {
    /// Host graph file (plain or colored).
    pub input: PathBuf,
    #[arg(long)]
    pub pattern: String,
    #[arg(long, value_enum, default_value_t = PackMode::Both)]
    pub mode: PackMode,
    #[arg(long)]
    pub limit_copies: Option<usize>,
    #[arg(long)]
    pub limit_nodes: Option<u64>,
    /// Write the optimal integral packing as a colored graph.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub n: usize,
    /// Pattern of the monochromatic copies.
    #[arg(long)]
    pub pattern: String,
    /// Graph with no rainbow copy.
    #[arg(long)]
    pub forbidden: String,
    /// Largest accepted n (default 9 for C3, 8 otherwise).
    #[arg(long)]
    pub limit_n: Option<usize>,
    #[arg(long)]
    pub limit_copies: Option<usize>,
    /// Write the optimal witness and its certificate.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    pub catalog_file: PathBuf,
}

/// Runs one command: prints its records, appends to the catalog, and
/// returns whether every check passed.
pub fn run(cli: &Cli) -> Result<bool> {
    commands::run(cli)
}
