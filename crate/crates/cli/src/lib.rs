//! `epi`: list, verify, scan and dump the e/π identity catalog.
//!
//! The binary is a thin wrapper over [`run`], which takes the argument list
//! and output streams explicitly.

mod commands;
mod dump;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable naming the default report directory.
pub const OUTPUT_DIR_ENV: &str = "EPI_OUTPUT_DIR";

/// Expected outcome for every identity checked.
pub const EXIT_OK: u8 = 0;
/// At least one verification missed its expected outcome.
pub const EXIT_FAILED: u8 = 1;
/// Bad arguments, unknown ids, empty ranges.
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "epi",
    version,
    about = "Verify identities linking e and pi to Pascal's and Lucas triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the identity catalog.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify one identity, or the whole catalog with --all.
    Verify {
        /// Identity id, e.g. thm2 or conj5.
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        /// Verify every default instance in the catalog
        #[arg(long)]
        all: bool,
        /// Polynomial argument x
        #[arg(long, allow_negative_numbers = true)]
        x: Option<i64>,
        /// Lucas index n
        #[arg(long)]
        n: Option<i64>,
        /// Row offset m
        #[arg(long)]
        m: Option<i64>,
        #[command(flatten)]
        config: Config,
    },
    /// Verify a family over an inclusive parameter range such as `--m 0..8`.
    Scan {
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        #[command(flatten)]
        config: Config,
    },
    /// Print triangles, polynomials or sequences.
    Dump {
        #[arg(value_enum, value_name = "KIND")]
        table: DumpKind,
        /// Last Pascal or Lucas triangle row to print.
        #[arg(long, default_value_t = 8)]
        rows: u32,
        /// Also print negative Pascal rows via C(-n, k) = (-1)^k C(n+k-1, k).
        #[arg(long)]
        negative: bool,
        /// Polynomial index.
        #[arg(long, default_value_t = 5)]
        k: u32,
        /// Sequence parameter.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        x: i64,
        /// First sequence index
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
        /// Last sequence index
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        to: i64,
        /// numerator or denominator sequence.
        #[arg(long = "kind", default_value = "numerator")]
        seq_kind: epi_core::exact::SeqKind,
        #[arg(long, value_enum, default_value_t = DumpFormat::Text)]
        format: DumpFormat,
    },
    /// Print the first terms of an identity exactly.
    Terms {
        id: String,
        /// Polynomial argument x
        #[arg(long, allow_negative_numbers = true)]
        x: Option<i64>,
        /// Lucas index n
        #[arg(long)]
        n: Option<i64>,
        /// Row offset m
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, default_value_t = 6)]
        count: u64,
    },
    /// Digits matched as the truncation depth grows.
    Converge {
        id: String,
        /// Polynomial argument x
        #[arg(long, allow_negative_numbers = true)]
        x: Option<i64>,
        /// Lucas index n
        #[arg(long)]
        n: Option<i64>,
        /// Row offset m
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(10..))]
        digits: u32,
        /// Comma-separated, strictly increasing depths.
        #[arg(long, value_delimiter = ',', default_values_t = [10u64, 20, 30, 40])]
        depths: Vec<u64>,
    },
}

#[derive(Args, Debug, Clone)]
struct Config {
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(10..))]
    digits: u32,
    /// Truncation depth K; defaults to each identity's own default.
    #[arg(long, value_parser = clap::value_parser!(u64).range(4..))]
    terms: Option<u64>,
    /// Digits required for a pass.
    #[arg(long)]
    threshold: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for persisted reports; falls back to EPI_OUTPUT_DIR.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Config {
    fn output_dir(&self) -> Option<PathBuf> {
        self.out.clone().or_else(|| {
            std::env::var_os(OUTPUT_DIR_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
        })
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Markdown,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum DumpFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
#[value(rename_all = "snake_case")]
enum DumpKind {
    Pascal,
    LucasTriangle,
    FibPoly,
    LucasPoly,
    Sequence,
}

/// Usage problems exit with 2, failed verifications with 1.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
    Runtime(String),
}

impl From<epi_core::Error> for Failure {
    fn from(e: epi_core::Error) -> Self {
        use epi_core::Error::*;
        match e {
            InvalidArgument(_)
            | UnknownConstant(_)
            | UnknownIdentity(_)
            | InvalidParams { .. }
            | TermOutOfDomain { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

/// Parse `args` (program name first), run the command and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match commands::run(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAILED,
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILED
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
