/// `println!` that exits quietly when stdout is a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {
        $crate::emit(format_args!($($arg)*))
    };
}

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stseq::Error;

#[derive(Parser, Debug)]
#[command(name = "stseq", version, about = "Good point sequencings of Steiner triple systems")]
struct Cli {
    /// Directory holding vendored listings such as sts15.txt.
    #[arg(long, global = true, env = "STSEQ_DATA_DIR")]
    data_dir: Option<PathBuf>,
    /// Ledger file that search results are appended to.
    #[arg(long, global = true)]
    ledger: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a sequencing against a system.
    Verify(VerifyArgs),
    /// Build a sequencing by one of the direct constructions.
    Construct(ConstructArgs),
    /// Backtracking search for one (ell, mode) pair.
    Search(SearchArgs),
    /// Largest ell reachable in each mode.
    Best(BestArgs),
    /// Run a search task over many systems, resumably.
    Batch(BatchArgs),
    /// Write a system file from starter blocks or at random.
    Gen(GenArgs),
    /// Re-verify a stored table of results.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `builtin:ID` or a system file.
    #[arg(long)]
    sts: String,
    #[arg(long)]
    seq: String,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    cyclic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Colbourn,
    Independent,
    ColourClasses,
    FiveGood,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long)]
    sts: String,
    #[arg(long, value_enum)]
    method: Method,
    /// Required by colour-classes; the other methods have a fixed ell.
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    cyclic: bool,
    /// Write the construction trace here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Colour classes, one per line, instead of searching for a colouring.
    #[arg(long)]
    colouring: Option<PathBuf>,
    /// Node budget for the search fallback of five-good.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    sts: String,
    #[arg(long)]
    ell: usize,
    #[arg(long)]
    cyclic: bool,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Stop after this many seconds, reporting BUDGET.
    #[arg(long)]
    wall_clock: Option<f64>,
}

#[derive(Args, Debug)]
struct BestArgs {
    #[arg(long)]
    sts: String,
    /// Node budget per level and mode.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// Number of random systems, seeded from --seed upwards.
    #[arg(long, requires = "v", conflicts_with = "sts")]
    random: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    /// Comma-separated catalog ids or system files.
    #[arg(long, value_delimiter = ',', required_unless_present = "random")]
    sts: Vec<String>,
    /// `MODE:ELLS`, e.g. `cyclic:6`, `linear:4-6`, `both:5`.
    #[arg(long)]
    task: String,
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Starter blocks, e.g. `0,1,4;0,2,9;0,5,11`.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    starters: Option<String>,
    #[arg(long)]
    random: bool,
    #[arg(long)]
    v: usize,
    /// Add the short orbit {0, v/3, 2v/3}.
    #[arg(long)]
    short_orbit: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    Sts15,
    Sts13,
    ASeries,
    CSeries,
    Bounds,
}

#[derive(Args, Debug)]
struct ReproduceArgs {
    #[arg(long, value_enum)]
    table: Table,
}

/// Why a command did not succeed; maps onto the exit status.
#[derive(Debug)]
enum Failure {
    /// The inputs were fine but the answer is negative (exit 1).
    Semantic(String),
    /// Bad input, configuration or I/O (exit 2).
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PreconditionFailed(_)
            | Error::ClassTooSmall { .. }
            | Error::UnhandledProfile(_)
            | Error::NotThreeChromatic
            | Error::StuckChoice { .. }
            | Error::VerificationFailed(_) => Failure::Semantic(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn emit(args: std::fmt::Arguments<'_>) {
    use std::io::Write;
    if let Err(e) = writeln!(std::io::stdout().lock(), "{args}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("failed writing to stdout: {e}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Semantic(msg)) => {
            eprintln!("stseq: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("stseq: error: {msg}");
            ExitCode::from(2)
        }
    }
}
