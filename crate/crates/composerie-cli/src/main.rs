//! `composerie` — weighted composition counts from the command line.
//!
//! Subcommands: `table` (the C(n,k) triangle and row totals), `count` (one
//! value, by any of the four pipelines), `verify` (the full identity suite
//! for one family or all of them), and `bench` (naive vs squaring series
//! powers). Exit codes: 0 all checks pass, 1 an identity failed, 2 usage
//! or parse error.

mod commands;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use composerie::{FamilySpec, Integers, Modular, DEFAULT_ORACLE_MAX};
use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "composerie",
    version,
    about = "Count weighted integer compositions: recurrence, power series, closed formulas, oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the C(n,k) triangle and row totals for a family
    Table(TableArgs),
    /// Compute one count C(n,k), or the total C(n) when -k is omitted
    Count(CountArgs),
    /// Run the cross-validation identity suite
    Verify(VerifyArgs),
    /// Time naive vs squaring series powers (asserting equal results)
    Bench(BenchArgs),
}

/// Ring selector: `int` or `mod:p` with p >= 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RingChoice {
    Int,
    Mod(u64),
}

impl FromStr for RingChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "int" {
            return Ok(RingChoice::Int);
        }
        if let Some(p) = s.strip_prefix("mod:") {
            let p: u64 = p
                .parse()
                .map_err(|_| format!("ring `mod:p` needs an integer modulus, got `{p}`"))?;
            if p < 2 {
                return Err(format!("modulus must be at least 2, got {p}"));
            }
            return Ok(RingChoice::Mod(p));
        }
        Err(format!("unknown ring `{s}`; use `int` or `mod:p`"))
    }
}

impl fmt::Display for RingChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingChoice::Int => write!(f, "int"),
            RingChoice::Mod(p) => write!(f, "mod:{p}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Pipeline {
    /// Dynamic programming over the recurrence
    Rec,
    /// Coefficient of the k-th series power
    Gf,
    /// Exhaustive enumeration (bounded by --oracle-max)
    Oracle,
    /// The family's closed formula
    Closed,
}

fn parse_family(s: &str) -> Result<FamilySpec, String> {
    s.parse::<FamilySpec>().map_err(|e| e.to_string())
}

#[derive(Args)]
struct TableArgs {
    /// Family spec, e.g. all-ones, no-part:2, explicit:1,2;tail=0
    #[arg(long, value_parser = parse_family)]
    family: FamilySpec,
    #[arg(long)]
    max_n: u64,
    /// Ring to compute in: int or mod:p
    #[arg(long, default_value = "int")]
    ring: RingChoice,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilySpec,
    #[arg(short, long)]
    n: u64,
    /// Number of parts; omit for the total over all k
    #[arg(short, long)]
    k: Option<u64>,
    /// Pipelines to run (repeatable); all requested pipelines must agree
    #[arg(long = "pipeline", value_enum, default_values_t = vec![Pipeline::Gf])]
    pipelines: Vec<Pipeline>,
    #[arg(long, default_value = "int")]
    ring: RingChoice,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Largest n the oracle pipeline will enumerate
    #[arg(long, env = "COMPOSERIE_ORACLE_MAX", default_value_t = DEFAULT_ORACLE_MAX)]
    oracle_max: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify a single family
    #[arg(long, value_parser = parse_family, conflicts_with = "all", required_unless_present = "all")]
    family: Option<FamilySpec>,
    /// Verify the whole built-in family suite
    #[arg(long)]
    all: bool,
    #[arg(long)]
    max_n: u64,
    #[arg(long, default_value = "int")]
    ring: RingChoice,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    #[arg(long, env = "COMPOSERIE_ORACLE_MAX", default_value_t = DEFAULT_ORACLE_MAX)]
    oracle_max: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Weight family supplying the series coefficients
    #[arg(long, value_parser = parse_family, default_value = "all-ones")]
    family: FamilySpec,
    /// Truncation order(s) to benchmark (repeatable)
    #[arg(long = "order", default_values_t = vec![256usize])]
    orders: Vec<usize>,
    /// Power(s) k to benchmark (repeatable)
    #[arg(long = "power", default_values_t = vec![32u64])]
    powers: Vec<u64>,
    /// Modulus for the mod-p half of the comparison
    #[arg(long, default_value_t = 2_147_483_647)]
    modulus: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

/// Command failure, carrying the exit code mandated for its kind.
pub enum CmdError {
    /// Bad usage or unparsable input: exit 2.
    Usage(String),
    /// An identity or cross-check failed: exit 1.
    Failure(String),
}

pub type CmdResult = Result<(), CmdError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => match args.ring {
            RingChoice::Int => {
                commands::table(&Integers, &args.family, args.max_n, args.ring, args.format)
            }
            RingChoice::Mod(p) => commands::table(
                &Modular::new(p),
                &args.family,
                args.max_n,
                args.ring,
                args.format,
            ),
        },
        Command::Count(args) => match args.ring {
            RingChoice::Int => commands::count(&Integers, &args),
            RingChoice::Mod(p) => commands::count(&Modular::new(p), &args),
        },
        Command::Verify(args) => match args.ring {
            RingChoice::Int => commands::verify(&Integers, &args),
            RingChoice::Mod(p) => commands::verify(&Modular::new(p), &args),
        },
        Command::Bench(args) => commands::bench(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Failure(msg)) => {
            eprintln!("composerie: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("composerie: {msg}");
            ExitCode::from(2)
        }
    }
}
