use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qchar_core::characters::{CharacterCache, NVector};
use qchar_core::verify::{run_suite, SuiteOptions, SUITES};
use qchar_core::Error;

mod output;

#[derive(Parser, Debug)]
#[command(name = "qchar", version, about = "Graded characters of sl(r+1) fusion products and exact identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a graded character with its Schur expansion.
    Char(CharArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct CharArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
    rank: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    level: u32,
    /// Occupation numbers, comma separated per level and `;` between
    /// levels, e.g. `1,0;0,1`.
    #[arg(long, allow_hyphen_values = true)]
    n: String,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suite: String,
    /// Restrict the suite to one rank.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
    rank: Option<u32>,
    /// Size bound of the suite (degree, sigma, lemma size, ...).
    #[arg(long)]
    bound: Option<u32>,
    /// Series truncation order.
    #[arg(long)]
    order: Option<usize>,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args, Debug)]
struct Sink {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidNVector(_) | Error::InvalidPartition(_) | Error::UnknownSuite(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Char(args) => run_char(&args),
        Command::Verify(args) => run_verify(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn run_char(args: &CharArgs) -> Result<u8, Failure> {
    let n = NVector::parse(&args.n, args.rank as usize, args.level as usize)?;
    let character = CharacterCache::new(n.rank()).graded_character(&n)?;
    let text = output::character(&character, args.sink.format);
    emit(&args.sink, &text)?;
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let opts = SuiteOptions { rank: args.rank.map(|r| r as usize), bound: args.bound, order: args.order };
    let reports = run_suite(&args.suite, &opts)?;
    let text = output::reports(&args.suite, &reports, args.sink.format);
    emit(&args.sink, &text)?;
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { EXIT_CHECK_FAILED })
}

fn emit(sink: &Sink, text: &str) -> Result<(), Failure> {
    let written = match &sink.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}
