//! `fishburn`: count tables, series coefficients, verification runs and
//! reference reproductions.
//!
//! Exit codes: 0 success, 1 a checked assertion failed, 2 usage or input
//! error.

mod examples;
mod tables;
mod verify;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, out-of-bound sizes, unreadable input. Exit code 2.
    Usage(String),
    /// A verification assertion failed. Exit code 1.
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Source {
    Ascent,
    Matrices,
    Posets,
    Series,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MatrixClass {
    /// Proper members of M_n.
    Pm,
    /// Members of I_n.
    I,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Form {
    Product,
    Sum,
    Pt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Involution,
    Bijection,
    Conjecture,
    #[value(alias = "lemma31")]
    Composition,
    Counts,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Algorithm {
    Removal,
    Addition,
    Phi,
}

#[derive(Parser, Debug)]
#[command(
    name = "fishburn",
    version,
    about = "Exact counts and checks for (2+2)-free posets"
)]
struct Cli {
    /// Poset enumeration bound.
    #[arg(
        long,
        global = true,
        env = "FISHBURN_POSET_MAX_N",
        default_value_t = fishburn::posets::DEFAULT_MAX_POSET_N
    )]
    poset_max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the (n, k, count) triangle from one counting source.
    Table {
        #[arg(long, value_enum)]
        source: Source,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Matrix class counted by `--source matrices`.
        #[arg(long, value_enum, default_value = "pm")]
        class: MatrixClass,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Print series coefficients.
    Series {
        #[arg(long, value_enum, default_value = "product")]
        form: Form,
        #[arg(long, default_value_t = 12)]
        max_deg: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run a verification suite; JSON report on stdout.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        target: Target,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 12)]
        max_deg: usize,
    },
    /// Reproduce the embedded reference examples.
    Examples {
        /// Emit every intermediate matrix on stdout instead of the report.
        #[arg(long)]
        trace: bool,
    },
    /// Apply removal, addition or the involution to a matrix, printing every
    /// intermediate matrix.
    Trace {
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        /// Matrix text file; stdin when omitted or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Print only the final matrix.
        #[arg(long = "final-only")]
        final_only: bool,
    },
}

fn read_input(path: Option<&PathBuf>) -> CliResult<String> {
    let mut buf = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            buf = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(buf)
}

fn run(cli: Cli, out: &mut impl Write) -> CliResult<()> {
    let limits = tables::Limits {
        posets: cli.poset_max_n,
    };
    match cli.command {
        Command::Table {
            source,
            n_max,
            class,
            format,
        } => {
            let rows = tables::count_table(source, class, n_max, &limits)?;
            tables::write_counts(out, &rows, format)
        }
        Command::Series {
            form,
            max_deg,
            format,
        } => tables::write_series(out, form, max_deg, format),
        Command::Verify {
            target,
            n_max,
            max_deg,
        } => verify::run(out, target, n_max, max_deg, &limits),
        Command::Examples { trace } => examples::run(out, trace),
        Command::Trace {
            algorithm,
            input,
            final_only,
        } => {
            let text = read_input(input.as_ref())?;
            examples::trace(out, algorithm, &text, final_only)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out).and_then(|()| {
        out.flush()
            .map_err(|e| CliError::Usage(format!("write failed: {e}")))
    }) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Failed(m) => eprintln!("verification failed: {m}"),
            }
            ExitCode::from(e.code())
        }
    }
}

pub(crate) fn io_err(e: io::Error) -> CliError {
    CliError::Usage(format!("write failed: {e}"))
}
