use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod bench;
mod commands;
mod tables;

/// Exit status: success or full agreement.
pub const EXIT_OK: u8 = 0;
/// Exit status: a cross-check found a disagreement.
pub const EXIT_DIVERGENCE: u8 = 1;
/// Exit status: bad arguments or configuration.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "partfn", version, about = "Exact partition numbers p(n), three ways")]
pub struct Cli {
    /// Text cache of p(0..) values, read before and updated after a run.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Non-recursive closed formula (gamma DP evaluator).
    Closed,
    /// Euler's pentagonal recurrence.
    Euler,
    /// Row sum of the counting classification oracle.
    Oracle,
    /// Closed formula with the literal nested-sum evaluator.
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Classification,
    ATable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableSource {
    Counting,
    Enumeration,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SModeArg {
    Floor,
    Ceil,
    Nearest,
}

impl From<SModeArg> for partfn::SMode {
    fn from(m: SModeArg) -> Self {
        match m {
            SModeArg::Floor => partfn::SMode::Floor,
            SModeArg::Ceil => partfn::SMode::Ceil,
            SModeArg::Nearest => partfn::SMode::Nearest,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print p(n).
    Compute {
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Print the classification table or the A-table for 1..=n_max.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = TableSource::Counting)]
        source: TableSource,
    },
    /// Compare the closed formula with the recurrence over lo..=hi.
    Verify {
        lo: usize,
        hi: usize,
        /// Also compare against the counting oracle, entry by entry.
        #[arg(long)]
        include_oracle: bool,
        #[arg(long, value_enum, default_value_t = SModeArg::Floor)]
        s_mode: SModeArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Print the per-beta breakdown of the closed formula at n.
    Trace {
        n: usize,
        #[arg(long, value_enum, default_value_t = SModeArg::Floor)]
        s_mode: SModeArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time each method over a geometric schedule of n, cross-checking values.
    Bench {
        n_max: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "euler,closed")]
        methods: Vec<Method>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match commands::run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code)
}
