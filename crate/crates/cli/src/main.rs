//! `freiman`: command-line front end for freiman-core.
//!
//! Exit status: 0 when every check passes, 2 when a counterexample was found
//! (reports are still written), 1 on usage, parse or capacity errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use freiman_core::IntSet;

#[derive(Parser, Debug)]
#[command(name = "freiman", version, about = "Integer sets of small doubling: volumes, chains, search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Doubling profile (c, b) and mu(k, T).
    Mu {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// Relation rank and additive dimension.
    Dim {
        #[arg(long)]
        set: IntSet,
    },
    /// Stable decomposition A1 ∘ P ∘ A2.
    Decompose {
        #[arg(long)]
        set: IntSet,
    },
    /// Chain recognition with a certificate.
    ChainCheck {
        #[arg(long)]
        set: IntSet,
    },
    /// All canonical chains of size k, one JSON record per line.
    ChainEnum {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Peels operator steps down to a small-doubling base.
    Factorize {
        #[arg(long)]
        set: IntSet,
    },
    /// Freiman isomorphism test.
    Fiso {
        #[arg(long)]
        a: IntSet,
        #[arg(long)]
        b: IntSet,
    },
    /// Exhaustive one-dimensional volume search.
    Search(SearchArgs),
    /// Conjecture sweep, extension rules, chain factorization and growth checks for one k.
    Verify {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        run: RunArgs,
        /// Directory receiving the detailed reports.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    k: usize,
    /// Single doubling; all legal values when omitted.
    #[arg(long)]
    t: Option<usize>,
    /// Largest element searched; defaults to mu(k, T) + k.
    #[arg(long)]
    bound: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug, Clone)]
struct RunArgs {
    #[arg(long)]
    threads: Option<usize>,
    /// Run sweeps beyond the candidate budget.
    #[arg(long)]
    force: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Jsonl,
}

/// Whether a command ran cleanly or found something the theory forbids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Counterexample) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
