//! `tilecross` command line: one subcommand per operation of the library.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when a solver stopped at
//! its ceiling or budget (the bounded verdict is still reported).

mod commands;
pub mod io;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use io::{graph_to_string, parse_graph, parse_tile, tile_to_string, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BOUNDED: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tilecross",
    version,
    about = "Tiles, cyclic closures and their crossing numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Write the machine-readable result to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Solver {
    /// Largest crossing count (or total weight) searched for.
    #[arg(long = "max-k", default_value_t = 8)]
    max_k: usize,
    /// Largest number of search nodes per solve.
    #[arg(long, default_value_t = 5_000_000)]
    budget: u64,
    /// Weight crossings by edge class with this beta (e.g. 0.5 or 1/3).
    #[arg(long)]
    beta: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a tile or graph file and print its size.
    Validate {
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Compose two tiles of equal width.
    Compose {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// The n-th power of a tile.
    Power {
        tile: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// The cyclic closure of the n-th power, with edge classes.
    Cyc {
        tile: PathBuf,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Weakly linked equivalent tile, path permutation and linking power.
    Reduce {
        tile: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Components of the linked power and their cyclic chains.
    Decompose {
        tile: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Exact crossing number of a graph.
    Cr {
        graph: PathBuf,
        /// Comma-separated edge ids that may not be crossed.
        #[arg(long, value_delimiter = ',')]
        uncrossable: Vec<usize>,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        output: Output,
    },
    /// c_n (closure) and t_n (tile drawing) of a tile.
    TileCr {
        tile: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        output: Output,
    },
    /// The constant ledger: n2, a0, the nearc overhead and N(eps).
    Constants {
        tile: PathBuf,
        #[arg(long)]
        eps: String,
        /// Also evaluate the lower-bound lemma for this alpha.
        #[arg(long)]
        alpha: Option<String>,
        /// Copies for the nearc overhead.
        #[arg(long, default_value_t = 1)]
        s: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Certified bounds on c(T) from c_n and t_n for n up to max-n.
    Estimate {
        tile: PathBuf,
        #[arg(long = "max-n")]
        max_n: usize,
        /// Start no new solve after this many seconds.
        #[arg(long = "budget-seconds")]
        budget_seconds: Option<f64>,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        output: Output,
    },
}

/// Runs the command line `args` (program name first), writing the summary
/// to `stdout` and diagnostics to `stderr`. Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match commands::dispatch(cli.command) {
        Ok(done) => {
            if let Some((path, text)) = &done.file {
                if let Err(e) = std::fs::write(path, text) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return EXIT_INVALID;
                }
            }
            let _ = write!(stdout, "{}", done.summary);
            done.code
        }
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INVALID
        }
    }
}
