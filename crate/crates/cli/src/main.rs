//! `maxmatch`: count, enumerate and generate maximal matchings of trees, and
//! run the verification suites.
//!
//! Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 verification failure.

mod commands;
mod error;
mod suites;

use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

/// Seed used when `--seed` is not given, so runs are reproducible.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(
    name = "maxmatch",
    version,
    about = "Exact counts of maximal matchings in trees"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format (verify defaults to json, everything else to text)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// RNG seed for randomized suites: an integer, or `time` for wall-clock seeding
    #[arg(long, global = true, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    pub seed: u64,
    /// Largest order the brute-force enumeration accepts
    #[arg(long, global = true, default_value_t = NonZeroUsize::new(maxmatch_core::DEFAULT_ORACLE_CAP).unwrap())]
    pub cap_oracle: NonZeroUsize,
    /// Largest order the exhaustive tree search accepts
    #[arg(long, global = true, default_value_t = NonZeroUsize::new(maxmatch_core::tree::DEFAULT_TREE_CAP).unwrap())]
    pub cap_search: NonZeroUsize,
    /// Worker threads for verification
    #[arg(long, global = true, env = "MAXMATCH_THREADS")]
    pub threads: Option<NonZeroUsize>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "family"])))]
pub struct Source {
    /// Edge-list file (`-` for stdin)
    pub input: Option<PathBuf>,
    /// Build the tree from a family spec such as `spider:1,2,2`
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of maximal matchings
    Count {
        #[command(flatten)]
        source: Source,
        /// Also print the (alpha, beta, gamma) table, rooting each component at its first vertex
        #[arg(long)]
        signs: bool,
    },
    /// List every maximal matching, then the count
    Enumerate {
        #[command(flatten)]
        source: Source,
    },
    /// Write a family member as an edge list
    Gen {
        /// Family spec, e.g. `path:10`, `subdivided_star:5,2`, `star_of_triples:3`
        spec: String,
    },
    /// Run a verification suite over all trees up to `n_max`
    Verify {
        #[arg(value_enum)]
        suite: suites::Suite,
        n_max: usize,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    if s == "time" {
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_err(|e| e.to_string())?;
        return Ok(now.as_nanos() as u64);
    }
    s.parse()
        .map_err(|_| format!("`{s}` is neither an integer nor `time`"))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if let Some(threads) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.get())
            .build_global()
            .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    }
    let g = &cli.global;
    match cli.command {
        Command::Count { source, signs } => commands::count(g, &source, signs),
        Command::Enumerate { source } => commands::enumerate(g, &source),
        Command::Gen { spec } => commands::gen(g, &spec),
        Command::Verify { suite, n_max } => suites::verify(g, suite, n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(CliError::VERIFICATION_FAILED),
        Err(e) => {
            eprintln!("maxmatch: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
