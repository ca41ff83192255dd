use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "bps", version, about = "Equivariant syzygy orders and invariants of big polygon spaces")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Largest polynomial degree (with deg t = 2) a Gröbner computation may reach.
    #[arg(long, env = "BPS_DEGREE_CAP", default_value_t = 64, global = true)]
    pub degree_cap: i64,
    /// Largest number of S-pairs reduced in one Gröbner computation.
    #[arg(long, env = "BPS_PAIR_LIMIT", global = true)]
    pub pair_limit: Option<usize>,
    /// Worker threads for chamber sweeps (default: all cores).
    #[arg(long, env = "BPS_THREADS", global = true)]
    pub threads: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long, env = "BPS_OUT", global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, env = "BPS_FORMAT", value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Time budget per chamber in seconds.
    #[arg(long, env = "BPS_TIMEOUT", global = true)]
    pub timeout: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of one space X_{a,b}(l).
    Analyze {
        /// Comma-separated, weakly increasing lengths, e.g. `1,1,1` or `1/2,1,1`.
        #[arg(long, env = "BPS_LENGTHS")]
        lengths: String,
        #[arg(long, env = "BPS_A", default_value_t = 1)]
        a: u32,
        #[arg(long, env = "BPS_B", default_value_t = 1)]
        b: u32,
    },
    /// Enumerate the chambers of length vectors with r entries.
    Chambers {
        #[arg(long, env = "BPS_R")]
        r: usize,
        /// Largest integer entry tried (default 2r).
        #[arg(long, env = "BPS_ENTRY_BOUND")]
        entry_bound: Option<i64>,
    },
    /// Check syzord = mu - 1 on every chamber with r entries.
    VerifyConjecture {
        #[arg(long, env = "BPS_R")]
        r: usize,
        #[arg(long, env = "BPS_A", default_value_t = 1)]
        a: u32,
        /// Only this b (default: both 1 and 2).
        #[arg(long, env = "BPS_B")]
        b: Option<u32>,
        #[arg(long, env = "BPS_ENTRY_BOUND")]
        entry_bound: Option<i64>,
        /// Chamber database from `chambers` (JSON or CSV); results are cached beside it.
        #[arg(long, env = "BPS_DB")]
        db: Option<PathBuf>,
        /// Ignore and do not update the results cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Betti table, Hilbert series and syzygy order of the Koszul syzygy K_k.
    Koszul {
        #[arg(long, env = "BPS_R")]
        r: usize,
        #[arg(long, env = "BPS_B", default_value_t = 1)]
        b: u32,
        #[arg(long)]
        k: usize,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Budget in seconds for the r = 5 conjecture sweep.
        #[arg(long, default_value_t = 600)]
        budget: u64,
    },
}
