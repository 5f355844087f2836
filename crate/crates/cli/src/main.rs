mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use outerspec::report::Budget;

#[derive(Parser, Debug)]
#[command(name = "outerspec", version, about = "Adjacency eigenvalues of outerplanar graphs")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// `large` also permits the exhaustive n = 12 searches.
    #[arg(long, global = true)]
    pub budget: Option<Budget>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named construction and write it as graph6.
    Construct {
        /// fan, bridged-double-fan, diamond-double-fan, fan-star,
        /// cut-vertex-family, figure3, g0-prime-even, g0-prime-odd,
        /// triple-fan-chain or triple-fan-star.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Cut-vertex attachments as `a,b;c`, one group per fan.
        #[arg(long)]
        attach: Option<String>,
        /// Chain variant: endpoint-to-hub, endpoint-to-endpoint or
        /// outer-endpoints-to-middle-hub.
        #[arg(long)]
        variant: Option<String>,
        /// Output file; `-` or absent for stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test outerplanarity of every graph in a graph6 file.
    Check {
        /// graph6 file; `-` for stdin.
        #[arg(long = "in")]
        input: PathBuf,
        /// Print the outer cycle order or the minor branch sets.
        #[arg(long)]
        witness: bool,
    },
    /// The k-th largest adjacency eigenvalue.
    Eig {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Also print the unit eigenvector.
        #[arg(long)]
        vector: bool,
    },
    /// Two-hub characteristic series and the root of its equation.
    Series {
        #[arg(long = "in")]
        input: PathBuf,
        /// Hub labels `u1,u2`.
        #[arg(long)]
        hubs: String,
        /// symmetric, exact, bound or split.
        #[arg(long, default_value = "symmetric")]
        mode: String,
        #[arg(long, default_value_t = outerspec::series::DEFAULT_ORDER)]
        order: usize,
    },
    /// List outerplanar graphs on n vertices, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximize the k-th eigenvalue over a search family.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// exhaustive, two-hub, two-hub-2c, cut-vertex or fan-assembly.
        #[arg(long, default_value = "exhaustive")]
        family: String,
        /// Append progress lines to this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the last checkpoint line.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Stop an exhaustive pass after this many parent graphs.
        #[arg(long)]
        max_parents: Option<usize>,
        /// Permit the exhaustive search at n = 12.
        #[arg(long)]
        allow_twelve: bool,
    },
    /// Compare conjectured maximizers with search results.
    Conjectures {
        /// kq+1, <k>q+1, 3q, 3q+2 or even.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Run the verification matrix; exits 1 when any check fails.
    VerifyPaper {
        /// TOML run file; every key is optional.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Restrict to these groups (repeatable).
        #[arg(long)]
        group: Vec<String>,
        /// Directory for matrix.json and matrix.md.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the effective configuration and exit.
        #[arg(long)]
        print_config: bool,
    },
    /// Render a saved matrix.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
        /// json or markdown.
        #[arg(long, default_value = "markdown")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
