//! `zdg`: build zero-divisor graph compounds, verify labelings, search for
//! distance antimagic labelings and replay the theorem families.
//!
//! Exit codes: 0 labeling established, 1 non-existence established, 2
//! undecided (budget), 64 usage or parse error, 70 internal error.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_UNDECIDED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_INTERNAL: u8 = 70;

#[derive(Debug, Parser)]
#[command(
    name = "zdg",
    version,
    about = "Distance antimagic labelings of zero-divisor graph compounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Summary,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Search-tree node limit.
    #[arg(long, default_value_t = 100_000_000)]
    pub max_nodes: u64,
    /// Wall-clock limit in seconds.
    #[arg(long, default_value_t = 60)]
    pub max_seconds: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression such as "2*zn(9)+zn(4)" and print the graph.
    Build {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Summary)]
        format: Format,
    },
    /// Compute vertex weights for a labeling and check distinctness.
    Verify {
        expr: String,
        /// Label vertex i with i+1 in construction order.
        #[arg(long, conflicts_with = "labels", required_unless_present = "labels")]
        identity: bool,
        /// Comma-separated labels, one per vertex.
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value_t = Format::Summary)]
        format: Format,
    },
    /// Exhaustive search for a distance antimagic labeling.
    Search {
        expr: String,
        /// Required weight multiset, comma-separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        target: Option<Vec<i64>>,
        /// Count all solutions.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run one theorem family instance (t4, t7, ..., nx21, nx2, nx3, nx5, nx6, nxcor).
    Theorem {
        id: String,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        n: u64,
        /// Join partner for nx2/nx3: z4, z6, z9, comp-z6, comp-z9.
        #[arg(long)]
        g: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Summary)]
        format: Format,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Sweep the theorem families and print a pass/fail table.
    Suite {
        /// Restrict to one family.
        #[arg(long)]
        family: Option<String>,
        /// Upper end of the t4/t7/t8 sweeps.
        #[arg(long)]
        m_max: Option<u64>,
        /// Explicit comma-separated parameter values.
        #[arg(long, value_delimiter = ',')]
        m: Option<Vec<u64>>,
        /// Largest prime in the t9/t11/t12 sweeps.
        #[arg(long, default_value_t = 97)]
        max_prime: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let code = match cli.command {
        Command::Build { expr, format } => commands::build(&expr, format),
        Command::Verify {
            expr,
            identity: _,
            labels,
            format,
        } => commands::verify(&expr, labels, format),
        Command::Search {
            expr,
            target,
            all,
            budget,
        } => commands::search(&expr, target, all, &budget),
        Command::Theorem {
            id,
            m,
            n,
            g,
            format,
            budget,
        } => commands::theorem(&id, m, n, g.as_deref(), format, &budget),
        Command::Suite {
            family,
            m_max,
            m,
            max_prime,
            budget,
        } => commands::suite(family.as_deref(), m_max, m, max_prime, &budget),
    };
    ExitCode::from(code)
}
