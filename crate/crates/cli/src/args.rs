use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use packem::reproduce::Suite;
use packem::{Budget, Target};

#[derive(Debug, Parser)]
#[command(
    name = "packem",
    version,
    about = "Exact packing colorings of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the canonical edge list of a generated graph.
    Gen(GenArgs),
    /// Compute an exact packing chromatic value with a witness.
    Chi(ChiArgs),
    /// Re-check a coloring certificate from scratch.
    Verify(VerifyArgs),
    /// Independence and matching numbers and the total-coloring bounds.
    Bounds(BoundsArgs),
    /// Recompute the known path, cycle, star, bound and pattern results.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family name followed by its size parameters, e.g. `cycle 7`.
    #[arg(required = true, num_args = 1.., value_name = "FAMILY PARAMS")]
    pub spec: Vec<String>,
    /// Write the edge list here instead of standard output.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Also write a certificate for the explicit packing total coloring
    /// (paths, cycles and stars).
    #[arg(long, value_name = "PATH")]
    pub cert: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// Edge-list file, or `-` for standard input.
    #[arg(long, group = "source", value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Generator spec, e.g. `--gen path 3`.
    #[arg(long = "gen", group = "source", num_args = 1.., value_name = "FAMILY PARAMS")]
    pub generator: Option<Vec<String>>,
}

#[derive(Debug, Args)]
#[group(id = "optional_source", required = false, multiple = false)]
pub struct OptionalSource {
    /// Edge-list file, or `-` for standard input. Defaults to the graph
    /// embedded in the certificate.
    #[arg(long, group = "optional_source", value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Generator spec for the graph to check against.
    #[arg(long = "gen", group = "optional_source", num_args = 1.., value_name = "FAMILY PARAMS")]
    pub generator: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Search-node limit per instance.
    #[arg(long, default_value_t = 100_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_nodes: u64,
    /// Wall-clock limit per instance, in seconds.
    #[arg(long, default_value_t = 600, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_secs: u64,
}

impl BudgetArgs {
    pub fn budget(self) -> Budget {
        Budget {
            max_nodes: self.budget_nodes,
            max_time: Duration::from_secs(self.budget_secs),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Graph,
    Line,
    Total,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Self {
        match t {
            TargetArg::Graph => Target::Graph,
            TargetArg::Line => Target::Line,
            TargetArg::Total => Target::Total,
        }
    }
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value_t = TargetArg::Total)]
    pub target: TargetArg,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Write the witness certificate here.
    #[arg(long, value_name = "PATH")]
    pub cert: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Certificate to check.
    #[arg(long, value_name = "PATH")]
    pub cert: PathBuf,
    #[command(flatten)]
    pub source: OptionalSource,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Paths,
    Cycles,
    Stars,
    Bounds,
    Pattern,
    All,
}

impl SuiteArg {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Paths => vec![Suite::Paths],
            SuiteArg::Cycles => vec![Suite::Cycles],
            SuiteArg::Stars => vec![Suite::Stars],
            SuiteArg::Bounds => vec![Suite::Bounds],
            SuiteArg::Pattern => vec![Suite::Pattern],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}
