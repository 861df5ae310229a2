use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tropbasis",
    version,
    about = "Matroid circuits, binarity and minimal tropical bases of Bergman fans"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Largest ground set for 0/1 support enumeration
    #[arg(long, global = true, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: u32,

    /// Largest ground set for the U_{2,4} minor search
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_minor_n: u32,

    /// Worker threads (defaults to the available parallelism)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Lift the size caps
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Symdiff,
    Minor,
    Cross,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the circuit axioms and print the canonical matroid
    Validate { file: String },
    /// Ground set size, circuit statistics, simplicity, uniformity, rank
    Info { file: String },
    /// Remove loops and parallel elements
    Simplify { file: String },
    /// Delete a set of elements
    Delete {
        #[arg(short = 'e', long = "elements", value_delimiter = ',', required = true)]
        elements: Vec<usize>,
        file: String,
    },
    /// Contract a set of elements
    Contract {
        #[arg(short = 'e', long = "elements", value_delimiter = ',', required = true)]
        elements: Vec<usize>,
        file: String,
    },
    /// The dual matroid
    Dual { file: String },
    /// Decide binarity
    IsBinary {
        #[arg(long, value_enum, default_value_t = MethodArg::Cross)]
        method: MethodArg,
        file: String,
    },
    /// Print a named matroid: fano, nonfano, p7, r6, r10, u24, k4_graphic
    Catalog { name: String },
    /// Cycle matroid of a graph file
    FromGraph { file: String },
    /// Matroid of the columns of a GF(2) matrix file
    FromGf2 { file: String },
    /// Decide whether a circuit subset is a tropical basis
    IsBasis {
        #[arg(long)]
        basis: String,
        matroid: String,
    },
    /// Intersection of all tropical bases, with witnesses
    Bm { file: String },
    /// Greedy minimal tropical basis
    MinimalBasis {
        /// Circuit-subset file listing every circuit in removal order
        #[arg(long, conflicts_with = "shuffle_seed")]
        order: Option<String>,
        /// Shuffle the canonical order with this seed
        #[arg(long)]
        shuffle_seed: Option<u64>,
        file: String,
    },
    /// Decide whether the minimal tropical basis is unique
    Unique { file: String },
    /// All minimal tropical bases
    EnumerateBases { file: String },
    /// Pasting closure of a circuit subset
    Closure {
        #[arg(long)]
        seed_set: String,
        matroid: String,
    },
    /// Chordless cycles of a simple graph, as edge sets
    InducedCycles { file: String },
    /// Bonds splitting a graph into two 2-edge-connected parts
    SplittingCuts { file: String },
}
