//! Command-line grammar.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "indom", version, about = "Independent domination polynomials of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for enumeration (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    /// Convergence tolerance for numeric root finding.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,

    /// Raise the vertex limit of exhaustive subset searches.
    #[arg(long, global = true, value_name = "N")]
    pub max_n: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Independent domination polynomial D_i(G, x).
    Poly(InputArgs),
    /// Independence polynomial I(G, x).
    Ipoly(InputArgs),
    /// Real and complex roots of D_i(G, x) or I(G, x).
    Roots {
        #[command(flatten)]
        input: InputArgs,
        /// Which polynomial to analyze.
        #[arg(long, value_enum, default_value_t = PolyKind::Di)]
        of: PolyKind,
    },
    /// Domination parameters, well-coveredness, claw-freeness and shape checks.
    Analyze(InputArgs),
    /// Emit a family graph.
    Family {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Build a graph product and compare D_i with its predicted value.
    Product(ProductArgs),
    /// Compare closed forms with enumeration over parameter ranges.
    Verify(VerifyArgs),
    /// Graphs with a prescribed value at -1 or a prescribed integer root.
    Construct(ConstructArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    /// D_i(G, x)
    Di,
    /// I(G, x)
    I,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductOp {
    Join,
    Lex,
    Corona,
    Compound,
    Expansion,
}

/// Family name and parameters.
#[derive(Args, Debug, Clone, Default)]
pub struct FamilyArgs {
    /// Family name (path, cycle, complete, complete_multipartite, k_path,
    /// book, generalized_book, friendship, generalized_friendship, h_graph, star).
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Part sizes for complete_multipartite, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
}

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("input").required(true).args(["graph6", "file", "family"])))]
pub struct InputArgs {
    /// Graph in graph6 encoding.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File holding a graph6 line or an edge list.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("second").args(["h_graph6", "h_file"]).multiple(false)))]
pub struct ProductArgs {
    #[arg(long, value_enum)]
    pub op: ProductOp,
    #[command(flatten)]
    pub input: InputArgs,
    /// Second factor in graph6 encoding.
    #[arg(long = "h-graph6", value_name = "GRAPH6")]
    pub h_graph6: Option<String>,
    /// File holding the second factor.
    #[arg(long = "h-file", value_name = "PATH")]
    pub h_file: Option<PathBuf>,
    /// Clique cover for compound: one block per line, space-separated labels.
    /// Defaults to the greedy cover.
    #[arg(long)]
    pub cover: Option<PathBuf>,
    /// Clique size for expansion.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Closed form to check (path, book, generalized_book, friendship,
    /// generalized_friendship_paper, generalized_friendship,
    /// complete_multipartite_special, h_graph, gamma_i_generalized_book).
    #[arg(long)]
    pub family: String,
    /// Values or ranges such as 4, 2..6 or 2,3,5.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
    /// Exit 0 even when a closed form disagrees with enumeration.
    #[arg(long)]
    pub allow_mismatch: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("construction").required(true).args(["alternating_sum", "integer_root"])))]
pub struct ConstructArgs {
    /// Graph whose D_i evaluates to this value at -1.
    #[arg(long, allow_negative_numbers = true, value_name = "N")]
    pub alternating_sum: Option<i64>,
    /// Graph whose D_i has the root -N.
    #[arg(long, value_name = "N")]
    pub integer_root: Option<usize>,
}
