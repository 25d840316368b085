use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use dstar_core::constructions::ConstructionId;
use dstar_core::DoubleStar;

#[derive(Parser, Debug)]
#[command(name = "dstar", version, about = "Double stars, degree-sum extremal graphs and exhaustive checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count copies of a double star in a graph.
    Count(CountArgs),
    /// Build a named extremal construction.
    Construct(ConstructArgs),
    /// Evaluate a closed-form bound.
    Bound {
        #[command(subcommand)]
        bound: BoundCommand,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Best complete bipartite split for a double star.
    Optimize(OptimizeArgs),
    /// Exhaustive extremal search over labeled graphs.
    Search(SearchArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Table of continuous split maximizers.
    Table(TableArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true)))]
pub struct CountArgs {
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long, value_name = "PATH", group = "source")]
    pub graph6: Option<PathBuf>,
    /// Complete bipartite graph `x,y`.
    #[arg(long, value_name = "X,Y", value_parser = parse_pair, group = "source")]
    pub bipartite: Option<(usize, usize)>,
    /// Named construction such as `adjacent:10,1`.
    #[arg(long, value_name = "SPEC", group = "source")]
    pub construction: Option<ConstructionId>,
    /// Double star `a,b`.
    #[arg(long, value_name = "A,B")]
    pub star: DoubleStar,
    #[arg(long, value_enum, default_value_t = CountMode::Auto)]
    pub mode: CountMode,
    /// Report both the per-edge formula and the enumeration oracle.
    #[arg(long)]
    pub compare: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    Formula,
    Oracle,
    /// Formula when triangle-free, oracle otherwise.
    Auto,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructKind {
    Bipartite,
    Turan,
    Adjacent,
    NonadjacentEdges,
    EvenLight,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub kind: ConstructKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub x: Option<usize>,
    #[arg(long)]
    pub y: Option<usize>,
    /// Write the graph here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum BoundCommand {
    /// Most edges of a triangle-free graph with maximum degree `delta`.
    TriangleFreeEdges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Fewest triangles under edge degree sums `>= n+k`.
    AdjacentTriangles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Fewest edges of a connected graph with edge degree sums `>= n+k`.
    AdjacentEdges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Fewest edges under non-edge degree sums `>= n+1`.
    NonadjacentEdges {
        #[arg(long)]
        n: usize,
    },
    /// Fewest triangles under non-edge degree sums `>= n+1`, odd `n`.
    NonadjacentTriangles {
        #[arg(long)]
        n: usize,
    },
    /// Residue-independent edge lower bound, as an exact fraction.
    Universal {
        #[arg(long)]
        n: usize,
    },
    /// Triangles forced by `floor(n^2/4) + k` edges.
    Ls {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: u64,
    },
    /// Closed-form S1,3 split difference `f(x+1) - f(x)`.
    S13Diff {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: usize,
    },
    /// Closed-form S1,4 split difference `f(x+1) - f(x)`.
    S14Diff {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: usize,
    },
    /// Root locating the best S1,4 split.
    S14Root {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct OptimizeArgs {
    #[arg(long, value_name = "A,B")]
    pub star: DoubleStar,
    /// Integer split on this many vertices; omit for the continuous problem.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectiveArg {
    MinEdges,
    MinTriangles,
    MaxDoubleStars,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScopeArg {
    Adjacent,
    Nonadjacent,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct PoolArgs {
    /// Allow orders above 8 (up to 11).
    #[arg(long)]
    pub allow_big: bool,
    /// Worker threads; 0 uses available parallelism.
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub objective: ObjectiveArg,
    #[arg(long, value_enum, default_value_t = ScopeArg::Nonadjacent)]
    pub scope: ScopeArg,
    /// Degree sums must reach `n + offset`.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub offset: i64,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub forbid_isolated: bool,
    /// Double star for `max-double-stars`.
    #[arg(long, value_name = "A,B")]
    pub star: Option<DoubleStar>,
    #[command(flatten)]
    pub pool: PoolArgs,
    #[arg(long, default_value_t = 8)]
    pub witness_cap: usize,
    /// Also write the witnesses as graph6.
    #[arg(long, value_name = "PATH")]
    pub witness_out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Doublestar,
    Adjacent,
    NonadjacentEdges,
    NonadjacentTriangles,
    LsFact,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 7)]
    pub nmax: usize,
    #[command(flatten)]
    pub pool: PoolArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Text,
    Both,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Both)]
    pub format: TableFormat,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(a)?, num(b)?))
}
