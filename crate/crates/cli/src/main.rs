mod args;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::Parser;
use dstar_core::bounds::{self, PiecewiseEdgeBound};
use dstar_core::constructions::ConstructionId;
use dstar_core::counting::{count_double_stars_oracle, count_double_stars_trianglefree};
use dstar_core::graph::{parse_graph6_lines, write_graph6};
use dstar_core::search::{
    self, DegreeSumCondition, Scope, SearchOptions, SearchReport,
};
use dstar_core::verify::{run_suite, Status, Suite};
use dstar_core::{Count, DoubleStar, Graph};
use serde::Serialize;
use serde_json::json;

use args::*;

/// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Count(a) => count(a)?,
        Command::Construct(a) => construct(a)?,
        Command::Bound { bound, json } => bound_cmd(bound, json)?,
        Command::Optimize(a) => optimize(a)?,
        Command::Search(a) => search_cmd(a)?,
        Command::Verify(a) => return verify(a),
        Command::Table(a) => table(a)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn read_source(path: &std::path::Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

// ---------------------------------------------------------------- count

#[derive(Serialize)]
struct CountRow {
    graph6: String,
    n: usize,
    edges: usize,
    star: DoubleStar,
    count: Count,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<Count>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<Count>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn count_one(g: &Graph, a: &CountArgs) -> anyhow::Result<CountRow> {
    let ds = a.star;
    let (count, method) = match a.mode {
        CountMode::Formula => (count_double_stars_trianglefree(g, ds)?, "formula"),
        CountMode::Oracle => (count_double_stars_oracle(g, ds), "oracle"),
        CountMode::Auto if g.is_triangle_free() => {
            (count_double_stars_trianglefree(g, ds)?, "formula")
        }
        CountMode::Auto => (count_double_stars_oracle(g, ds), "oracle"),
    };
    let (formula, oracle, agree) = if a.compare {
        let f = count_double_stars_trianglefree(g, ds)?;
        let o = count_double_stars_oracle(g, ds);
        let same = f == o;
        (Some(f), Some(o), Some(same))
    } else {
        (None, None, None)
    };
    Ok(CountRow {
        graph6: write_graph6(g),
        n: g.order(),
        edges: g.edge_count(),
        star: ds,
        count,
        method,
        formula,
        oracle,
        agree,
    })
}

fn count(a: CountArgs) -> anyhow::Result<()> {
    let graphs = if let Some(path) = &a.graph6 {
        let text = read_source(path)?;
        let gs = parse_graph6_lines(&text)?;
        if gs.is_empty() {
            bail!("no graphs in input");
        }
        gs
    } else if let Some((x, y)) = a.bipartite {
        vec![ConstructionId::CompleteBipartite { x, y }.build()?]
    } else if let Some(id) = a.construction {
        vec![id.build()?]
    } else {
        bail!("one of --graph6, --bipartite or --construction is required");
    };
    let rows = graphs
        .iter()
        .map(|g| count_one(g, &a))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if a.json {
        if rows.len() == 1 {
            print_json(&rows[0])?;
        } else {
            print_json(&rows)?;
        }
        return Ok(());
    }
    for r in &rows {
        match (&r.formula, &r.oracle, r.agree) {
            (Some(f), Some(o), Some(agree)) => {
                println!("{} formula={f} oracle={o} agree={agree}", r.count)
            }
            _ => println!("{}", r.count),
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- construct

#[derive(Serialize)]
struct Summary {
    construction: String,
    n: usize,
    edges: usize,
    triangles: Count,
    /// degree -> multiplicity
    degrees: BTreeMap<usize, usize>,
    triangle_free: bool,
    connected: bool,
    /// `d(x)+d(y) >= n+1` on every non-edge
    nonadjacent_condition: bool,
    /// Largest `k` with `d(x)+d(y) >= n+k` on every edge.
    adjacent_offset: Option<i64>,
    graph6: String,
}

fn degree_multiset(g: &Graph) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for d in g.degrees() {
        *m.entry(d).or_insert(0) += 1;
    }
    m
}

fn format_multiset(m: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = m
        .iter()
        .rev()
        .map(|(d, c)| if *c == 1 { d.to_string() } else { format!("{d}^{c}") })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn summarize(id: &ConstructionId, g: &Graph) -> Summary {
    let n = g.order() as i64;
    let adjacent_offset = g
        .edges()
        .map(|(u, v)| (g.neighbors(u).count_ones() + g.neighbors(v).count_ones()) as i64 - n)
        .min();
    Summary {
        construction: id.to_string(),
        n: g.order(),
        edges: g.edge_count(),
        triangles: g.count_triangles(),
        degrees: degree_multiset(g),
        triangle_free: g.is_triangle_free(),
        connected: g.is_connected(),
        nonadjacent_condition: DegreeSumCondition::nonadjacent(1).holds_on(g),
        adjacent_offset,
        graph6: write_graph6(g),
    }
}

fn construction_id(a: &ConstructArgs) -> anyhow::Result<ConstructionId> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("--{flag} is required"));
    Ok(match a.kind {
        ConstructKind::Bipartite => ConstructionId::CompleteBipartite {
            x: need(a.x, "x")?,
            y: need(a.y, "y")?,
        },
        ConstructKind::Turan => ConstructionId::TuranBipartite { n: need(a.n, "n")? },
        ConstructKind::Adjacent => ConstructionId::AdjacentExtremal {
            n: need(a.n, "n")?,
            k: need(a.k, "k")?,
        },
        ConstructKind::NonadjacentEdges => {
            ConstructionId::NonAdjacentEdgeExtremal { n: need(a.n, "n")? }
        }
        ConstructKind::EvenLight => ConstructionId::EvenTriangleLight { n: need(a.n, "n")? },
    })
}

fn render_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", write_graph6(g)),
        GraphFormat::Edges => {
            let mut s = format!("{} {}\n", g.order(), g.edge_count());
            for (u, v) in g.edges() {
                s.push_str(&format!("{u} {v}\n"));
            }
            s
        }
    }
}

fn construct(a: ConstructArgs) -> anyhow::Result<()> {
    let id = construction_id(&a)?;
    let g = id.build()?;
    let summary = summarize(&id, &g);
    let rendered = render_graph(&g, a.format);
    if let Some(path) = &a.out {
        fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?;
    }
    if a.json {
        return print_json(&summary);
    }
    let text = format!(
        "construction {}\nn {}\nedges {}\ntriangles {}\ndegrees {}\ntriangle-free {}\nconnected {}\nnonadjacent condition (n+1) {}\nadjacent offset {}\n",
        summary.construction,
        summary.n,
        summary.edges,
        summary.triangles,
        format_multiset(&summary.degrees),
        summary.triangle_free,
        summary.connected,
        summary.nonadjacent_condition,
        summary.adjacent_offset.map_or("none".into(), |k| k.to_string()),
    );
    if a.out.is_some() {
        print!("{text}");
    } else {
        // graph on stdout so it pipes into `count --graph6 -`
        print!("{rendered}");
        eprint!("{text}");
    }
    Ok(())
}

// ---------------------------------------------------------------- bound

fn bound_cmd(b: BoundCommand, as_json: bool) -> anyhow::Result<()> {
    let value = match b {
        BoundCommand::TriangleFreeEdges { n, delta } => {
            json!({ "bound": "triangle-free-edges", "n": n, "delta": delta,
                    "value": bounds::max_edges_triangle_free(n, delta)? })
        }
        BoundCommand::AdjacentTriangles { n, k } => {
            json!({ "bound": "adjacent-triangles", "n": n, "k": k,
                    "value": bounds::adjacent_min_triangles(n, k)? })
        }
        BoundCommand::AdjacentEdges { n, k } => {
            json!({ "bound": "adjacent-edges", "n": n, "k": k,
                    "value": bounds::adjacent_min_edges(n, k)? })
        }
        BoundCommand::NonadjacentEdges { n } => {
            let p = PiecewiseEdgeBound::new(n)?;
            json!({ "bound": "nonadjacent-edges", "n": n, "k": p.k,
                    "class": p.class, "value": p.value })
        }
        BoundCommand::NonadjacentTriangles { n } => {
            json!({ "bound": "nonadjacent-triangles", "n": n,
                    "value": bounds::nonadjacent_min_triangles_odd(n)? })
        }
        BoundCommand::Universal { n } => {
            let r = bounds::universal_edge_lower_bound(n)?;
            json!({ "bound": "universal", "n": n, "value": r.to_string(),
                    "decimal": *r.numer() as f64 / *r.denom() as f64 })
        }
        BoundCommand::Ls { n, e } => {
            let r = bounds::lovasz_simonovits_bound(n, e);
            json!({ "bound": "ls", "n": n, "e": e, "k": r.excess,
                    "value": r.bound, "valid": r.valid })
        }
        BoundCommand::S13Diff { n, x } => {
            json!({ "bound": "s13-diff", "n": n, "x": x,
                    "value": bounds::s13_forward_difference(n, x)?.to_string() })
        }
        BoundCommand::S14Diff { n, x } => {
            json!({ "bound": "s14-diff", "n": n, "x": x,
                    "value": bounds::s14_forward_difference(n, x)?.to_string() })
        }
        BoundCommand::S14Root { n } => {
            let r = bounds::s14_root(n)?;
            json!({ "bound": "s14-root", "n": n, "value": r, "ratio": r / n as f64 })
        }
    };
    if as_json {
        return print_json(&value);
    }
    match &value["value"] {
        serde_json::Value::String(s) => println!("{s}"),
        v => println!("{v}"),
    }
    if value.get("valid") == Some(&json!(false)) {
        eprintln!("note: k >= n/2, the bound is not guaranteed");
    }
    Ok(())
}

// ---------------------------------------------------------------- optimize

fn optimize(a: OptimizeArgs) -> anyhow::Result<()> {
    match a.n {
        Some(n) => {
            let opt = bounds::optimal_split_integer(n, a.star)?;
            let ratio = opt.x as f64 / n as f64;
            if a.json {
                return print_json(&json!({
                    "star": a.star, "n": n, "x": opt.x, "y": n - opt.x,
                    "value": opt.value, "tied": opt.tied, "ratio": ratio,
                }));
            }
            println!("x {}\ny {}\nvalue {}\ntied {:?}\nratio {ratio:.6}", opt.x, n - opt.x, opt.value, opt.tied);
        }
        None => {
            let x = bounds::optimal_split_continuous(a.star, a.tol)?;
            if a.json {
                return print_json(&json!({ "star": a.star, "tol": a.tol, "x": x }));
            }
            println!("{x:.9}");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- search

fn search_cmd(a: SearchArgs) -> anyhow::Result<()> {
    let opts = SearchOptions {
        allow_big: a.pool.allow_big,
        workers: a.pool.workers,
        witness_cap: a.witness_cap,
    };
    let cond = DegreeSumCondition {
        scope: match a.scope {
            ScopeArg::Adjacent => Scope::AdjacentPairs,
            ScopeArg::Nonadjacent => Scope::NonAdjacentPairs,
        },
        offset: a.offset,
        require_connected: a.connected,
        forbid_isolated: a.forbid_isolated,
    };
    let report: SearchReport = match a.objective {
        ObjectiveArg::MinEdges => search::min_edges_under_condition(a.n, cond, &opts)?,
        ObjectiveArg::MinTriangles => search::min_triangles_under_condition(a.n, cond, &opts)?,
        ObjectiveArg::MaxDoubleStars => {
            let ds = a.star.context("--star is required for max-double-stars")?;
            search::max_double_stars_exhaustive(a.n, ds, &opts)?
        }
    };
    if let Some(path) = &a.witness_out {
        let mut f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        for w in &report.witnesses {
            writeln!(f, "{}", write_graph6(w))?;
        }
    }
    eprintln!(
        "visited {} graphs in {:.3}s",
        report.graphs_visited,
        report.wall_time.as_secs_f64()
    );
    print_json(&report)
}

// ---------------------------------------------------------------- verify

fn verify(a: VerifyArgs) -> anyhow::Result<ExitCode> {
    let suite = match a.suite {
        SuiteArg::Doublestar => Suite::DoubleStar,
        SuiteArg::Adjacent => Suite::Adjacent,
        SuiteArg::NonadjacentEdges => Suite::NonAdjacentEdges,
        SuiteArg::NonadjacentTriangles => Suite::NonAdjacentTriangles,
        SuiteArg::LsFact => Suite::LsFact,
        SuiteArg::All => Suite::All,
    };
    let opts = SearchOptions {
        allow_big: a.pool.allow_big,
        workers: a.pool.workers,
        ..SearchOptions::default()
    };
    let started = std::time::Instant::now();
    let result = run_suite(suite, a.nmax, &opts)?;
    if a.json {
        print_json(&result)?;
    } else {
        for c in &result.claims {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Recorded => "DATA",
            };
            println!("{tag} {}: {}", c.id, c.details);
            if let (Status::Fail, Some(w)) = (c.status, &c.witness) {
                println!("     witness {}", write_graph6(w));
            }
        }
        println!(
            "{} pass, {} fail, {} recorded",
            result.count(Status::Pass),
            result.count(Status::Fail),
            result.count(Status::Recorded)
        );
    }
    eprintln!("suite {suite} up to n={} in {:.2}s", a.nmax, started.elapsed().as_secs_f64());
    if result.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        for c in result.failures() {
            eprintln!("failed: {} ({})", c.id, c.anchor);
        }
        Ok(ExitCode::from(EXIT_FAIL))
    }
}

// ---------------------------------------------------------------- table

const TABLE_A: u32 = 6;
const TABLE_B: u32 = 9;

fn table(a: TableArgs) -> anyhow::Result<()> {
    let t = bounds::table_xmax(TABLE_A, TABLE_B, a.tol)?;
    let mut out = String::new();
    if matches!(a.format, TableFormat::Csv | TableFormat::Both) {
        out.push_str("a,b,x_max\n");
        for (i, row) in t.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if let Some(x) = cell {
                    out.push_str(&format!("{},{},{}\n", i + 1, j + 1, bounds::format_xmax(*x)));
                }
            }
        }
    }
    if a.format == TableFormat::Both {
        out.push('\n');
    }
    if matches!(a.format, TableFormat::Text | TableFormat::Both) {
        out.push_str("a\\b");
        for b in 1..=TABLE_B {
            out.push_str(&format!("{b:>7}"));
        }
        out.push('\n');
        for (i, row) in t.iter().enumerate() {
            out.push_str(&format!("{:<3}", i + 1));
            for cell in row {
                let s = cell.map_or(String::new(), bounds::format_xmax_text);
                out.push_str(&format!("{s:>7}"));
            }
            out.push('\n');
        }
    }
    print!("{out}");
    Ok(())
}
