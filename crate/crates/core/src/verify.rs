//! Verification suites: every extremal claim checked against exhaustive
//! search at small orders and against the closed forms at larger ones.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    adjacent_min_edges, adjacent_min_triangles, nonadjacent_min_edges,
    nonadjacent_min_triangles_odd, optimal_split_integer, s13_forward_difference, s14_forward_difference,
    s14_root, universal_edge_lower_bound, SplitObjective,
};
use crate::constructions::{
    adjacent_extremal, adjacent_extremal_edges, even_triangle_light, nonadjacent_edge_extremal,
};
use crate::counting::{count_double_stars_bipartite, stars_on_edge_small, DoubleStar};
use crate::graph::{bits, is_complete_bipartite_rows, Graph};
use crate::search::{
    fold_graphs, min_edges_under_condition, min_triangles_under_condition,
    verify_lovasz_simonovits, DegreeSumCondition, EnumGraph, EnumOptions, SearchOptions,
    SearchReport, TriangleFreePrune,
};
use crate::{Count, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    DoubleStar,
    Adjacent,
    NonAdjacentEdges,
    NonAdjacentTriangles,
    LsFact,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [
        Suite::DoubleStar,
        Suite::Adjacent,
        Suite::NonAdjacentEdges,
        Suite::NonAdjacentTriangles,
        Suite::LsFact,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::DoubleStar => "doublestar",
            Suite::Adjacent => "adjacent",
            Suite::NonAdjacentEdges => "nonadjacent-edges",
            Suite::NonAdjacentTriangles => "nonadjacent-triangles",
            Suite::LsFact => "ls-fact",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::PARTS
            .iter()
            .chain([Suite::All].iter())
            .find(|p| p.name() == s)
            .copied()
            .ok_or_else(|| Error::param(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Data without a claim to check against.
    Recorded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    /// The result being checked, in words.
    pub anchor: String,
    pub status: Status,
    pub details: String,
    pub witness: Option<Graph>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSuiteResult {
    pub suite: Suite,
    pub nmax: usize,
    pub claims: Vec<Claim>,
}

impl VerificationSuiteResult {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }
}

const EDGE_BOUND: &str = "triangle-free graph with maximum degree D has at most D(n-D) edges, with equality exactly for K_{D,n-D}, D >= n/2";
const SMALL_DEGREE: &str = "small maximum degree loses to the balanced complete bipartite graph";
const SPLIT_DOMINATES: &str = "large maximum degree is dominated by a complete bipartite split, strictly unless complete bipartite";
const BEST_SPLIT: &str = "double-star maximum over triangle-free graphs equals the best complete bipartite split";
const SYMMETRIC_TURAN: &str = "balanced complete bipartite graph maximizes symmetric double stars";
const S13_TURAN: &str = "balanced complete bipartite graph maximizes S1,3 for n >= 13";
const S13_DIFF: &str = "closed form of the S1,3 split forward difference";
const S14_DIFF: &str = "closed form of the S1,4 split forward difference";
const S14_LIMIT: &str = "optimal S1,4 split ratio tends to 2/3";
const ADJ_EDGES: &str = "connected graph with edge degree sums >= n+k has at least (k+1)n - C(k+2,2) edges";
const ADJ_TRIANGLES: &str = "edge degree sums >= n+k force C(k+1,2)(n-k-1) + C(k+1,3) triangles for large n";
const ADJ_CONSTRUCTION: &str = "clique-plus-independent-set construction under the edge degree-sum condition";
const ADJ_LEMMA: &str = "m vertices of degree below (n+k)/2 and minimum degree d force k*d*m/2 triangles";
const NONADJ_EDGES: &str = "non-edge degree sums >= n+1 force the piecewise minimum edge count";
const NONADJ_CONSTRUCTION: &str = "residue-class constructions attaining the non-adjacent minimum edge count";
const UNIVERSAL: &str = "non-edge degree sums >= n+1 force at least (4n^2+4n-9)/16 edges";
const NONADJ_ODD: &str = "odd order under the non-adjacent condition forces (n^2-1)/8 or (n^2+2n-3)/8 triangles";
const NONADJ_EVEN: &str = "even order under the non-adjacent condition: minimum triangles over n^2 tends to 1/4";
const LS_FACT: &str = "floor(n^2/4)+k edges with k < n/2 force k*floor(n/2) triangles";

fn claim(id: String, anchor: &str, ok: bool, details: String, witness: Option<Graph>) -> Claim {
    Claim {
        id,
        anchor: anchor.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        details,
        witness,
    }
}

fn recorded(id: String, anchor: &str, details: String) -> Claim {
    Claim {
        id,
        anchor: anchor.to_string(),
        status: Status::Recorded,
        details,
        witness: None,
    }
}

/// Runs `suite` with exhaustive checks on every order up to `nmax`.
pub fn run_suite(suite: Suite, nmax: usize, opts: &SearchOptions) -> Result<VerificationSuiteResult> {
    check_nmax(nmax, opts)?;
    let claims = match suite {
        Suite::DoubleStar => double_star_suite(nmax, opts)?,
        Suite::Adjacent => adjacent_suite(nmax, opts)?,
        Suite::NonAdjacentEdges => nonadjacent_edges_suite(nmax, opts)?,
        Suite::NonAdjacentTriangles => nonadjacent_triangles_suite(nmax, opts)?,
        Suite::LsFact => ls_suite(nmax, opts)?,
        Suite::All => {
            let mut all = Vec::new();
            for part in Suite::PARTS {
                all.extend(run_suite(part, nmax, opts)?.claims);
            }
            all
        }
    };
    Ok(VerificationSuiteResult { suite, nmax, claims })
}

fn check_nmax(nmax: usize, opts: &SearchOptions) -> Result<()> {
    if nmax < 3 {
        return Err(Error::param(format!("nmax must be at least 3, got {nmax}")));
    }
    let limit = if opts.allow_big {
        crate::search::MAX_ENUM_ORDER
    } else {
        crate::search::DEFAULT_ORDER_LIMIT
    };
    if nmax > limit {
        return Err(Error::SearchRefused {
            n: nmax,
            edges: nmax * (nmax - 1) / 2,
            limit,
        });
    }
    Ok(())
}

fn enum_opts(opts: &SearchOptions) -> EnumOptions {
    EnumOptions {
        allow_big: opts.allow_big,
        workers: opts.workers,
    }
}

fn extremum_u64(r: &SearchReport) -> Option<u64> {
    r.extremum.as_ref().and_then(Count::to_u64)
}

fn show(v: Option<u64>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

// ---------------------------------------------------------------- double stars

const STARS: [(u32, u32); 4] = [(1, 1), (1, 2), (2, 2), (1, 3)];

/// First offending graph and how many there were.
#[derive(Clone, Debug, Default)]
struct Tally {
    count: u64,
    first: Option<EnumGraph>,
}

impl Tally {
    fn hit(&mut self, g: &EnumGraph) {
        self.count += 1;
        self.first.get_or_insert(*g);
    }

    fn merge(self, later: Tally) -> Tally {
        Tally {
            count: self.count + later.count,
            first: self.first.or(later.first),
        }
    }

    fn witness(&self) -> Option<Graph> {
        self.first.as_ref().map(EnumGraph::to_graph)
    }
}

#[derive(Clone, Debug, Default)]
struct StarStat {
    max: u128,
    small_degree: Tally,
    split: Tally,
}

#[derive(Clone, Debug)]
struct DsAcc {
    graphs: u64,
    edge_bound: Tally,
    stars: Vec<StarStat>,
}

impl DsAcc {
    fn merge(mut self, later: DsAcc) -> DsAcc {
        self.graphs += later.graphs;
        self.edge_bound = self.edge_bound.merge(later.edge_bound);
        for (a, b) in self.stars.iter_mut().zip(later.stars) {
            a.max = a.max.max(b.max);
            a.small_degree = std::mem::take(&mut a.small_degree).merge(b.small_degree);
            a.split = std::mem::take(&mut a.split).merge(b.split);
        }
        self
    }
}

struct StarPlan {
    ds: DoubleStar,
    /// `⌊n/2⌋ ≥ max(a,b) + 1`
    hypothesis: bool,
    turan: u128,
    /// `best_split[D]` = max over `⌈n/2⌉ ≤ D' ≤ D` of the `K_{D',n-D'}` count.
    best_split: Vec<u128>,
    best_any: u128,
}

fn bipartite_u128(n: usize, x: usize, ds: DoubleStar) -> Result<u128> {
    let c = count_double_stars_bipartite(n, x, ds)?;
    c.to_u64()
        .map(u128::from)
        .ok_or_else(|| Error::param("count exceeds u64"))
}

fn star_plan(n: usize, ds: DoubleStar) -> Result<StarPlan> {
    let half_up = n.div_ceil(2);
    let mut best_split = vec![0u128; n];
    let mut run = 0u128;
    for (d, slot) in best_split.iter_mut().enumerate() {
        if d >= half_up {
            run = run.max(bipartite_u128(n, d, ds)?);
        }
        *slot = run;
    }
    let mut best_any = 0;
    for x in 0..=n {
        best_any = best_any.max(bipartite_u128(n, x, ds)?);
    }
    Ok(StarPlan {
        ds,
        hypothesis: n / 2 > ds.b() as usize,
        turan: bipartite_u128(n, half_up, ds)?,
        best_split,
        best_any,
    })
}

fn double_star_exhaustive(n: usize, opts: &SearchOptions) -> Result<Vec<Claim>> {
    let plans: Vec<StarPlan> = STARS
        .iter()
        .map(|&(a, b)| star_plan(n, DoubleStar::new(a, b)?))
        .collect::<Result<_>>()?;
    let (acc, _) = fold_graphs(
        n,
        &enum_opts(opts),
        &TriangleFreePrune,
        || DsAcc {
            graphs: 0,
            edge_bound: Tally::default(),
            stars: vec![StarStat::default(); plans.len()],
        },
        |acc, g| {
            acc.graphs += 1;
            let rows = g.rows();
            let delta = rows.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0);
            let e = g.edge_count() as usize;
            let complete_bip = is_complete_bipartite_rows(rows);
            if e > 0 {
                let bound = delta * (n - delta);
                let extremal = 2 * delta >= n && complete_bip;
                if e > bound || (e == bound) != extremal {
                    acc.edge_bound.hit(g);
                }
            }
            for (stat, plan) in acc.stars.iter_mut().zip(&plans) {
                let c = double_stars_in(rows, plan.ds);
                stat.max = stat.max.max(c);
                if 2 * delta < n {
                    if plan.hypothesis && c >= plan.turan {
                        stat.small_degree.hit(g);
                    }
                } else {
                    let best = plan.best_split[delta];
                    if c > best || (plan.hypothesis && !complete_bip && c == best) {
                        stat.split.hit(g);
                    }
                }
            }
        },
        DsAcc::merge,
    )?;

    let mut claims = vec![claim(
        format!("edge-bound/n={n}"),
        EDGE_BOUND,
        acc.edge_bound.count == 0,
        format!("{} triangle-free graphs, {} violations", acc.graphs, acc.edge_bound.count),
        acc.edge_bound.witness(),
    )];
    for (stat, plan) in acc.stars.iter().zip(&plans) {
        let tag = format!("n={n}/{}", plan.ds);
        claims.push(claim(
            format!("best-split/{tag}"),
            BEST_SPLIT,
            stat.max == plan.best_any,
            format!("exhaustive max {}, best split {}", stat.max, plan.best_any),
            None,
        ));
        if plan.hypothesis {
            claims.push(claim(
                format!("small-degree/{tag}"),
                SMALL_DEGREE,
                stat.small_degree.count == 0,
                format!("balanced count {}, {} violations", plan.turan, stat.small_degree.count),
                stat.small_degree.witness(),
            ));
        }
        claims.push(claim(
            format!("split-dominates/{tag}"),
            SPLIT_DOMINATES,
            stat.split.count == 0,
            format!(
                "strictness {}, {} violations",
                if plan.hypothesis { "checked" } else { "not claimed" },
                stat.split.count
            ),
            stat.split.witness(),
        ));
        if plan.ds.is_symmetric() {
            claims.push(claim(
                format!("symmetric-balanced/{tag}"),
                SYMMETRIC_TURAN,
                stat.max == plan.turan,
                format!("exhaustive max {}, balanced count {}", stat.max, plan.turan),
                None,
            ));
        }
    }
    Ok(claims)
}

/// Copies of `ds` in a triangle-free graph given by rows.
fn double_stars_in(rows: &[u64], ds: DoubleStar) -> u128 {
    let mut total = 0u128;
    for (u, &row) in rows.iter().enumerate() {
        let du = row.count_ones() as usize;
        for d in bits(row >> u >> 1) {
            total += stars_on_edge_small(du, rows[u + 1 + d].count_ones() as usize, ds);
        }
    }
    total
}

fn double_star_closed_forms() -> Result<Vec<Claim>> {
    let s13 = DoubleStar::new(1, 3)?;
    let s14 = DoubleStar::new(1, 4)?;
    let mut claims = Vec::new();

    for (name, anchor, ds, formula) in [
        ("s13-difference", S13_DIFF, s13, s13_forward_difference as fn(usize, usize) -> Result<_>),
        ("s14-difference", S14_DIFF, s14, s14_forward_difference),
    ] {
        let mut points = 0;
        let mut bad = Vec::new();
        for n in 4..=40 {
            let obj = SplitObjective::new(n, ds)?;
            for x in 1..=n - 2 {
                points += 1;
                if formula(n, x)? != obj.direct_difference(x)? {
                    bad.push((n, x));
                }
            }
        }
        claims.push(claim(
            format!("{name}/4..40"),
            anchor,
            bad.is_empty(),
            format!("{points} points, mismatches {bad:?}"),
            None,
        ));
    }

    let mut bad = Vec::new();
    for n in 13..=300 {
        let opt = optimal_split_integer(n, s13)?;
        if opt.value != SplitObjective::new(n, s13)?.value(n.div_ceil(2))? {
            bad.push(n);
        }
    }
    let below: Vec<usize> = (4..13)
        .filter(|&n| {
            let opt = optimal_split_integer(n, s13).expect("valid order");
            !opt.tied.contains(&n.div_ceil(2))
        })
        .collect();
    claims.push(claim(
        "s13-balanced/13..300".into(),
        S13_TURAN,
        bad.is_empty(),
        format!("orders where a skewed split wins: {bad:?}; below 13: {below:?}"),
        None,
    ));

    let n = 3000;
    let opt = optimal_split_integer(n, s14)?;
    let ratio = opt.x as f64 / n as f64;
    let root = s14_root(1_000_000)? / 1e6;
    let ok = (ratio - 2.0 / 3.0).abs() < 0.01 && (root - 2.0 / 3.0).abs() < 1e-5;
    claims.push(claim(
        "s14-limit".into(),
        S14_LIMIT,
        ok,
        format!("x*/n at n=3000: {ratio:.6}; root/n at n=1e6: {root:.8}"),
        None,
    ));
    Ok(claims)
}

fn double_star_suite(nmax: usize, opts: &SearchOptions) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    for n in 3..=nmax {
        claims.extend(double_star_exhaustive(n, opts)?);
    }
    claims.extend(double_star_closed_forms()?);
    Ok(claims)
}

// ---------------------------------------------------------------- adjacent

fn adjacent_suite(nmax: usize, opts: &SearchOptions) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    for k in 1..=3usize {
        for n in 2 * k + 2..=nmax {
            let cond = DegreeSumCondition::adjacent(k as i64).connected();
            let r = min_edges_under_condition(n, cond, opts)?;
            let formula = adjacent_min_edges(n, k)?.to_u64();
            let got = extremum_u64(&r);
            claims.push(claim(
                format!("adjacent-edges/n={n}/k={k}"),
                ADJ_EDGES,
                got == formula,
                format!("exhaustive {}, formula {}", show(got), show(formula)),
                r.witnesses.first().cloned(),
            ));
        }
    }

    // the triangle bound needs n >= 6(k+1)(k+2); small orders are data
    for n in 3..=nmax {
        let k = 1;
        let cond = DegreeSumCondition::adjacent(k).connected();
        let r = min_triangles_under_condition(n, cond, opts)?;
        let got = extremum_u64(&r);
        let formula = adjacent_min_triangles(n, k as usize)?.to_u64();
        let built = adjacent_extremal(n, k as usize)?;
        let built_t = built.count_triangles().to_u64();
        let feasible = cond.holds_on(&built);
        claims.push(claim(
            format!("adjacent-construction-feasible/n={n}/k={k}"),
            ADJ_CONSTRUCTION,
            feasible && got.is_some_and(|g| Some(g) <= built_t),
            format!("construction satisfies condition: {feasible}; exhaustive min {} <= construction {}", show(got), show(built_t)),
            None,
        ));
        let side = match (got, formula) {
            (Some(g), Some(f)) if g < f => "exhaustive minimum below the formula",
            (Some(g), Some(f)) if g == f => "exhaustive minimum equals the formula",
            _ => "exhaustive minimum above the formula",
        };
        claims.push(recorded(
            format!("adjacent-triangles/n={n}/k={k}"),
            ADJ_TRIANGLES,
            format!(
                "exhaustive {}, formula {}, construction {}; {side}",
                show(got),
                show(formula),
                show(built_t)
            ),
        ));
    }

    let mut bad = Vec::new();
    for k in 1..=4 {
        for n in k + 2..=60 {
            let g = adjacent_extremal(n, k)?;
            let ok = DegreeSumCondition::adjacent(k as i64).connected().holds_on(&g)
                && Some(g.count_triangles()) == adjacent_min_triangles(n, k).ok()
                && (n < 2 * k + 2 || Some(Count::from(g.edge_count())) == adjacent_min_edges(n, k).ok());
            if !ok {
                bad.push((n, k));
            }
        }
    }
    claims.push(claim(
        "adjacent-construction/k=1..4/n<=60".into(),
        ADJ_CONSTRUCTION,
        bad.is_empty(),
        format!("condition, edge and triangle counts; failures {bad:?}"),
        None,
    ));
    let mut bad = Vec::new();
    for k in 1..=4 {
        for n in k + 2..=200 {
            let edges = adjacent_extremal_edges(n, k)?;
            if Some(Count::from(edges.len())) != adjacent_min_edges(n, k).ok() && n >= 2 * k + 2 {
                bad.push((n, k));
            }
        }
    }
    claims.push(claim(
        "adjacent-construction-edges/k=1..4/n<=200".into(),
        ADJ_CONSTRUCTION,
        bad.is_empty(),
        format!("failures {bad:?}"),
        None,
    ));

    for n in 3..=nmax.min(7) {
        for k in 1..=2i64 {
            claims.push(low_degree_lemma(n, k, opts)?);
        }
    }
    Ok(claims)
}

fn low_degree_lemma(n: usize, k: i64, opts: &SearchOptions) -> Result<Claim> {
    let cond = DegreeSumCondition::adjacent(k);
    let (acc, _) = fold_graphs(
        n,
        &enum_opts(opts),
        &crate::search::NoPrune,
        || (0u64, Tally::default()),
        |acc, g| {
            let rows = g.rows();
            if !cond.holds(rows) {
                return;
            }
            acc.0 += 1;
            let degs: Vec<i64> = rows.iter().map(|r| r.count_ones() as i64).collect();
            let delta = *degs.iter().min().unwrap_or(&0);
            // d < (n+k)/2  <=>  2d < n+k
            let m = degs.iter().filter(|&&d| 2 * d < n as i64 + k).count() as i64;
            let t = crate::graph::triangles_in(rows) as i64;
            if 2 * t < k * delta * m {
                acc.1.hit(g);
            }
        },
        |a, b| (a.0 + b.0, a.1.merge(b.1)),
    )?;
    Ok(claim(
        format!("low-degree-lemma/n={n}/k={k}"),
        ADJ_LEMMA,
        acc.1.count == 0,
        format!("{} graphs satisfy the condition, {} violations", acc.0, acc.1.count),
        acc.1.witness(),
    ))
}

// ---------------------------------------------------------------- non-adjacent

fn nonadjacent_edges_suite(nmax: usize, opts: &SearchOptions) -> Result<Vec<Claim>> {
    let cond = DegreeSumCondition::nonadjacent(1);
    let mut claims = Vec::new();
    for n in 3..=nmax {
        let r = min_edges_under_condition(n, cond, opts)?;
        let got = extremum_u64(&r);
        let formula = nonadjacent_min_edges(n)?.to_u64();
        claims.push(claim(
            format!("nonadjacent-edges/n={n}"),
            NONADJ_EDGES,
            got == formula,
            format!("exhaustive {}, formula {}", show(got), show(formula)),
            r.witnesses.first().cloned(),
        ));
        let bound = universal_edge_lower_bound(n)?;
        let ok = got.is_some_and(|g| Ratio::from_integer(g as i64) >= bound);
        claims.push(claim(
            format!("universal-bound/n={n}"),
            UNIVERSAL,
            ok,
            format!("exhaustive {} >= {bound}", show(got)),
            None,
        ));
    }
    let mut bad = Vec::new();
    for n in 3..=64 {
        let g = nonadjacent_edge_extremal(n)?;
        let f = nonadjacent_min_edges(n)?;
        let ok = cond.holds_on(&g)
            && Count::from(g.edge_count()) == f
            && Ratio::from_integer(f.to_u64().unwrap_or(0) as i64) >= universal_edge_lower_bound(n)?;
        if !ok {
            bad.push(n);
        }
    }
    claims.push(claim(
        "nonadjacent-construction/n=3..64".into(),
        NONADJ_CONSTRUCTION,
        bad.is_empty(),
        format!("condition, edge count and universal bound; failures {bad:?}"),
        None,
    ));
    Ok(claims)
}

fn nonadjacent_triangles_suite(nmax: usize, opts: &SearchOptions) -> Result<Vec<Claim>> {
    let cond = DegreeSumCondition::nonadjacent(1);
    let mut claims = Vec::new();
    for n in 3..=nmax {
        let r = min_triangles_under_condition(n, cond, opts)?;
        let got = extremum_u64(&r);
        if n % 2 == 1 {
            let formula = nonadjacent_min_triangles_odd(n)?.to_u64();
            claims.push(claim(
                format!("nonadjacent-triangles/n={n}"),
                NONADJ_ODD,
                got == formula,
                format!("exhaustive {}, formula {}", show(got), show(formula)),
                r.witnesses.first().cloned(),
            ));
        } else {
            let light = if n >= 4 {
                even_triangle_light(n)?.count_triangles().to_u64()
            } else {
                None
            };
            claims.push(recorded(
                format!("nonadjacent-triangles/n={n}"),
                NONADJ_EVEN,
                format!(
                    "exhaustive {}, n^2/4 = {}, regular construction {}",
                    show(got),
                    n * n / 4,
                    show(light)
                ),
            ));
        }
    }
    let mut bad = Vec::new();
    for n in (3..=63).step_by(2) {
        let g = nonadjacent_edge_extremal(n)?;
        if Some(g.count_triangles()) != nonadjacent_min_triangles_odd(n).ok() {
            bad.push(n);
        }
    }
    claims.push(claim(
        "odd-construction-triangles/n=3..63".into(),
        NONADJ_ODD,
        bad.is_empty(),
        format!("failures {bad:?}"),
        None,
    ));
    let mut bad = Vec::new();
    let mut last = String::new();
    for n in (4..=64).step_by(2) {
        let g = even_triangle_light(n)?;
        if !cond.holds_on(&g) {
            bad.push(n);
        }
        let t = g.count_triangles().to_u64().unwrap_or(0);
        last = format!("t/n^2 at n={n}: {:.4}", t as f64 / (n * n) as f64);
    }
    claims.push(claim(
        "even-construction/n=4..64".into(),
        NONADJ_EVEN,
        bad.is_empty(),
        format!("condition failures {bad:?}; {last}"),
        None,
    ));
    Ok(claims)
}

// ---------------------------------------------------------------- Lovász–Simonovits

fn ls_suite(nmax: usize, opts: &SearchOptions) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    for n in 3..=nmax {
        let r = verify_lovasz_simonovits(n, opts)?;
        let tight: Vec<String> = r
            .by_excess
            .iter()
            .map(|e| format!("k={}: {} graphs, {} tight, min {}", e.excess, e.graphs, e.tight, show(e.min_triangles)))
            .collect();
        claims.push(claim(
            format!("ls-fact/n={n}"),
            LS_FACT,
            r.holds(),
            format!("{} graphs, {} violations; {}", r.graphs_visited, r.violations, tight.join("; ")),
            r.counterexample.clone(),
        ));
    }
    Ok(claims)
}
