//! Exhaustive extremal searches over labeled graphs.

mod enumerate;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use enumerate::{
    enumerate_graphs, fold_graphs, EnumGraph, EnumOptions, EnumStats, NoPrune, Prune,
    TriangleFreePrune, DEFAULT_ORDER_LIMIT, MAX_ENUM_ORDER,
};

use crate::bounds::lovasz_simonovits_bound;
use crate::counting::{stars_on_edge_small, DoubleStar};
use crate::graph::{bits, is_connected_rows, triangles_in, Graph};
use crate::{Count, Error, Result};

/// Which vertex pairs a degree-sum condition constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    AdjacentPairs,
    NonAdjacentPairs,
}

/// `d(x) + d(y) ≥ n + offset` for every pair in `scope`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSumCondition {
    pub scope: Scope,
    pub offset: i64,
    pub require_connected: bool,
    pub forbid_isolated: bool,
}

impl DegreeSumCondition {
    /// Every edge has degree sum at least `n + k`.
    pub fn adjacent(k: i64) -> Self {
        DegreeSumCondition {
            scope: Scope::AdjacentPairs,
            offset: k,
            require_connected: false,
            forbid_isolated: false,
        }
    }

    /// Every non-edge has degree sum at least `n + k`.
    pub fn nonadjacent(k: i64) -> Self {
        DegreeSumCondition {
            scope: Scope::NonAdjacentPairs,
            offset: k,
            require_connected: false,
            forbid_isolated: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.require_connected = true;
        self
    }

    pub fn without_isolated(mut self) -> Self {
        self.forbid_isolated = true;
        self
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.offset < -(n as i64) {
            return Err(Error::param(format!(
                "degree-sum offset {} below -n = -{n}",
                self.offset
            )));
        }
        Ok(())
    }

    fn threshold(&self, n: usize) -> i64 {
        n as i64 + self.offset
    }

    /// Checks the condition on a complete adjacency.
    pub fn holds(&self, rows: &[u64]) -> bool {
        let n = rows.len();
        let threshold = self.threshold(n);
        let mut deg = [0i64; 64];
        for (d, &row) in deg.iter_mut().zip(rows) {
            *d = row.count_ones() as i64;
        }
        if self.forbid_isolated && deg[..n].contains(&0) {
            return false;
        }
        let full = crate::graph::low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            let partners = match self.scope {
                Scope::AdjacentPairs => row,
                Scope::NonAdjacentPairs => !row & full & !(1u64 << u),
            };
            // pairs counted once, from their smaller end
            if bits(partners >> u >> 1).any(|d| deg[u] + deg[u + 1 + d] < threshold) {
                return false;
            }
        }
        !self.require_connected || is_connected_rows(rows)
    }

    /// Holds on `Graph` values.
    pub fn holds_on(&self, g: &Graph) -> bool {
        self.holds(g.rows())
    }
}

/// Cuts partial graphs whose decided pairs can no longer reach the threshold:
/// a vertex in `0..=last` gains at most one neighbor per undecided vertex.
struct ConditionPrune {
    n: usize,
    threshold: i64,
    scope: Scope,
}

impl Prune for ConditionPrune {
    fn keep(&self, rows: &[u64], last: usize) -> bool {
        let need = self.threshold - 2 * (self.n - 1 - last) as i64;
        if need <= 0 {
            return true;
        }
        let decided = crate::graph::low_mask(last + 1);
        for (u, &row) in rows.iter().enumerate() {
            let du = row.count_ones() as i64;
            let partners = match self.scope {
                Scope::AdjacentPairs => row,
                Scope::NonAdjacentPairs => !row & decided & !(1u64 << u),
            };
            if bits(partners >> u >> 1).any(|d| du + (rows[u + 1 + d].count_ones() as i64) < need) {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    MinEdges,
    MinTriangles,
    MaxDoubleStars,
}

/// Search parameters shared by every exhaustive run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub allow_big: bool,
    /// Worker threads; 0 means available parallelism.
    pub workers: usize,
    /// Witnesses kept, first ones in graph6 order.
    pub witness_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            allow_big: false,
            workers: 0,
            witness_cap: 8,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> Self {
        SearchOptions {
            workers,
            ..Self::default()
        }
    }

    fn enumeration(&self) -> EnumOptions {
        EnumOptions {
            allow_big: self.allow_big,
            workers: self.workers,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub objective: Objective,
    pub condition: Option<DegreeSumCondition>,
    pub double_star: Option<DoubleStar>,
    /// Absent when no graph is feasible.
    pub extremum: Option<Count>,
    pub witnesses: Vec<Graph>,
    pub graphs_visited: u64,
    pub graphs_satisfying: u64,
    pub subtrees_pruned: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

/// Running extremum; higher `score` wins, ties keep the earliest graphs.
#[derive(Clone, Debug)]
struct Best {
    score: Option<i128>,
    hits: Vec<EnumGraph>,
    satisfying: u64,
    cap: usize,
}

impl Best {
    fn new(cap: usize) -> Self {
        Best {
            score: None,
            hits: Vec::new(),
            satisfying: 0,
            cap,
        }
    }

    fn offer(&mut self, score: i128, g: &EnumGraph) {
        self.satisfying += 1;
        match self.score {
            Some(s) if s > score => {}
            Some(s) if s == score => {
                if self.hits.len() < self.cap {
                    self.hits.push(*g);
                }
            }
            _ => {
                self.score = Some(score);
                self.hits.clear();
                if self.cap > 0 {
                    self.hits.push(*g);
                }
            }
        }
    }

    /// `self` precedes `later` in mask order.
    fn merge(mut self, later: Best) -> Best {
        self.satisfying += later.satisfying;
        match (self.score, later.score) {
            (_, None) => {}
            (None, Some(_)) => {
                self.score = later.score;
                self.hits = later.hits;
            }
            (Some(a), Some(b)) if b > a => {
                self.score = Some(b);
                self.hits = later.hits;
            }
            (Some(a), Some(b)) if a == b => {
                let room = self.cap.saturating_sub(self.hits.len());
                self.hits.extend(later.hits.into_iter().take(room));
            }
            _ => {}
        }
        self
    }
}

fn run_best<P, S>(
    n: usize,
    opts: &SearchOptions,
    prune: &P,
    score: S,
) -> Result<(Best, EnumStats, Duration)>
where
    P: Prune,
    S: Fn(&EnumGraph) -> Option<i128> + Sync,
{
    let start = Instant::now();
    let cap = opts.witness_cap;
    let (best, stats) = fold_graphs(
        n,
        &opts.enumeration(),
        prune,
        || Best::new(cap),
        |acc, g| {
            if let Some(s) = score(g) {
                acc.offer(s, g);
            }
        },
        Best::merge,
    )?;
    Ok((best, stats, start.elapsed()))
}

fn report(
    n: usize,
    objective: Objective,
    condition: Option<DegreeSumCondition>,
    double_star: Option<DoubleStar>,
    run: (Best, EnumStats, Duration),
    extremum: impl Fn(i128) -> Count,
) -> SearchReport {
    let (best, stats, wall_time) = run;
    SearchReport {
        n,
        objective,
        condition,
        double_star,
        extremum: best.score.map(extremum),
        witnesses: best.hits.iter().map(EnumGraph::to_graph).collect(),
        graphs_visited: stats.visited,
        graphs_satisfying: best.satisfying,
        subtrees_pruned: stats.pruned,
        wall_time,
    }
}

fn double_stars_in(rows: &[u64], ds: DoubleStar) -> u128 {
    let mut total = 0u128;
    for (u, &row) in rows.iter().enumerate() {
        let du = row.count_ones() as usize;
        for d in bits(row >> u >> 1) {
            let dv = rows[u + 1 + d].count_ones() as usize;
            total += stars_on_edge_small(du, dv, ds);
        }
    }
    total
}

/// Largest number of copies of `ds` in a triangle-free graph on `n` vertices.
pub fn max_double_stars_exhaustive(
    n: usize,
    ds: DoubleStar,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    let run = run_best(n, opts, &TriangleFreePrune, |g| {
        Some(double_stars_in(g.rows(), ds) as i128)
    })?;
    Ok(report(n, Objective::MaxDoubleStars, None, Some(ds), run, |s| {
        Count::from(s as u128)
    }))
}

fn min_under_condition(
    n: usize,
    cond: DegreeSumCondition,
    opts: &SearchOptions,
    objective: Objective,
    value: fn(&EnumGraph) -> u64,
) -> Result<SearchReport> {
    cond.validate(n)?;
    let prune = ConditionPrune {
        n,
        threshold: cond.threshold(n),
        scope: cond.scope,
    };
    let run = run_best(n, opts, &prune, |g| {
        cond.holds(g.rows()).then(|| -(value(g) as i128))
    })?;
    Ok(report(n, objective, Some(cond), None, run, |s| {
        Count::from((-s) as u128)
    }))
}

/// Fewest edges over graphs on `n` vertices satisfying `cond`.
pub fn min_edges_under_condition(
    n: usize,
    cond: DegreeSumCondition,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    min_under_condition(n, cond, opts, Objective::MinEdges, |g| g.edge_count() as u64)
}

/// Fewest triangles over graphs on `n` vertices satisfying `cond`.
pub fn min_triangles_under_condition(
    n: usize,
    cond: DegreeSumCondition,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    min_under_condition(n, cond, opts, Objective::MinTriangles, |g| triangles_in(g.rows()))
}

/// Per-excess tally for the Lovász–Simonovits check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsExcess {
    /// `k = e - ⌊n²/4⌋`
    pub excess: u64,
    pub bound: Count,
    pub graphs: u64,
    /// Graphs with exactly `bound` triangles.
    pub tight: u64,
    pub min_triangles: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsReport {
    pub n: usize,
    pub graphs_visited: u64,
    pub violations: u64,
    /// First violating graph in graph6 order.
    pub counterexample: Option<Graph>,
    pub by_excess: Vec<LsExcess>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl LsReport {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug)]
struct LsAcc {
    graphs: Vec<u64>,
    tight: Vec<u64>,
    min: Vec<Option<u64>>,
    violations: u64,
    first: Option<EnumGraph>,
}

impl LsAcc {
    fn new(ks: usize) -> Self {
        LsAcc {
            graphs: vec![0; ks],
            tight: vec![0; ks],
            min: vec![None; ks],
            violations: 0,
            first: None,
        }
    }

    fn merge(mut self, later: LsAcc) -> LsAcc {
        for i in 0..self.graphs.len() {
            self.graphs[i] += later.graphs[i];
            self.tight[i] += later.tight[i];
            self.min[i] = match (self.min[i], later.min[i]) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        }
        self.violations += later.violations;
        self.first = self.first.or(later.first);
        self
    }
}

/// Checks `t₃ ≥ k⌊n/2⌋` for every graph with `⌊n²/4⌋ + k` edges, `1 ≤ k < n/2`.
pub fn verify_lovasz_simonovits(n: usize, opts: &SearchOptions) -> Result<LsReport> {
    let start = Instant::now();
    let turan = (n * n / 4) as u64;
    // valid excesses 1..=kmax
    let kmax = (n as u64).saturating_sub(1) / 2;
    let ks = kmax as usize;
    let (acc, stats) = fold_graphs(
        n,
        &opts.enumeration(),
        &NoPrune,
        || LsAcc::new(ks),
        |acc, g| {
            let e = g.edge_count() as u64;
            if e <= turan || e - turan > kmax {
                return;
            }
            let i = (e - turan - 1) as usize;
            let t = triangles_in(g.rows());
            let bound = (e - turan) * (n / 2) as u64;
            acc.graphs[i] += 1;
            acc.min[i] = Some(acc.min[i].map_or(t, |m| m.min(t)));
            if t == bound {
                acc.tight[i] += 1;
            } else if t < bound {
                acc.violations += 1;
                acc.first.get_or_insert(*g);
            }
        },
        LsAcc::merge,
    )?;
    let by_excess = (0..ks)
        .map(|i| {
            let b = lovasz_simonovits_bound(n, turan + i as u64 + 1);
            debug_assert!(b.valid);
            LsExcess {
                excess: b.excess,
                bound: b.bound,
                graphs: acc.graphs[i],
                tight: acc.tight[i],
                min_triangles: acc.min[i],
            }
        })
        .collect();
    Ok(LsReport {
        n,
        graphs_visited: stats.visited,
        violations: acc.violations,
        counterexample: acc.first.map(|g| g.to_graph()),
        by_excess,
        wall_time: start.elapsed(),
    })
}
