//! Labeled enumeration of all simple graphs on a fixed vertex set.
//!
//! Edge slots follow graph6 column order `(0,1), (0,2), (1,2), (0,3), …` and
//! the edge mask stores the first slot in its most significant bit, so mask
//! order is lexicographic graph6 order. Graphs are built one vertex at a time:
//! level `j` fixes the back-neighborhood of vertex `j` (a `j`-bit field of the
//! mask), which lets a [`Prune`] predicate cut every extension of an induced
//! subgraph on `0..=j` at once.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::graph::{bits, Graph};
use crate::{Error, Result};

/// Orders enumerated without [`EnumOptions::allow_big`].
pub const DEFAULT_ORDER_LIMIT: usize = 8;

/// Hard ceiling: `C(11,2) = 55` slots still fit a `u64` mask.
pub const MAX_ENUM_ORDER: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[derive(Default)]
pub struct EnumOptions {
    /// Permit orders above [`DEFAULT_ORDER_LIMIT`] (up to [`MAX_ENUM_ORDER`]).
    pub allow_big: bool,
    /// Worker threads; 0 means available parallelism.
    pub workers: usize,
}


impl EnumOptions {
    pub fn with_workers(workers: usize) -> Self {
        EnumOptions {
            workers,
            ..Self::default()
        }
    }

    pub(crate) fn effective_workers(&self) -> usize {
        if self.workers > 0 {
            self.workers
        } else {
            std::thread::available_parallelism().map_or(1, |p| p.get())
        }
    }
}

/// Cuts subtrees of the enumeration.
///
/// `keep(rows, last)` is called once the neighborhoods inside `0..=last` are
/// final; `rows` has length `last + 1`. Returning `false` discards every graph
/// whose induced subgraph on `0..=last` is this one, so the predicate must be
/// hereditary for the search to stay exhaustive.
pub trait Prune: Sync {
    fn keep(&self, rows: &[u64], last: usize) -> bool;
}

impl<F> Prune for F
where
    F: Fn(&[u64], usize) -> bool + Sync,
{
    fn keep(&self, rows: &[u64], last: usize) -> bool {
        self(rows, last)
    }
}

/// Keeps everything.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoPrune;

impl Prune for NoPrune {
    #[inline]
    fn keep(&self, _: &[u64], _: usize) -> bool {
        true
    }
}

/// Keeps only triangle-free graphs. A new triangle must use the newest
/// vertex, so only its back-neighborhood needs checking.
#[derive(Clone, Copy, Debug, Default)]
pub struct TriangleFreePrune;

impl Prune for TriangleFreePrune {
    #[inline]
    fn keep(&self, rows: &[u64], last: usize) -> bool {
        let back = rows[last];
        bits(back).all(|i| rows[i] & back == 0)
    }
}

/// A graph produced by the enumerator.
#[derive(Clone, Copy, Debug)]
pub struct EnumGraph {
    n: usize,
    rows: [u64; MAX_ENUM_ORDER],
    mask: u64,
}

impl EnumGraph {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }

    /// Edge mask in graph6 slot order, first slot most significant.
    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn edge_count(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency_unchecked(self.rows())
    }
}

/// Counters reported by every enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// Complete graphs handed to the visitor.
    pub visited: u64,
    /// Subtrees removed by the prune predicate.
    pub pruned: u64,
}

impl EnumStats {
    fn merge(self, other: EnumStats) -> EnumStats {
        EnumStats {
            visited: self.visited + other.visited,
            pruned: self.pruned + other.pruned,
        }
    }
}

/// `FIELD_SETS[j][f]`: the vertex set encoded by the `j`-bit field value `f`,
/// where vertex 0 is the field's top bit.
fn field_sets() -> &'static Vec<Vec<u64>> {
    static TABLE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..MAX_ENUM_ORDER)
            .map(|j| {
                (0..1u64 << j)
                    .map(|f| (0..j).filter(|&i| f >> (j - 1 - i) & 1 == 1).fold(0, |s, i| s | 1 << i))
                    .collect()
            })
            .collect()
    })
}

pub(crate) fn check_order(n: usize, opts: &EnumOptions) -> Result<()> {
    let limit = if opts.allow_big { MAX_ENUM_ORDER } else { DEFAULT_ORDER_LIMIT };
    if n > limit {
        return Err(Error::SearchRefused {
            n,
            edges: n * n.saturating_sub(1) / 2,
            limit,
        });
    }
    Ok(())
}

struct Walker<'a, P: Prune, V: FnMut(&EnumGraph)> {
    prune: &'a P,
    visit: V,
    stats: EnumStats,
    table: &'static [Vec<u64>],
}

impl<P: Prune, V: FnMut(&EnumGraph)> Walker<'_, P, V> {
    fn descend(&mut self, g: &mut EnumGraph, level: usize) {
        if level >= g.n {
            self.stats.visited += 1;
            (self.visit)(g);
            return;
        }
        let bit = 1u64 << level;
        let base = g.mask << level;
        for (f, &set) in self.table[level].iter().enumerate() {
            g.rows[level] = set;
            for i in bits(set) {
                g.rows[i] |= bit;
            }
            if self.prune.keep(&g.rows[..=level], level) {
                g.mask = base | f as u64;
                self.descend(g, level + 1);
            } else {
                self.stats.pruned += 1;
            }
            for i in bits(set) {
                g.rows[i] &= !bit;
            }
        }
        g.rows[level] = 0;
        g.mask = base >> level;
    }
}

fn root(n: usize) -> EnumGraph {
    EnumGraph {
        n,
        rows: [0; MAX_ENUM_ORDER],
        mask: 0,
    }
}

/// Visits every labeled graph on `n` vertices that survives `prune`, in
/// increasing mask order, on the calling thread.
pub fn enumerate_graphs<P, V>(n: usize, opts: &EnumOptions, prune: &P, visit: V) -> Result<EnumStats>
where
    P: Prune,
    V: FnMut(&EnumGraph),
{
    check_order(n, opts)?;
    let mut walker = Walker {
        prune,
        visit,
        stats: EnumStats::default(),
        table: field_sets(),
    };
    walker.descend(&mut root(n), 1);
    Ok(walker.stats)
}

/// Parallel fold over the same sequence [`enumerate_graphs`] visits.
///
/// The mask space is split by fixing the fields of the first few vertices
/// into at least four prefixes per worker. Each prefix is folded from `init()`
/// and the partial results are merged left to right in mask order, so the
/// result does not depend on the worker count as long as `merge` is
/// associative.
pub fn fold_graphs<A, P, I, V, M>(
    n: usize,
    opts: &EnumOptions,
    prune: &P,
    init: I,
    visit: V,
    merge: M,
) -> Result<(A, EnumStats)>
where
    A: Send,
    P: Prune,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &EnumGraph) + Sync,
    M: Fn(A, A) -> A,
{
    check_order(n, opts)?;
    let workers = opts.effective_workers();
    let target = 4 * workers as u64;
    // fix levels 1..=depth; their fields span C(depth+1, 2) mask bits
    let mut depth = 0;
    while depth + 1 < n && 1u64 << ((depth + 1) * depth / 2) < target {
        depth += 1;
    }

    let table = field_sets();
    let mut prefixes = Vec::new();
    let mut collect = Walker {
        prune,
        visit: |g: &EnumGraph| prefixes.push(*g),
        stats: EnumStats::default(),
        table,
    };
    let mut start = root(depth + 1);
    collect.descend(&mut start, 1);
    let prefix_stats = collect.stats;
    let prefix_pruned = prefix_stats.pruned;

    let run = |prefix: &EnumGraph| {
        let mut acc = init();
        let mut g = *prefix;
        g.n = n;
        let mut walker = Walker {
            prune,
            visit: |eg: &EnumGraph| visit(&mut acc, eg),
            stats: EnumStats::default(),
            table,
        };
        walker.descend(&mut g, depth + 1);
        let stats = walker.stats;
        (acc, stats)
    };

    let partials: Vec<(A, EnumStats)> = if workers <= 1 || prefixes.len() <= 1 {
        prefixes.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))?;
        pool.install(|| prefixes.par_iter().map(run).collect())
    };

    let mut stats = EnumStats {
        visited: 0,
        pruned: prefix_pruned,
    };
    let mut acc: Option<A> = None;
    for (part, s) in partials {
        stats = stats.merge(s);
        acc = Some(match acc {
            None => part,
            Some(prev) => merge(prev, part),
        });
    }
    Ok((acc.unwrap_or_else(&init), stats))
}

#[cfg(test)]
pub(crate) fn passes_triangle_free(rows: &[u64]) -> bool {
    !crate::graph::has_triangle(rows)
}
