//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` neighbor mask, so neighborhood intersections,
//! degrees and triangle counts are word operations.

mod graph6;

pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Count, Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A simple undirected graph with vertices `0..n`.
///
/// Invariants: adjacency is symmetric, there are no self-loops, and no bit at
/// or above `n` is set in any row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Builds a graph from unordered vertex pairs. Repeated pairs collapse
    /// into a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor masks, validating every invariant.
    pub fn from_adjacency(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(Error::InvalidVertex { vertex, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::param(format!(
                        "adjacency is not symmetric at ({u},{v})"
                    )));
                }
            }
        }
        Ok(Graph {
            n,
            adj: rows.to_vec(),
        })
    }

    pub(crate) fn from_adjacency_unchecked(rows: &[u64]) -> Self {
        debug_assert!(Graph::from_adjacency(rows).is_ok());
        Graph {
            n: rows.len(),
            adj: rows.to_vec(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbor masks, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighbor mask of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// Degrees sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| bits(row >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    /// Number of triangles, as `Σ_{uv ∈ E} |N(u) ∩ N(v)| / 3`.
    pub fn count_triangles(&self) -> Count {
        Count::from(triangles_in(&self.adj))
    }

    pub fn is_triangle_free(&self) -> bool {
        !has_triangle(&self.adj)
    }

    pub fn is_connected(&self) -> bool {
        is_connected_rows(&self.adj)
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| all & !row & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Whether the graph is `K_{x,y}` for some `x, y ≥ 1`.
    pub fn is_complete_bipartite(&self) -> bool {
        is_complete_bipartite_rows(&self.adj)
    }
}

/// Serialized as its graph6 string.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&write_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_graph6(&s).map_err(serde::de::Error::custom)
    }
}

/// `Σ_{u<v, uv ∈ E} |N(u) ∩ N(v)| / 3` on raw rows.
pub(crate) fn triangles_in(rows: &[u64]) -> u64 {
    let mut twice_thrice = 0u64;
    for (u, &row) in rows.iter().enumerate() {
        for v in bits(row >> u >> 1) {
            twice_thrice += (row & rows[u + 1 + v]).count_ones() as u64;
        }
    }
    debug_assert_eq!(twice_thrice % 3, 0);
    twice_thrice / 3
}

pub(crate) fn has_triangle(rows: &[u64]) -> bool {
    rows.iter()
        .enumerate()
        .any(|(u, &row)| bits(row >> u >> 1).any(|d| row & rows[u + 1 + d] != 0))
}

pub(crate) fn is_connected_rows(rows: &[u64]) -> bool {
    let n = rows.len();
    if n <= 1 {
        return true;
    }
    let all = low_mask(n);
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

pub(crate) fn is_complete_bipartite_rows(rows: &[u64]) -> bool {
    let n = rows.len();
    if n < 2 {
        return false;
    }
    let side_b = rows[0];
    if side_b == 0 {
        return false;
    }
    let side_a = low_mask(n) & !side_b;
    rows.iter().enumerate().all(|(v, &row)| {
        if side_a >> v & 1 == 1 {
            row == side_b
        } else {
            row == side_a
        }
    })
}
