//! Deterministic builders for the extremal graphs.
//!
//! Every builder re-derives the degree profile its construction promises and
//! returns [`Error::Audit`] if the built graph disagrees.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, MAX_ORDER};
use crate::{Error, Result};

/// Names one construction together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConstructionId {
    CompleteBipartite { x: usize, y: usize },
    TuranBipartite { n: usize },
    AdjacentExtremal { n: usize, k: usize },
    NonAdjacentEdgeExtremal { n: usize },
    EvenTriangleLight { n: usize },
}

impl ConstructionId {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            ConstructionId::CompleteBipartite { x, y } => complete_bipartite(x, y),
            ConstructionId::TuranBipartite { n } => turan_bipartite(n),
            ConstructionId::AdjacentExtremal { n, k } => adjacent_extremal(n, k),
            ConstructionId::NonAdjacentEdgeExtremal { n } => nonadjacent_edge_extremal(n),
            ConstructionId::EvenTriangleLight { n } => even_triangle_light(n),
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionId::CompleteBipartite { x, y } => write!(f, "bipartite:{x},{y}"),
            ConstructionId::TuranBipartite { n } => write!(f, "turan:{n}"),
            ConstructionId::AdjacentExtremal { n, k } => write!(f, "adjacent:{n},{k}"),
            ConstructionId::NonAdjacentEdgeExtremal { n } => write!(f, "nonadjacent-edges:{n}"),
            ConstructionId::EvenTriangleLight { n } => write!(f, "even-light:{n}"),
        }
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    /// Parses the `Display` form, e.g. `bipartite:6,7` or `adjacent:10,1`.
    fn from_str(s: &str) -> Result<Self> {
        let (tag, args) = s
            .split_once(':')
            .ok_or_else(|| Error::param(format!("expected `kind:params`, got `{s}`")))?;
        let nums = args
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::param(format!("bad parameter `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |want: usize| {
            if nums.len() == want {
                Ok(())
            } else {
                Err(Error::param(format!("`{tag}` takes {want} parameter(s), got {}", nums.len())))
            }
        };
        Ok(match tag.trim() {
            "bipartite" => {
                arity(2)?;
                ConstructionId::CompleteBipartite { x: nums[0], y: nums[1] }
            }
            "turan" => {
                arity(1)?;
                ConstructionId::TuranBipartite { n: nums[0] }
            }
            "adjacent" => {
                arity(2)?;
                ConstructionId::AdjacentExtremal { n: nums[0], k: nums[1] }
            }
            "nonadjacent-edges" => {
                arity(1)?;
                ConstructionId::NonAdjacentEdgeExtremal { n: nums[0] }
            }
            "even-light" => {
                arity(1)?;
                ConstructionId::EvenTriangleLight { n: nums[0] }
            }
            other => return Err(Error::param(format!("unknown construction `{other}`"))),
        })
    }
}

/// `K_{x,y}` with parts `0..x` and `x..x+y`.
pub fn complete_bipartite(x: usize, y: usize) -> Result<Graph> {
    if x + y > MAX_ORDER {
        return Err(Error::TooLarge(x + y));
    }
    Graph::from_edges(x + y, (0..x).flat_map(|u| (x..x + y).map(move |v| (u, v))))
}

/// `K_{⌊n/2⌋,⌈n/2⌉}`.
pub fn turan_bipartite(n: usize) -> Result<Graph> {
    complete_bipartite(n / 2, n - n / 2)
}

/// Edges of the clique `K_{k+1}` on `0..=k` with every other vertex joined to
/// the whole clique. Not limited to 64 vertices.
pub fn adjacent_extremal_edges(n: usize, k: usize) -> Result<Vec<(usize, usize)>> {
    if k < 1 || n < k + 2 {
        return Err(Error::param(format!(
            "adjacent construction needs k >= 1 and n >= k+2, got n={n}, k={k}"
        )));
    }
    let clique = (0..=k).flat_map(|u| (u + 1..=k).map(move |v| (u, v)));
    let spokes = (k + 1..n).flat_map(|w| (0..=k).map(move |c| (c, w)));
    Ok(clique.chain(spokes).collect())
}

/// Clique `K_{k+1}` plus `n-k-1` vertices each joined to exactly the clique.
/// Clique vertices end with degree `n-1`, the rest with degree `k+1`.
pub fn adjacent_extremal(n: usize, k: usize) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let g = Graph::from_edges(n, adjacent_extremal_edges(n, k)?)?;
    let mut expect = vec![n - 1; k + 1];
    expect.extend(std::iter::repeat_n(k + 1, n - k - 1));
    audit_degrees(&g, &expect, "adjacent")?;
    Ok(g)
}

/// Edge-minimal graph for `d(x)+d(y) ≥ n+1` on every non-adjacent pair, by
/// the residue of `n` mod 4 (with `k = ⌊(n+1)/4⌋`):
///
/// * `4k-1`: `K_{2k,2k-1}` with a perfect matching in the `2k` part;
/// * `4k+1`: `K_{2k,2k+1}` with a matching on the first `2k` vertices of the
///   odd part and its last vertex joined to the part's first vertex;
/// * `4k+2`: `K_{2k} ∪ K_{2k+2}` joined by `u_i v_i, u_i v_{i+1}` (`i ≤ 2k-2`)
///   and `u_i v_i, u_i v_{i+2}` (`i ∈ {2k-1, 2k}`), minus the matching
///   `v_2v_3, …, v_{2k-2}v_{2k-1}` (1-indexed);
/// * `4k`: `K_4` for `k = 1`; otherwise `K_{2k-2} ∪ K_{2k+2}` joined by
///   `u_i v_{(i+j) mod (2k-2)}`, `j = 0,1,2` (no wrap when `k = 2`), minus a 3-regular graph on
///   `v_0..v_{2k-3}` (the path `v_0v_1v_2v_3` when `k = 2`, the circulant with
///   offsets `±1, k-1` when `k ≥ 3`).
pub fn nonadjacent_edge_extremal(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("non-adjacent construction needs n >= 3, got {n}")));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let k = (n + 1) / 4;
    match n % 4 {
        3 => odd_bipartite_plus_matching(k),
        1 => odd_bipartite_plus_semi_matching(k),
        2 => two_cliques_4k_plus_2(k),
        _ => two_cliques_4k(k),
    }
}

fn odd_bipartite_plus_matching(k: usize) -> Result<Graph> {
    let (p, q) = (2 * k, 2 * k - 1);
    let n = p + q;
    let mut edges: Vec<_> = (0..p).flat_map(|u| (p..n).map(move |v| (u, v))).collect();
    edges.extend((0..k).map(|i| (2 * i, 2 * i + 1)));
    let g = Graph::from_edges(n, edges)?;
    audit_degrees(&g, &vec![2 * k; n], "n = 4k-1")?;
    Ok(g)
}

fn odd_bipartite_plus_semi_matching(k: usize) -> Result<Graph> {
    let (p, q) = (2 * k, 2 * k + 1);
    let n = p + q;
    let mut edges: Vec<_> = (0..p).flat_map(|u| (p..n).map(move |v| (u, v))).collect();
    edges.extend((0..k).map(|i| (p + 2 * i, p + 2 * i + 1)));
    edges.push((p, n - 1));
    let g = Graph::from_edges(n, edges)?;
    let mut expect = vec![2 * k + 1; n];
    expect[p] = 2 * k + 2;
    audit_degrees(&g, &expect, "n = 4k+1")?;
    Ok(g)
}

/// Disjoint cliques on `0..s` and `s..s+t`.
fn two_cliques(s: usize, t: usize) -> Vec<(usize, usize)> {
    let clique = |base: usize, m: usize| {
        (0..m).flat_map(move |i| (i + 1..m).map(move |j| (base + i, base + j)))
    };
    clique(0, s).chain(clique(s, t)).collect()
}

fn finish(n: usize, mut edges: Vec<(usize, usize)>, removed: &[(usize, usize)]) -> Result<Graph> {
    let norm = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    for &r in removed {
        let before = edges.len();
        edges.retain(|&e| norm(e) != norm(r));
        if edges.len() != before - 1 {
            return Err(Error::Audit(format!("edge {r:?} to remove is not present exactly once")));
        }
    }
    Graph::from_edges(n, edges)
}

fn two_cliques_4k_plus_2(k: usize) -> Result<Graph> {
    let (s, t) = (2 * k, 2 * k + 2);
    let n = s + t;
    // 1-indexed labels as in the construction's description
    let u = |i: usize| i - 1;
    let v = |j: usize| s + j - 1;
    let mut edges = two_cliques(s, t);
    for i in 1..=2 * k - 2 {
        edges.push((u(i), v(i)));
        edges.push((u(i), v(i + 1)));
    }
    for i in [2 * k - 1, 2 * k] {
        edges.push((u(i), v(i)));
        edges.push((u(i), v(i + 2)));
    }
    let removed: Vec<_> = (1..k).map(|m| (v(2 * m), v(2 * m + 1))).collect();
    let g = finish(n, edges, &removed)?;
    let mut expect = vec![2 * k + 1; s];
    expect.extend(std::iter::repeat_n(2 * k + 2, t));
    audit_degrees(&g, &expect, "n = 4k+2")?;
    Ok(g)
}

fn two_cliques_4k(k: usize) -> Result<Graph> {
    if k == 1 {
        return Graph::complete(4);
    }
    let (s, t) = (2 * k - 2, 2 * k + 2);
    let n = s + t;
    let v = |j: usize| s + j;
    let mut edges = two_cliques(s, t);
    // k = 2 joins u_i to v_i, v_{i+1}, v_{i+2} without wrapping
    let wrap = if k == 2 { t } else { s };
    for i in 0..s {
        for j in 0..3 {
            edges.push((i, v((i + j) % wrap)));
        }
    }
    let removed: Vec<_> = if k == 2 {
        vec![(v(0), v(1)), (v(1), v(2)), (v(2), v(3))]
    } else {
        // circulant on v_0..v_{s-1}: offsets +1 (cycle) and s/2 (antipodal matching)
        let cycle = (0..s).map(|i| (v(i), v((i + 1) % s)));
        let antipodal = (0..s / 2).map(|i| (v(i), v(i + s / 2)));
        cycle.chain(antipodal).collect()
    };
    let g = finish(n, edges, &removed)?;
    let mut expect = vec![2 * k; s];
    expect.extend(std::iter::repeat_n(2 * k + 1, t));
    audit_degrees(&g, &expect, "n = 4k")?;
    Ok(g)
}

/// `(n/2+1)`-regular graphs with few triangles for even `n`:
/// `K_{2l,2l}` plus a perfect matching in each part when `n = 4l`, and
/// `K_{2l,2l+2}` plus a Hamiltonian cycle on the larger part when `n = 4l+2`.
pub fn even_triangle_light(n: usize) -> Result<Graph> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::param(format!("even construction needs even n >= 4, got {n}")));
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let l = n / 4;
    let (p, q) = if n.is_multiple_of(4) { (2 * l, 2 * l) } else { (2 * l, 2 * l + 2) };
    let mut edges: Vec<_> = (0..p).flat_map(|u| (p..n).map(move |v| (u, v))).collect();
    if n.is_multiple_of(4) {
        edges.extend((0..l).map(|i| (2 * i, 2 * i + 1)));
        edges.extend((0..l).map(|i| (p + 2 * i, p + 2 * i + 1)));
    } else {
        edges.extend((0..q).map(|i| (p + i, p + (i + 1) % q)));
    }
    let g = Graph::from_edges(n, edges)?;
    audit_degrees(&g, &vec![n / 2 + 1; n], "even")?;
    Ok(g)
}

fn audit_degrees(g: &Graph, expect: &[usize], what: &str) -> Result<()> {
    let got = g.degrees();
    if got != expect {
        return Err(Error::Audit(format!(
            "{what} construction on {} vertices: degrees {got:?}, expected {expect:?}",
            g.order()
        )));
    }
    Ok(())
}
