//! Counting copies of the double star `S_{a,b}`.
//!
//! A double star is two stars of degrees `a` and `b` whose centers are joined
//! by the central edge. Copies are subgraphs, not induced subgraphs. Three
//! independent routes are provided:
//!
//! * [`count_double_stars_trianglefree`]: the per-edge binomial sum, valid
//!   only when the two endpoints of an edge share no neighbor;
//! * [`count_double_stars_bipartite`]: the closed form for `K_{x,n-x}`;
//! * [`count_double_stars_oracle`]: explicit enumeration of leaf sets, valid
//!   for any graph.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};
use crate::{Count, Error, Result};

/// The pattern `S_{a,b}` with `1 ≤ a ≤ b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoubleStar {
    a: u32,
    b: u32,
}

impl DoubleStar {
    /// Star degrees are swapped so that `a ≤ b`.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::param(format!(
                "double star degrees must be at least 1, got ({a},{b})"
            )));
        }
        Ok(DoubleStar {
            a: a.min(b),
            b: a.max(b),
        })
    }

    #[inline]
    pub fn a(&self) -> u32 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> u32 {
        self.b
    }

    #[inline]
    pub fn is_symmetric(&self) -> bool {
        self.a == self.b
    }
}

impl fmt::Display for DoubleStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{},{}", self.a, self.b)
    }
}

impl FromStr for DoubleStar {
    type Err = Error;

    /// Accepts `a,b`, optionally prefixed with `S`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['S', 's']);
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| Error::param(format!("expected `a,b`, got `{s}`")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::param(format!("bad star degree `{t}` in `{s}`")))
        };
        DoubleStar::new(parse(a)?, parse(b)?)
    }
}

/// `C(x, r)`, taken as zero when `x < r` (including negative `x`).
pub fn binom(x: i64, r: u32) -> Count {
    Count::from(binom_big(x, r))
}

pub(crate) fn binom_big(x: i64, r: u32) -> BigUint {
    if x < r as i64 {
        return BigUint::from(0u32);
    }
    let x = x as u64;
    let r = r as u64;
    let r = r.min(x - r);
    let mut acc = BigUint::from(1u32);
    // acc = C(x - r + i, i) after step i, always an integer
    for i in 1..=r {
        acc *= x - r + i;
        acc /= i;
    }
    acc
}

/// Copies of `ds` whose central edge joins vertices of degrees `du` and `dv`,
/// assuming the endpoints share no neighbor.
///
/// For `a = b` the two orientations describe the same subgraph, so the count
/// is the single product `C(du-1,a)·C(dv-1,a)`.
pub fn stars_on_edge(du: usize, dv: usize, ds: DoubleStar) -> Count {
    Count::from(stars_on_edge_big(du, dv, ds))
}

fn stars_on_edge_big(du: usize, dv: usize, ds: DoubleStar) -> BigUint {
    let (x, y) = (du as i64 - 1, dv as i64 - 1);
    if ds.is_symmetric() {
        binom_big(x, ds.a) * binom_big(y, ds.a)
    } else {
        binom_big(x, ds.a) * binom_big(y, ds.b) + binom_big(x, ds.b) * binom_big(y, ds.a)
    }
}

/// Sum of [`stars_on_edge`] over all edges. Fails on graphs with a triangle,
/// where the formula overcounts.
pub fn count_double_stars_trianglefree(g: &Graph, ds: DoubleStar) -> Result<Count> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let deg = g.degrees();
    let total: BigUint = g
        .edges()
        .map(|(u, v)| stars_on_edge_big(deg[u], deg[v], ds))
        .sum();
    Ok(Count::from(total))
}

/// `n(S_{a,b}, K_{x,n-x}) = x(n-x)·stars_on_edge(x, n-x)`, without building
/// the graph.
pub fn count_double_stars_bipartite(n: usize, x: usize, ds: DoubleStar) -> Result<Count> {
    if x > n {
        return Err(Error::param(format!("split {x} exceeds order {n}")));
    }
    let y = n - x;
    if x == 0 || y == 0 {
        return Ok(Count::zero());
    }
    Ok(Count::from(BigUint::from(x * y) * stars_on_edge_big(x, y, ds)))
}

/// Counts subgraphs isomorphic to `ds` by enumerating, for every ordered edge
/// `(u, v)`, the `a`-sets `A ⊆ N(u)∖{v}` and the disjoint `b`-sets
/// `B ⊆ N(v)∖({u} ∪ A)`. When `a = b` each copy is seen from both ends and the
/// total is halved.
///
/// Intended for small graphs; the cost grows with `C(Δ, a)·C(Δ, b)` per edge.
pub fn count_double_stars_oracle(g: &Graph, ds: DoubleStar) -> Count {
    let mut total: u128 = 0;
    for u in 0..g.order() {
        for v in bits(g.neighbors(u)) {
            let left = g.neighbors(u) & !(1u64 << v);
            let right = g.neighbors(v) & !(1u64 << u);
            for_each_subset(left, ds.a, |leaves_a| {
                for_each_subset(right & !leaves_a, ds.b, |_| total += 1);
            });
        }
    }
    if ds.is_symmetric() {
        debug_assert_eq!(total % 2, 0);
        total /= 2;
    }
    Count::from(total)
}

/// Calls `f` on every subset of `mask` with exactly `k` elements.
pub(crate) fn for_each_subset(mask: u64, k: u32, mut f: impl FnMut(u64)) {
    let elems: Vec<usize> = bits(mask).collect();
    let k = k as usize;
    if k > elems.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().fold(0u64, |s, &i| s | 1 << elems[i]));
        // advance to the next k-combination in lexicographic order
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + elems.len() - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `C(x, r)` over `u128` for small arguments, used in hot enumeration loops.
#[inline]
pub(crate) fn binom_small(x: i64, r: u32) -> u128 {
    if x < r as i64 {
        return 0;
    }
    let (x, r) = (x as u128, r as u128);
    let mut acc = 1u128;
    for i in 1..=r {
        acc = acc * (x - r + i) / i;
    }
    acc
}

#[inline]
pub(crate) fn stars_on_edge_small(du: usize, dv: usize, ds: DoubleStar) -> u128 {
    let (x, y) = (du as i64 - 1, dv as i64 - 1);
    if ds.is_symmetric() {
        binom_small(x, ds.a) * binom_small(y, ds.a)
    } else {
        binom_small(x, ds.a) * binom_small(y, ds.b) + binom_small(x, ds.b) * binom_small(y, ds.a)
    }
}
