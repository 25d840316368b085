//! Closed-form bounds, difference formulas and split optimizers.
//!
//! Pure arithmetic: nothing here builds a graph. Integer quantities are exact;
//! the only floating-point routines are [`s14_root`] and the continuous split
//! optimizer behind [`optimal_split_continuous`] and [`table_xmax`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{binom, count_double_stars_bipartite, DoubleStar};
use crate::{Count, Error, Result};

/// `Δ(n-Δ)`: the most edges a triangle-free graph with maximum degree `Δ` can
/// have.
pub fn max_edges_triangle_free(n: usize, delta: usize) -> Result<Count> {
    if delta >= n {
        return Err(Error::param(format!("maximum degree {delta} must be below n = {n}")));
    }
    Ok(Count::from((delta * (n - delta)) as u64))
}

/// `C(k+1,2)(n-k-1) + C(k+1,3)` triangles, forced when every edge has degree
/// sum at least `n+k` (connected, `n` large).
pub fn adjacent_min_triangles(n: usize, k: usize) -> Result<Count> {
    if k < 1 || n < k + 2 {
        return Err(Error::param(format!("need k >= 1 and n >= k+2, got n={n}, k={k}")));
    }
    let k = k as i64;
    let c2 = binom(k + 1, 2);
    Ok(&c2 * &Count::from(n as u64 - k as u64 - 1) + binom(k + 1, 3))
}

/// `(k+1)n - C(k+2,2)` edges, forced under the same condition for
/// `n ≥ 2k+2`.
pub fn adjacent_min_edges(n: usize, k: usize) -> Result<Count> {
    if n < 2 * k + 2 {
        return Err(Error::param(format!("need n >= 2k+2, got n={n}, k={k}")));
    }
    Ok(Count::from(adjacent_edge_formula(n as u64, k as u64)))
}

/// `(k+1)n - C(k+2,2)` without the range check; also the edge count of the
/// adjacent construction for every `n ≥ k+2`.
pub(crate) fn adjacent_edge_formula(n: u64, k: u64) -> u64 {
    (k + 1) * n - (k + 2) * (k + 1) / 2
}

/// Residue class of `n` modulo 4, written as `n = 4k + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ResidueClass {
    /// `n = 4k - 1`
    MinusOne,
    /// `n = 4k`
    Zero,
    /// `n = 4k + 1`
    PlusOne,
    /// `n = 4k + 2`
    PlusTwo,
}

/// Minimum edge count under the non-adjacent condition `d(x)+d(y) ≥ n+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewiseEdgeBound {
    pub n: usize,
    /// `⌊(n+1)/4⌋`
    pub k: usize,
    pub class: ResidueClass,
    pub value: Count,
}

impl PiecewiseEdgeBound {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param(format!("need n >= 3, got {n}")));
        }
        let k = (n + 1) / 4;
        let kk = k as u64;
        let (class, value) = match n % 4 {
            3 => (ResidueClass::MinusOne, 4 * kk * kk - kk),
            0 => (ResidueClass::Zero, 4 * kk * kk + kk + 1),
            1 => (ResidueClass::PlusOne, 4 * kk * kk + 3 * kk + 1),
            _ => (ResidueClass::PlusTwo, 4 * kk * kk + 5 * kk + 2),
        };
        Ok(PiecewiseEdgeBound {
            n,
            k,
            class,
            value: Count::from(value),
        })
    }
}

pub fn nonadjacent_min_edges(n: usize) -> Result<Count> {
    Ok(PiecewiseEdgeBound::new(n)?.value)
}

/// Minimum triangle count under the non-adjacent condition for odd `n`:
/// `k(2k-1)` for `n = 4k-1`, `2k(k+1)` for `n = 4k+1`.
pub fn nonadjacent_min_triangles_odd(n: usize) -> Result<Count> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::param(format!("need odd n >= 3, got {n}")));
    }
    let k = ((n + 1) / 4) as u64;
    Ok(Count::from(if n % 4 == 3 {
        k * (2 * k - 1)
    } else {
        2 * k * (k + 1)
    }))
}

/// Result of the Lovász–Simonovits triangle bound for a given edge count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsBound {
    /// `k = e - ⌊n²/4⌋`, or 0 when `e` is below the Turán number.
    pub excess: u64,
    /// `k·⌊n/2⌋`
    pub bound: Count,
    /// The bound is only a theorem when `k < n/2`.
    pub valid: bool,
}

pub fn lovasz_simonovits_bound(n: usize, e: u64) -> LsBound {
    let turan = (n * n / 4) as u64;
    let excess = e.saturating_sub(turan);
    LsBound {
        excess,
        bound: Count::from(excess * (n / 2) as u64),
        valid: 2 * excess < n as u64,
    }
}

/// `(4n² + 4n - 9)/16`, the residue-independent lower bound on the edge count
/// under the non-adjacent condition.
pub fn universal_edge_lower_bound(n: usize) -> Result<Ratio<i64>> {
    if n < 3 {
        return Err(Error::param(format!("need n >= 3, got {n}")));
    }
    let n = n as i64;
    Ok(Ratio::new(4 * n * n + 4 * n - 9, 16))
}

/// `f(x) = n(S_{a,b}, K_{x,n-x})` for a fixed order and double star.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitObjective {
    n: usize,
    ds: DoubleStar,
}

impl SplitObjective {
    pub fn new(n: usize, ds: DoubleStar) -> Result<Self> {
        if n < 2 {
            return Err(Error::param(format!("need n >= 2, got {n}")));
        }
        Ok(SplitObjective { n, ds })
    }

    pub fn value(&self, x: usize) -> Result<Count> {
        count_double_stars_bipartite(self.n, x, self.ds)
    }

    /// `f(x+1) - f(x)` by direct evaluation.
    pub fn direct_difference(&self, x: usize) -> Result<BigInt> {
        let hi = BigInt::from(self.value(x + 1)?.into_biguint());
        let lo = BigInt::from(self.value(x)?.into_biguint());
        Ok(hi - lo)
    }
}

fn check_difference_range(n: usize, x: usize) -> Result<()> {
    if x < 1 || x + 2 > n {
        return Err(Error::param(format!("need 1 <= x <= n-2, got n={n}, x={x}")));
    }
    Ok(())
}

/// `x/d · product`, asserting the division is exact.
fn exact_div(product: BigInt, d: i64) -> BigInt {
    let (q, r) = product.div_rem(&BigInt::from(d));
    assert!(r.is_zero(), "difference formula is not integral");
    q
}

/// Closed form of `f(n,x+1) - f(n,x)` for `S_{1,3}`:
/// `x/3 (n-1-2x)(n-1-x)(3x² + (3-3n)x + n² - 6n + 14)`.
pub fn s13_forward_difference(n: usize, x: usize) -> Result<BigInt> {
    check_difference_range(n, x)?;
    let (n, x) = (BigInt::from(n), BigInt::from(x));
    let one = BigInt::from(1);
    let quad = 3 * &x * &x + (3 - 3 * &n) * &x + (&n * &n - 6 * &n + 14);
    let product = &x * (&n - &one - 2 * &x) * (&n - &one - &x) * quad;
    Ok(exact_div(product, 3))
}

/// Closed form of `f(n,x+1) - f(n,x)` for `S_{1,4}`:
/// `x/24 (n-6)(n-1-2x)(n-1-x)(9x² + (9-9n)x + 2n² - 9n + 22)`.
pub fn s14_forward_difference(n: usize, x: usize) -> Result<BigInt> {
    check_difference_range(n, x)?;
    let (n, x) = (BigInt::from(n), BigInt::from(x));
    let one = BigInt::from(1);
    let quad = 9 * &x * &x + (9 - 9 * &n) * &x + (2 * &n * &n - 9 * &n + 22);
    let product = &x * (&n - 6) * (&n - &one - 2 * &x) * (&n - &one - &x) * quad;
    Ok(exact_div(product, 24))
}

/// Larger root `(3n - 3 + √(n² + 18n - 79))/6` of the quadratic factor in the
/// `S_{1,4}` difference; the best split lies next to it.
pub fn s14_root(n: usize) -> Result<f64> {
    let nf = n as f64;
    let disc = nf * nf + 18.0 * nf - 79.0;
    if n < 4 || disc <= 0.0 {
        return Err(Error::param(format!("discriminant is not positive for n = {n}")));
    }
    Ok((3.0 * nf - 3.0 + disc.sqrt()) / 6.0)
}

/// Best integer split for `n(S_{a,b}, K_{x,n-x})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitOptimum {
    /// Smallest maximizing `x` with `x ≥ ⌈n/2⌉`.
    pub x: usize,
    pub value: Count,
    /// All maximizing `x` in `⌈n/2⌉..n`, increasing.
    pub tied: Vec<usize>,
}

/// Scans every `x` in `⌈n/2⌉ ..= n-1` exactly.
pub fn optimal_split_integer(n: usize, ds: DoubleStar) -> Result<SplitOptimum> {
    let f = SplitObjective::new(n, ds)?;
    let mut best: Option<SplitOptimum> = None;
    for x in n.div_ceil(2)..n {
        let v = f.value(x)?;
        match &mut best {
            Some(b) if v < b.value => {}
            Some(b) if v == b.value => b.tied.push(x),
            _ => best = Some(SplitOptimum { x, value: v, tied: vec![x] }),
        }
    }
    Ok(best.expect("range is nonempty for n >= 2"))
}

const SCAN_POINTS: usize = 100_000;

/// Relative gap below which two shape values count as tied.
const TIE: f64 = 1e-12;

fn beats(v: f64, incumbent: f64) -> bool {
    v > incumbent * (1.0 + TIE)
}

/// `x^a (1-x)^b + x^b (1-x)^a`
pub fn split_shape(ds: DoubleStar, x: f64) -> f64 {
    let (a, b) = (ds.a() as i32, ds.b() as i32);
    let y = 1.0 - x;
    x.powi(a) * y.powi(b) + x.powi(b) * y.powi(a)
}

/// Maximizer of [`split_shape`] over `[1/2, 1]`: a dense scan followed by
/// ternary refinement inside the best grid cell pair. Returns exactly `0.5`
/// when the maximum sits at the left endpoint (within `tol`).
pub fn optimal_split_continuous(ds: DoubleStar, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::param(format!("tolerance must be positive, got {tol}")));
    }
    let step = 0.5 / SCAN_POINTS as f64;
    let at = |i: usize| 0.5 + step * i as f64;
    let mut best = (0usize, split_shape(ds, 0.5));
    for i in 1..=SCAN_POINTS {
        let v = split_shape(ds, at(i));
        if beats(v, best.1) {
            best = (i, v);
        }
    }
    let mut lo = at(best.0.saturating_sub(1));
    let mut hi = at((best.0 + 1).min(SCAN_POINTS));
    let mut rounds = 0;
    while hi - lo > tol && rounds < 200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        // ties move right so a plateau resolves to its left edge
        if split_shape(ds, m1) >= split_shape(ds, m2) {
            hi = m2;
        } else {
            lo = m1;
        }
        rounds += 1;
    }
    let x = 0.5 * (lo + hi);
    if x - 0.5 < tol || !beats(split_shape(ds, x), split_shape(ds, 0.5)) {
        Ok(0.5)
    } else {
        Ok(x)
    }
}

/// `[a-1][b-1]` holds the maximizer for `1 ≤ a ≤ a_max`, `a ≤ b ≤ b_max`;
/// cells with `b < a` are `None`.
pub fn table_xmax(a_max: u32, b_max: u32, tol: f64) -> Result<Vec<Vec<Option<f64>>>> {
    if a_max < 1 || b_max < a_max {
        return Err(Error::param(format!("need 1 <= a_max <= b_max, got {a_max}, {b_max}")));
    }
    let cells: Vec<(u32, u32)> = (1..=a_max)
        .flat_map(|a| (a..=b_max).map(move |b| (a, b)))
        .collect();
    let values = cells
        .par_iter()
        .map(|&(a, b)| optimal_split_continuous(DoubleStar::new(a, b)?, tol))
        .collect::<Result<Vec<f64>>>()?;
    let mut table = vec![vec![None; b_max as usize]; a_max as usize];
    for (&(a, b), v) in cells.iter().zip(values) {
        table[a as usize - 1][b as usize - 1] = Some(v);
    }
    Ok(table)
}

/// Three-decimal rendering used in CSV output.
pub fn format_xmax(x: f64) -> String {
    format!("{x:.3}")
}

/// Text-table rendering: the left endpoint prints as `1/2`.
pub fn format_xmax_text(x: f64) -> String {
    if x == 0.5 {
        "1/2".to_string()
    } else {
        format!("{x:.3}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn ds(a: u32, b: u32) -> DoubleStar {
        DoubleStar::new(a, b).unwrap()
    }

    #[test]
    fn lemma_edge_bound() {
        assert_eq!(max_edges_triangle_free(7, 4).unwrap(), 12u64);
        assert_eq!(max_edges_triangle_free(10, 5).unwrap(), 25u64);
        assert_eq!(max_edges_triangle_free(9, 0).unwrap(), 0u64);
        assert!(max_edges_triangle_free(5, 5).is_err());
    }

    #[test]
    fn adjacent_triangles() {
        assert_eq!(adjacent_min_triangles(40, 1).unwrap(), 38u64);
        assert_eq!(adjacent_min_triangles(40, 2).unwrap(), 112u64);
        for k in 1..8usize {
            // degenerate case: the construction is K_{k+2}
            assert_eq!(adjacent_min_triangles(k + 2, k).unwrap(), binom(k as i64 + 2, 3));
        }
        assert!(adjacent_min_triangles(3, 2).is_err());
        assert!(adjacent_min_triangles(10, 0).is_err());
    }

    #[test]
    fn adjacent_edges() {
        assert_eq!(adjacent_min_edges(6, 1).unwrap(), 9u64);
        assert_eq!(adjacent_min_edges(8, 2).unwrap(), 18u64);
        assert!(adjacent_min_edges(5, 2).is_err());
    }

    #[test]
    fn nonadjacent_edges() {
        let expect = [(3, 3u64), (4, 6), (5, 8), (6, 11), (7, 14), (8, 19)];
        for (n, e) in expect {
            assert_eq!(nonadjacent_min_edges(n).unwrap(), e, "n={n}");
        }
        assert!(nonadjacent_min_edges(2).is_err());
        let b = PiecewiseEdgeBound::new(10).unwrap();
        assert_eq!((b.k, b.class), (2, ResidueClass::PlusTwo));
    }

    #[test]
    fn piecewise_matches_quarter_form() {
        // |E| = n²/4 + n/4 + c with c = 0, 1/2, 1/2, 1 for n ≡ 3, 1, 2, 0 (mod 4)
        for n in 3..500usize {
            let four_c = match n % 4 {
                3 => 0,
                1 | 2 => 2,
                _ => 4,
            };
            let e = nonadjacent_min_edges(n).unwrap().to_u64().unwrap() as usize;
            assert_eq!(4 * e, n * n + n + four_c, "n={n}");
        }
    }

    #[test]
    fn universal_bound() {
        assert_eq!(universal_edge_lower_bound(7).unwrap(), Ratio::new(215, 16));
        assert_eq!(universal_edge_lower_bound(9).unwrap(), Ratio::new(351, 16));
        assert_eq!(universal_edge_lower_bound(3).unwrap(), Ratio::new(39, 16));
        assert!(universal_edge_lower_bound(2).is_err());
        // per-class forms: 4k²-k-9/16, 4k²+k-9/16, 4k²+3k-1/16, 4k²+5k+15/16
        for n in 3..200usize {
            let k = ((n + 1) / 4) as i64;
            let per_class = match n % 4 {
                3 => Ratio::new(16 * (4 * k * k - k) - 9, 16),
                0 => Ratio::new(16 * (4 * k * k + k) - 9, 16),
                1 => Ratio::new(16 * (4 * k * k + 3 * k) - 1, 16),
                _ => Ratio::new(16 * (4 * k * k + 5 * k) + 15, 16),
            };
            let raw = universal_edge_lower_bound(n).unwrap();
            assert_eq!(raw, per_class, "n={n}");
            let piecewise = nonadjacent_min_edges(n).unwrap().to_u64().unwrap() as i64;
            assert!(Ratio::from_integer(piecewise) >= raw);
        }
    }

    #[test]
    fn odd_triangles() {
        assert_eq!(nonadjacent_min_triangles_odd(7).unwrap(), 6u64);
        assert_eq!(nonadjacent_min_triangles_odd(9).unwrap(), 12u64);
        assert_eq!(nonadjacent_min_triangles_odd(3).unwrap(), 1u64);
        assert_eq!(nonadjacent_min_triangles_odd(5).unwrap(), 4u64);
        assert!(nonadjacent_min_triangles_odd(8).is_err());
        // (n²-1)/8 and (n²+2n-3)/8
        for n in (3..200usize).step_by(2) {
            let t = nonadjacent_min_triangles_odd(n).unwrap().to_u64().unwrap() as usize;
            let expect = if n % 4 == 3 { (n * n - 1) / 8 } else { (n * n + 2 * n - 3) / 8 };
            assert_eq!(t, expect);
        }
    }

    #[test]
    fn ls_bound() {
        let b = lovasz_simonovits_bound(7, 14);
        assert_eq!((b.excess, b.bound.to_u64(), b.valid), (2, Some(6), true));
        let b = lovasz_simonovits_bound(9, 24);
        assert_eq!((b.excess, b.bound.to_u64(), b.valid), (4, Some(16), true));
        let b = lovasz_simonovits_bound(6, 9);
        assert_eq!((b.excess, b.bound.to_u64(), b.valid), (0, Some(0), true));
        let b = lovasz_simonovits_bound(6, 3);
        assert_eq!((b.excess, b.bound.to_u64()), (0, Some(0)));
        assert!(!lovasz_simonovits_bound(6, 12).valid);
    }

    #[test]
    fn difference_identities() {
        for n in 4..=40usize {
            let f13 = SplitObjective::new(n, ds(1, 3)).unwrap();
            let f14 = SplitObjective::new(n, ds(1, 4)).unwrap();
            for x in 1..=n - 2 {
                assert_eq!(s13_forward_difference(n, x).unwrap(), f13.direct_difference(x).unwrap());
                assert_eq!(s14_forward_difference(n, x).unwrap(), f14.direct_difference(x).unwrap());
            }
        }
        assert!(s13_forward_difference(10, 0).is_err());
        assert!(s13_forward_difference(10, 9).is_err());
        assert!(s14_forward_difference(2, 1).is_err());
    }

    #[test]
    fn difference_zero_factors() {
        // f(13,7) = f(13,6) = 6720, so the step from x=6 vanishes
        assert!(s13_forward_difference(13, 6).unwrap().is_zero());
        for n in (5..41usize).step_by(2) {
            assert!(s13_forward_difference(n, (n - 1) / 2).unwrap().is_zero());
            assert!(s14_forward_difference(n, (n - 1) / 2).unwrap().is_zero());
        }
        for x in 1..=4 {
            assert!(s14_forward_difference(6, x).unwrap().is_zero());
        }
    }

    #[test]
    fn s13_decreasing_past_middle() {
        for n in 15..=60usize {
            for x in n.div_ceil(2)..n - 1 {
                assert!(s13_forward_difference(n, x).unwrap().is_negative(), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn s14_sign_change_at_root() {
        // increasing up to the root, decreasing after it
        for n in 7..=80usize {
            let x0 = s14_root(n).unwrap();
            for x in n.div_ceil(2)..n - 1 {
                let d = s14_forward_difference(n, x).unwrap();
                let xf = x as f64;
                if xf < x0 - 1e-9 && x > (n - 1) / 2 {
                    assert!(d.is_positive(), "n={n} x={x} x0={x0}");
                } else if xf > x0 + 1e-9 {
                    assert!(d.is_negative(), "n={n} x={x} x0={x0}");
                }
            }
        }
    }

    #[test]
    fn s14_root_examples() {
        let r = s14_root(1_000_000).unwrap();
        assert!((r / 1e6 - 2.0 / 3.0).abs() < 1e-5);
        let r100 = s14_root(100).unwrap();
        assert!((r100 - (297.0 + 11721f64.sqrt()) / 6.0).abs() < 1e-12);
        // the integer maximizer sits next to the root
        let opt = optimal_split_integer(100, ds(1, 4)).unwrap();
        assert!((opt.x as f64 - r100).abs() <= 1.0);
        assert!(s14_root(4).is_ok());
        assert!(s14_root(3).is_err());
    }

    #[test]
    fn integer_split_examples() {
        let o = optimal_split_integer(13, ds(1, 3)).unwrap();
        assert_eq!(o.value, 6720u64);
        assert_eq!(o.tied, vec![7, 8]);
        assert_eq!(o.x, 7);
        for a in 1..=4u32 {
            for n in (2 * a as usize + 2)..=40 {
                let o = optimal_split_integer(n, ds(a, a)).unwrap();
                assert_eq!(o.x, n.div_ceil(2), "a={a} n={n}");
            }
        }
        let big = optimal_split_integer(3000, ds(1, 4)).unwrap();
        assert!((big.x as f64 / 3000.0 - 2.0 / 3.0).abs() < 0.01);
    }

    #[test]
    fn continuous_examples() {
        let tol = 1e-9;
        let x = optimal_split_continuous(ds(1, 4), tol).unwrap();
        assert!((x - (3.0 + 3f64.sqrt()) / 6.0).abs() < 1e-6);
        assert!((optimal_split_continuous(ds(2, 5), tol).unwrap() - 2.0 / 3.0).abs() < 1e-6);
        assert!((optimal_split_continuous(ds(1, 5), tol).unwrap() - 0.832).abs() < 1e-3);
        let x = optimal_split_continuous(ds(3, 8), tol).unwrap();
        assert!((x - (5.0 + 5f64.sqrt()) / 10.0).abs() < 1e-6);
        for a in 1..=6 {
            assert_eq!(optimal_split_continuous(ds(a, a), tol).unwrap(), 0.5);
        }
        assert_eq!(optimal_split_continuous(ds(1, 3), tol).unwrap(), 0.5);
        assert!(optimal_split_continuous(ds(1, 3), 0.0).is_err());
    }

    #[test]
    fn table_shape_and_monotone_rows() {
        let t = table_xmax(6, 9, 1e-9).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.iter().flatten().filter(|c| c.is_some()).count(), 39);
        assert_eq!(t[5][8], Some(0.5));
        assert_eq!(t[1][0], None);
        for row in &t {
            let vals: Vec<f64> = row.iter().flatten().copied().collect();
            assert!(vals.windows(2).all(|w| w[1] >= w[0] - 1e-6));
        }
        assert!(table_xmax(3, 2, 1e-9).is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_xmax(0.5), "0.500");
        assert_eq!(format_xmax((3.0 + 3f64.sqrt()) / 6.0), "0.789");
        assert_eq!(format_xmax_text(0.5), "1/2");
        assert_eq!(format_xmax_text(0.74293), "0.743");
    }
}
