//! Closed-form bounds on the non-Perron Randić eigenvalues.
//!
//! Deflating the Randić matrix at vertex `i` and taking Geršgorin discs gives,
//! for every other vertex `k`, a real disc whose left end is `-2 + α_ik` and
//! whose right end is `2 - β_ik`, where
//!
//! ```text
//! α_ik = 1/d_k + 2N(i,k)/max(d_i, d_k)          if k ~ i
//! β_ik = 1/d_k + 2/d_i + 2N(i,k)/max(d_i, d_k)  if k ~ i
//! α_ik = β_ik = 2N(i,k)/max(d_i, d_k)           otherwise
//! ```
//!
//! with `N(i,k)` the number of common neighbors. Intersecting over all `i` and
//! keeping only what the spectrum of `[-1, 1]` allows yields
//!
//! ```text
//! -2 + max(1, max_i min_k α_ik) <= λ_n <= λ_2 <= 2 - max(1, max_i min_k β_ik)
//! ```
//!
//! These are computed here from degrees and common-neighbor counts only;
//! [`bounds_via_regions`] derives the same numbers from the disc geometry.

use super::graph::{count_common, randic_matrix, Graph};
use crate::error::{Error, Result};
use crate::regions::{deflated_region, real_interval_hull};

/// Per-vertex minima and the resulting interval for `λ_n ..= λ_2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// `α_i = min_{k != i} α_ik`, indexed by vertex `i - 1`.
    pub alpha: Vec<f64>,
    /// `β_i = min_{k != i} β_ik`, indexed by vertex `i - 1`.
    pub beta: Vec<f64>,
    /// Lower bound on the smallest eigenvalue `λ_n`.
    pub lower_bound: f64,
    /// Upper bound on the second largest eigenvalue `λ_2`.
    pub upper_bound: f64,
}

/// Bounds on the nonzero normalized-Laplacian eigenvalues `ρ_2 <= ... <= ρ_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplacianBounds {
    pub rho2_lower: f64,
    pub rhon_upper: f64,
}

/// Bounds for an `r`-regular graph from the integer `γ`/`δ` counts.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularBoundReport {
    pub degree: usize,
    /// `min_{k != i} γ_ik` per vertex.
    pub gamma: Vec<f64>,
    /// `min_{k != i} δ_ik` per vertex.
    pub delta: Vec<f64>,
    /// `-2 + (1/r) max(1, max_i min_k γ_ik)`.
    pub lower_bound: f64,
    /// `2 - (1/r) max(1, max_i min_k δ_ik)`.
    pub upper_bound: f64,
    /// The general α/β bounds of the same graph. With `α_ik = γ_ik / r` they
    /// are at least as tight, strictly tighter whenever the clamp at 1 binds
    /// and `r > 1`.
    pub general: (f64, f64),
}

impl RegularBoundReport {
    /// True when the regular-graph formula is looser than the general one.
    pub fn is_weaker_than_general(&self) -> bool {
        self.lower_bound < self.general.0 - 1e-12 || self.upper_bound > self.general.1 + 1e-12
    }
}

struct PairTerms {
    adjacent: bool,
    common: usize,
    d_i: f64,
    d_k: f64,
}

impl PairTerms {
    fn new(g: &Graph, i: usize, k: usize) -> Self {
        PairTerms {
            adjacent: g.adjacent(i, k),
            common: count_common(g.neighbors(i), g.neighbors(k)),
            d_i: g.degree(i) as f64,
            d_k: g.degree(k) as f64,
        }
    }

    fn shared(&self) -> f64 {
        2.0 * self.common as f64 / self.d_i.max(self.d_k)
    }

    fn alpha(&self) -> f64 {
        if self.adjacent {
            1.0 / self.d_k + self.shared()
        } else {
            self.shared()
        }
    }

    fn beta(&self) -> f64 {
        if self.adjacent {
            1.0 / self.d_k + 2.0 / self.d_i + self.shared()
        } else {
            self.shared()
        }
    }
}

fn check_pair(g: &Graph, i: usize, k: usize) -> Result<()> {
    g.check_vertex(i)?;
    g.check_vertex(k)?;
    if i == k {
        return Err(Error::SameVertex(i));
    }
    Ok(())
}

/// `α_ik`. Needs both degrees nonzero to be finite.
pub fn alpha(g: &Graph, i: usize, k: usize) -> Result<f64> {
    check_pair(g, i, k)?;
    Ok(PairTerms::new(g, i, k).alpha())
}

/// `β_ik`. Needs both degrees nonzero to be finite.
pub fn beta(g: &Graph, i: usize, k: usize) -> Result<f64> {
    check_pair(g, i, k)?;
    Ok(PairTerms::new(g, i, k).beta())
}

fn check_bound_input(g: &Graph) -> Result<()> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    g.check_connected()
}

fn min_over_others(g: &Graph, i: usize, f: impl Fn(&PairTerms) -> f64) -> f64 {
    (1..=g.order())
        .filter(|&k| k != i)
        .map(|k| f(&PairTerms::new(g, i, k)))
        .fold(f64::INFINITY, f64::min)
}

fn max_with_one(values: &[f64]) -> f64 {
    values.iter().copied().fold(1.0, f64::max)
}

pub fn randic_bounds(g: &Graph) -> Result<BoundReport> {
    check_bound_input(g)?;
    let vertices = 1..=g.order();
    let alpha: Vec<f64> = vertices
        .clone()
        .map(|i| min_over_others(g, i, PairTerms::alpha))
        .collect();
    let beta: Vec<f64> = vertices
        .map(|i| min_over_others(g, i, PairTerms::beta))
        .collect();
    Ok(BoundReport {
        lower_bound: -2.0 + max_with_one(&alpha),
        upper_bound: 2.0 - max_with_one(&beta),
        alpha,
        beta,
    })
}

/// Same bounds mapped through `ρ = 1 - λ`.
pub fn normalized_laplacian_bounds(g: &Graph) -> Result<LaplacianBounds> {
    let r = randic_bounds(g)?;
    Ok(LaplacianBounds {
        rho2_lower: -1.0 + max_with_one(&r.beta),
        rhon_upper: 3.0 - max_with_one(&r.alpha),
    })
}

/// Regular-graph form with `γ_ik = 1 + 2N(i,k)` / `δ_ik = 3 + 2N(i,k)` for
/// adjacent pairs and `2N(i,k)` otherwise, scaled by `1/r` outside the clamp:
/// `-2 + (1/r) max(1, max_i min_k γ_ik)` and `2 - (1/r) max(1, max_i min_k δ_ik)`.
pub fn regular_graph_bounds(g: &Graph) -> Result<RegularBoundReport> {
    check_bound_input(g)?;
    let degrees = g.degrees();
    let r = g.regular_degree().ok_or_else(|| Error::NotRegular {
        min: *degrees.iter().min().unwrap_or(&0),
        max: *degrees.iter().max().unwrap_or(&0),
    })?;
    let counts = |i: usize, extra: f64| {
        (1..=g.order())
            .filter(|&k| k != i)
            .map(|k| {
                let shared = 2.0 * count_common(g.neighbors(i), g.neighbors(k)) as f64;
                if g.adjacent(i, k) {
                    extra + shared
                } else {
                    shared
                }
            })
            .fold(f64::INFINITY, f64::min)
    };
    let gamma: Vec<f64> = (1..=g.order()).map(|i| counts(i, 1.0)).collect();
    let delta: Vec<f64> = (1..=g.order()).map(|i| counts(i, 3.0)).collect();
    let rf = r as f64;
    let general = randic_bounds(g)?;
    Ok(RegularBoundReport {
        degree: r,
        lower_bound: -2.0 + max_with_one(&gamma) / rf,
        upper_bound: 2.0 - max_with_one(&delta) / rf,
        gamma,
        delta,
        general: (general.lower_bound, general.upper_bound),
    })
}

/// `1 - min_{i ~ j} N(i,j) / max(d_i, d_j)`, a bound on `|λ_n|` over the
/// negative eigenvalues. The implied lower bound on `λ_n` is its negation.
pub fn rojo_soto_bound(g: &Graph) -> Result<f64> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    g.check_connected()?;
    let min_ratio = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let common = count_common(g.neighbors(i), g.neighbors(j)) as f64;
            common / g.degree(i).max(g.degree(j)) as f64
        })
        .fold(f64::INFINITY, f64::min);
    Ok(1.0 - min_ratio)
}

/// The `(λ_n lower, λ_2 upper)` pair obtained generically: real hulls of the
/// deflated Geršgorin unions of the Randić matrix, intersected over `i` and
/// clipped to `[-1, 1]`.
pub fn bounds_via_regions(g: &Graph) -> Result<(f64, f64)> {
    check_bound_input(g)?;
    let s = randic_matrix(g)?;
    let mut lower = -1.0_f64;
    let mut upper = 1.0_f64;
    for i in 1..=g.order() {
        let (lo, hi) = real_interval_hull(&deflated_region(&s, i)?)?;
        lower = lower.max(lo);
        upper = upper.min(hi);
    }
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-12, "{a} != {b}");
    }

    #[test]
    fn path_two() {
        let p2 = Graph::path(2);
        assert_close(alpha(&p2, 1, 2).unwrap(), 1.0);
        assert_close(beta(&p2, 1, 2).unwrap(), 3.0);
        let r = randic_bounds(&p2).unwrap();
        assert_close(r.lower_bound, -1.0);
        assert_close(r.upper_bound, -1.0);
        let l = normalized_laplacian_bounds(&p2).unwrap();
        assert_close(l.rho2_lower, 2.0);
        assert_close(l.rhon_upper, 2.0);
        let reg = regular_graph_bounds(&p2).unwrap();
        assert_eq!(reg.degree, 1);
        assert_close(reg.lower_bound, -1.0);
        assert_close(reg.upper_bound, -1.0);
        assert_close(rojo_soto_bound(&p2).unwrap(), 1.0);
    }

    #[test]
    fn triangle() {
        let k3 = Graph::complete(3);
        let r = randic_bounds(&k3).unwrap();
        assert!(r.alpha.iter().all(|&a| (a - 1.5).abs() < 1e-15));
        assert!(r.beta.iter().all(|&b| (b - 2.5).abs() < 1e-15));
        assert_close(r.lower_bound, -0.5);
        assert_close(r.upper_bound, -0.5);
        let l = normalized_laplacian_bounds(&k3).unwrap();
        assert_close(l.rho2_lower, 1.5);
        assert_close(l.rhon_upper, 1.5);
        let reg = regular_graph_bounds(&k3).unwrap();
        assert_eq!(reg.gamma, vec![3.0; 3]);
        assert_eq!(reg.delta, vec![5.0; 3]);
        assert_close(reg.lower_bound, -0.5);
        assert_close(reg.upper_bound, -0.5);
        assert!(!reg.is_weaker_than_general());
        assert_close(rojo_soto_bound(&k3).unwrap(), 0.5);
    }

    #[test]
    fn four_cycle_literal_regular_bound() {
        let c4 = Graph::cycle(4);
        let reg = regular_graph_bounds(&c4).unwrap();
        assert_eq!(reg.gamma, vec![1.0; 4]);
        assert_eq!(reg.delta, vec![3.0; 4]);
        assert_close(reg.lower_bound, -1.5);
        assert_close(reg.upper_bound, 0.5);
        assert_close(reg.general.0, -1.0);
        assert_close(reg.general.1, 0.5);
        assert!(reg.is_weaker_than_general());
    }

    #[test]
    fn errors() {
        let single = Graph::new(1, []).unwrap();
        assert_eq!(
            randic_bounds(&single).unwrap_err(),
            Error::OrderTooSmall { n: 1, min: 2 }
        );
        let split = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(randic_bounds(&split).unwrap_err(), Error::Disconnected);
        assert_eq!(rojo_soto_bound(&split).unwrap_err(), Error::Disconnected);
        assert_eq!(rojo_soto_bound(&Graph::new(2, []).unwrap()).unwrap_err(), Error::NoEdges);
        assert_eq!(
            regular_graph_bounds(&Graph::path(3)).unwrap_err(),
            Error::NotRegular { min: 1, max: 2 }
        );
        assert_eq!(alpha(&Graph::path(3), 2, 2).unwrap_err(), Error::SameVertex(2));
        assert!(beta(&Graph::path(3), 1, 4).is_err());
    }

    #[test]
    fn clamp_keeps_bounds_in_unit_interval() {
        for g in [Graph::path(6), Graph::star(5), Graph::cycle(7)] {
            let r = randic_bounds(&g).unwrap();
            assert!(r.lower_bound >= -1.0 && r.upper_bound <= 1.0);
        }
    }
}
