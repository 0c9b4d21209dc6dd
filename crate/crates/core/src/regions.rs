//! Geršgorin discs and the eigenvalue inclusion regions built from them.
//!
//! Regions are kept symbolic: a [`DiscUnion`] is a list of closed discs and an
//! [`InclusionRegion`] is the intersection over `i` of `G_{S(i)} ∪ {1}`, where
//! `G_{S(i)}` is the Geršgorin union of the deflated matrix `S(i)`. Nothing is
//! ever rasterized; membership is answered disc by disc.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::deflate::deflate;
use crate::error::{Error, Result};
use crate::matcore::{DenseMatrix, StochasticMatrix};

/// Absolute/relative slack for [`disc_union_in_disc`]. Containment that holds
/// with equality in exact arithmetic must not flip on the last bit.
pub const CONTAINMENT_EPS: f64 = 1e-12;

/// Closed disc `{z : |z - center| <= radius}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disc {
    pub center: Complex64,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Complex64, radius: f64) -> Self {
        debug_assert!(radius >= 0.0 && radius.is_finite());
        debug_assert!(center.re.is_finite() && center.im.is_finite());
        Disc { center, radius }
    }

    pub fn real(center: f64, radius: f64) -> Self {
        Self::new(Complex64::new(center, 0.0), radius)
    }

    pub fn contains(&self, z: Complex64, slack: f64) -> bool {
        (z - self.center).norm() <= self.radius + slack
    }

    /// `self ⊆ outer` up to [`CONTAINMENT_EPS`].
    pub fn is_inside(&self, outer: &Disc) -> bool {
        (self.center - outer.center).norm() + self.radius
            <= outer.radius + CONTAINMENT_EPS * (1.0 + outer.radius)
    }
}

/// A union of discs, each tagged with the original 1-based index of the row
/// that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscUnion {
    discs: Vec<Disc>,
    labels: Vec<usize>,
}

impl DiscUnion {
    pub fn new(discs: Vec<Disc>, labels: Vec<usize>) -> Self {
        assert_eq!(discs.len(), labels.len(), "one label per disc");
        DiscUnion { discs, labels }
    }

    pub fn discs(&self) -> &[Disc] {
        &self.discs
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.discs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.discs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Disc)> + '_ {
        self.labels.iter().copied().zip(&self.discs)
    }

    /// The disc labeled `label`, if any.
    pub fn disc_for(&self, label: usize) -> Option<&Disc> {
        self.iter().find(|(l, _)| *l == label).map(|(_, d)| d)
    }

    pub fn contains(&self, z: Complex64, slack: f64) -> bool {
        self.discs.iter().any(|d| d.contains(z, slack))
    }
}

/// `⋂_i [G_{S(i)} ∪ {1}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct InclusionRegion {
    groups: Vec<DiscUnion>,
    special_point: Complex64,
}

impl InclusionRegion {
    /// One group per deflation index, group `i - 1` belonging to `S(i)`.
    pub fn groups(&self) -> &[DiscUnion] {
        &self.groups
    }

    pub fn special_point(&self) -> Complex64 {
        self.special_point
    }

    pub fn order(&self) -> usize {
        self.groups.len()
    }

    pub fn contains(&self, z: Complex64, slack: f64) -> bool {
        contains(self, z, slack)
    }

    /// JSON document with the disc data, optionally with eigenvalues attached.
    pub fn to_json(&self, eigenvalues: Option<&[Complex64]>) -> RegionJson {
        RegionJson {
            n: self.order(),
            groups: self
                .groups
                .iter()
                .enumerate()
                .map(|(g, u)| GroupJson {
                    i: g + 1,
                    discs: u
                        .iter()
                        .map(|(label, d)| DiscJson {
                            cx: d.center.re,
                            cy: d.center.im,
                            r: d.radius,
                            label,
                        })
                        .collect(),
                })
                .collect(),
            special_point: [self.special_point.re, self.special_point.im],
            eigenvalues: eigenvalues.map(|ev| ev.iter().map(|z| [z.re, z.im]).collect()),
        }
    }

    /// Rebuilds a region from its JSON form.
    pub fn from_json(doc: &RegionJson) -> Self {
        InclusionRegion {
            groups: doc
                .groups
                .iter()
                .map(|g| {
                    DiscUnion::new(
                        g.discs
                            .iter()
                            .map(|d| Disc::new(Complex64::new(d.cx, d.cy), d.r))
                            .collect(),
                        g.discs.iter().map(|d| d.label).collect(),
                    )
                })
                .collect(),
            special_point: Complex64::new(doc.special_point[0], doc.special_point[1]),
        }
    }
}

/// Serialized [`InclusionRegion`]. Numbers are written in shortest
/// round-trip form, so parsing reproduces every value bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionJson {
    pub n: usize,
    pub groups: Vec<GroupJson>,
    pub special_point: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    pub i: usize,
    pub discs: Vec<DiscJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscJson {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
    pub label: usize,
}

/// Classic Geršgorin discs of `m`; disc `k` is centred at `m_kk` with radius
/// the absolute off-diagonal row sum. Labels are `1..=n`.
pub fn gershgorin_discs(m: &DenseMatrix) -> DiscUnion {
    let n = m.order();
    let discs = (0..n)
        .map(|k| {
            let radius = (0..n).filter(|&j| j != k).map(|j| m[(k, j)].abs()).sum();
            Disc::real(m[(k, k)], radius)
        })
        .collect();
    DiscUnion::new(discs, (1..=n).collect())
}

/// `G_{S(i)}` computed straight from the entries of `S`.
///
/// The disc for original index `k != i` has center `s_kk - s_ik` and radius
/// `Σ_{j ∉ {i, k}} |s_kj - s_ij|`. Column `i` does not exist in `S(i)`, so it
/// contributes nothing to the radius.
pub fn deflated_region(s: &StochasticMatrix, i: usize) -> Result<DiscUnion> {
    let n = s.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let ii = i - 1;
    let mut discs = Vec::with_capacity(n - 1);
    let mut labels = Vec::with_capacity(n - 1);
    for k in (0..n).filter(|&k| k != ii) {
        let radius = (0..n)
            .filter(|&j| j != ii && j != k)
            .map(|j| (s[(k, j)] - s[(ii, j)]).abs())
            .sum();
        discs.push(Disc::real(s[(k, k)] - s[(ii, k)], radius));
        labels.push(k + 1);
    }
    Ok(DiscUnion::new(discs, labels))
}

/// Same union as [`deflated_region`], obtained by building `S(i)` explicitly
/// and taking its Geršgorin discs.
pub fn deflated_region_via_matrix(s: &StochasticMatrix, i: usize) -> Result<DiscUnion> {
    let d = deflate(s, i)?;
    let plain = gershgorin_discs(d.matrix());
    Ok(DiscUnion::new(plain.discs, d.index_map().to_vec()))
}

pub fn full_inclusion_region(s: &StochasticMatrix) -> Result<InclusionRegion> {
    let n = s.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    let groups = (1..=n)
        .map(|i| deflated_region(s, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(InclusionRegion {
        groups,
        special_point: Complex64::new(1.0, 0.0),
    })
}

/// `z` is the special point, or lies in some disc of every group (each test
/// loosened by `slack`).
pub fn contains(r: &InclusionRegion, z: Complex64, slack: f64) -> bool {
    (z - r.special_point).norm() <= slack || r.groups.iter().all(|g| g.contains(z, slack))
}

/// A disc from one of the single-disc localization theorems, with the shift
/// parameter it was built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicDisc {
    /// `γ` for the Cvetković disc, `γ'` for the Li–Li disc.
    pub gamma: f64,
    pub disc: Disc,
    /// Radius before clamping at zero; differs from `disc.radius` only when
    /// the formula went negative.
    pub raw_radius: f64,
}

impl ClassicDisc {
    pub fn radius_clamped(&self) -> bool {
        self.raw_radius < 0.0
    }
}

/// Cvetković disc: with `s_i` the smallest off-diagonal entry of column `i`
/// and `γ = max_i (s_ii - s_i)`, every non-Perron eigenvalue satisfies
/// `|λ - γ| <= 1 - trace(S) + (n - 1)γ`.
pub fn cvetkovic_disc(s: &StochasticMatrix) -> Result<ClassicDisc> {
    let n = s.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    let gamma = (0..n)
        .map(|i| s[(i, i)] - off_diagonal_column(s, i).fold(f64::INFINITY, f64::min))
        .fold(f64::NEG_INFINITY, f64::max);
    let raw_radius = 1.0 - s.trace() + (n - 1) as f64 * gamma;
    Ok(ClassicDisc {
        gamma,
        disc: Disc::real(gamma, raw_radius.max(0.0)),
        raw_radius,
    })
}

/// Li–Li disc: with `S_i` the largest off-diagonal entry of column `i` and
/// `γ' = max_i (S_i - s_ii)`, every non-Perron eigenvalue satisfies
/// `|λ + γ'| <= trace(S) + (n - 1)γ' - 1`.
pub fn lili_disc(s: &StochasticMatrix) -> Result<ClassicDisc> {
    let n = s.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    let gamma = (0..n)
        .map(|i| off_diagonal_column(s, i).fold(f64::NEG_INFINITY, f64::max) - s[(i, i)])
        .fold(f64::NEG_INFINITY, f64::max);
    let raw_radius = s.trace() + (n - 1) as f64 * gamma - 1.0;
    Ok(ClassicDisc {
        gamma,
        disc: Disc::real(-gamma, raw_radius.max(0.0)),
        raw_radius,
    })
}

fn off_diagonal_column(s: &StochasticMatrix, i: usize) -> impl Iterator<Item = f64> + '_ {
    (0..s.order()).filter(move |&j| j != i).map(move |j| s[(j, i)])
}

/// Every member disc lies inside `d`.
pub fn disc_union_in_disc(u: &DiscUnion, d: &Disc) -> bool {
    u.discs.iter().all(|m| m.is_inside(d))
}

/// Projection of a union of real-centred discs onto the real axis:
/// `(min(c - r), max(c + r))`.
pub fn real_interval_hull(u: &DiscUnion) -> Result<(f64, f64)> {
    if u.discs.iter().any(|d| d.center.im != 0.0) {
        return Err(Error::ComplexCenters);
    }
    let lo = u
        .discs
        .iter()
        .map(|d| d.center.re - d.radius)
        .fold(f64::INFINITY, f64::min);
    let hi = u
        .discs
        .iter()
        .map(|d| d.center.re + d.radius)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> StochasticMatrix {
        StochasticMatrix::from_rows(&[
            [0.25, 0.25, 0.3, 0.2],
            [0.0, 0.5, 0.33, 0.17],
            [0.6, 0.4, 0.0, 0.0],
            [0.1, 0.2, 0.3, 0.4],
        ])
        .unwrap()
    }

    fn exchange() -> StochasticMatrix {
        StochasticMatrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn assert_disc(d: &Disc, center: f64, radius: f64) {
        assert!(
            (d.center.re - center).abs() < 1e-12 && d.center.im == 0.0,
            "center {:?} != {center}",
            d.center
        );
        assert!((d.radius - radius).abs() < 1e-12, "radius {} != {radius}", d.radius);
    }

    #[test]
    fn plain_gershgorin() {
        let u = gershgorin_discs(&DenseMatrix::identity(3));
        assert_eq!(u.len(), 3);
        for (_, d) in u.iter() {
            assert_disc(d, 1.0, 0.0);
        }
        // a zero diagonal entry makes the plain disc the whole unit disc
        let u = gershgorin_discs(example1().matrix());
        assert_disc(&u.discs()[2], 0.0, 1.0);
    }

    #[test]
    fn example1_group_one() {
        let u = deflated_region(&example1(), 1).unwrap();
        assert_eq!(u.labels(), &[2, 3, 4]);
        assert_disc(u.disc_for(2).unwrap(), 0.25, 0.06);
        assert_disc(u.disc_for(3).unwrap(), -0.3, 0.35);
        assert_disc(u.disc_for(4).unwrap(), 0.2, 0.05);
        let (lo, hi) = real_interval_hull(&u).unwrap();
        assert!((lo + 0.65).abs() < 1e-12 && (hi - 0.31).abs() < 1e-12);
    }

    #[test]
    fn two_routes_agree_exactly() {
        let s = example1();
        for i in 1..=4 {
            assert_eq!(
                deflated_region(&s, i).unwrap(),
                deflated_region_via_matrix(&s, i).unwrap()
            );
        }
    }

    #[test]
    fn identical_rows_collapse_to_origin() {
        let s = StochasticMatrix::from_rows(&[[0.5, 0.25, 0.25]; 3]).unwrap();
        for i in 1..=3 {
            for (_, d) in deflated_region(&s, i).unwrap().iter() {
                assert_eq!((d.center, d.radius), (c(0.0), 0.0));
            }
        }
    }

    #[test]
    fn region_membership() {
        let r = full_inclusion_region(&example1()).unwrap();
        assert_eq!(r.order(), 4);
        assert!(r.groups().iter().all(|g| g.len() == 3));
        assert!(contains(&r, c(-0.307), 1e-3));
        assert!(contains(&r, c(1.0), 0.0));
        assert!(!contains(&r, c(-2.0), 0.0));
        assert!(!contains(&r, c(-0.66), 0.0));
    }

    #[test]
    fn exchange_region_is_two_points() {
        let r = full_inclusion_region(&exchange()).unwrap();
        for g in r.groups() {
            assert_eq!(g.discs(), &[Disc::real(-1.0, 0.0)]);
        }
        assert!(r.contains(c(-1.0), 0.0));
        assert!(!r.contains(c(0.0), 0.0));
        assert!(!r.contains(Complex64::new(-1.0, 0.1), 0.0));
    }

    #[test]
    fn identity_region() {
        let s = StochasticMatrix::new(DenseMatrix::identity(3)).unwrap();
        for g in full_inclusion_region(&s).unwrap().groups() {
            assert!(g.discs().contains(&Disc::real(1.0, 0.0)));
        }
    }

    #[test]
    fn classic_discs() {
        let cv = cvetkovic_disc(&example1()).unwrap();
        assert!((cv.gamma - 0.4).abs() < 1e-12);
        assert_disc(&cv.disc, 0.4, 1.05);
        let ll = lili_disc(&example1()).unwrap();
        assert!((ll.gamma - 0.35).abs() < 1e-12);
        assert_disc(&ll.disc, -0.35, 1.2);

        let id = StochasticMatrix::new(DenseMatrix::identity(2)).unwrap();
        assert_disc(&cvetkovic_disc(&id).unwrap().disc, 1.0, 0.0);
        assert_disc(&lili_disc(&id).unwrap().disc, 1.0, 0.0);
        assert_disc(&cvetkovic_disc(&exchange()).unwrap().disc, -1.0, 0.0);
        assert_disc(&lili_disc(&exchange()).unwrap().disc, -1.0, 0.0);

        let one = StochasticMatrix::from_rows(&[[1.0]]).unwrap();
        assert!(cvetkovic_disc(&one).is_err() && lili_disc(&one).is_err());
    }

    #[test]
    fn group_one_inside_both_classic_discs() {
        let s = example1();
        let g1 = deflated_region(&s, 1).unwrap();
        assert!(disc_union_in_disc(&g1, &cvetkovic_disc(&s).unwrap().disc));
        assert!(disc_union_in_disc(&g1, &lili_disc(&s).unwrap().disc));
        let big = DiscUnion::new(vec![Disc::real(0.0, 2.0)], vec![1]);
        assert!(!disc_union_in_disc(&big, &Disc::real(0.0, 1.0)));
    }

    #[test]
    fn hull_cases() {
        let u = DiscUnion::new(vec![Disc::real(0.0, 0.0)], vec![1]);
        assert_eq!(real_interval_hull(&u).unwrap(), (0.0, 0.0));
        let u = DiscUnion::new(vec![Disc::real(-1.0, 0.5), Disc::real(1.0, 0.5)], vec![1, 2]);
        assert_eq!(real_interval_hull(&u).unwrap(), (-1.5, 1.5));
        let u = DiscUnion::new(vec![Disc::new(Complex64::new(0.0, 0.1), 0.5)], vec![1]);
        assert_eq!(real_interval_hull(&u).unwrap_err(), Error::ComplexCenters);
    }

    #[test]
    fn index_errors() {
        let s = example1();
        assert_eq!(
            deflated_region(&s, 5).unwrap_err(),
            Error::IndexOutOfRange { index: 5, n: 4 }
        );
        let one = StochasticMatrix::from_rows(&[[1.0]]).unwrap();
        assert!(full_inclusion_region(&one).is_err());
    }

    #[test]
    fn json_round_trip() {
        let r = full_inclusion_region(&example1()).unwrap();
        let text = serde_json::to_string(&r.to_json(None)).unwrap();
        let back: RegionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(InclusionRegion::from_json(&back), r);
        assert!(!text.contains("eigenvalues"));
    }
}
