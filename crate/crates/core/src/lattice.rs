//! Lattice points, point sets, skeleton and orthoplex shapes, and the
//! covering verifiers.
//!
//! A cube "around" a point `x` is always centered at `x` with half-side
//! `r >= 1`. The discrete `k`-skeleton of that cube is the set of lattice
//! points in `x + [-r, r]^n` having at least `n - k` coordinates at distance
//! exactly `r` from the center.
//!
//! Verifiers are generic over [`LatticeSet`], so they accept both
//! materialized [`PointSet`]s and the implicit sets built by
//! [`crate::constructions`].

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid(
                "a lattice point needs at least one coordinate",
            ));
        }
        Ok(LatticePoint(coords))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }
}

impl From<&[i64]> for LatticePoint {
    fn from(c: &[i64]) -> Self {
        LatticePoint(c.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Per-coordinate inclusive bounding box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl Bounds {
    /// Largest `r` such that `x_j +- r` stays inside the box in every
    /// coordinate. Every shape used here puts a point at distance exactly
    /// `r` in each coordinate direction, so no witness can exceed this.
    pub fn radius_cap(&self, x: &[i64]) -> i64 {
        x.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .map(|(&c, (&lo, &hi))| (c - lo).min(hi - c))
            .min()
            .unwrap_or(0)
    }

    pub fn spread(&self) -> i64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(lo, hi)| hi - lo)
            .max()
            .unwrap_or(0)
    }
}

/// A subset of `Z^n` that supports membership queries.
pub trait LatticeSet: Sync {
    fn dim(&self) -> usize;

    fn contains(&self, p: &[i64]) -> bool;

    /// Bounding box, `None` when the set is empty.
    fn bounds(&self) -> Option<Bounds>;

    /// Whether the `order`-skeleton of the cube of half-side `radius` around
    /// `center` lies in the set.
    fn contains_skeleton(&self, center: &[i64], radius: i64, order: usize) -> bool {
        let mut buf = center.to_vec();
        // vertices first; they reject almost every wrong radius
        if !all_vertices(center, radius, &mut buf, |p| self.contains(p)) {
            return false;
        }
        order == 0 || for_each_skeleton_point(center, radius, order, |p| self.contains(p))
    }
}

impl<T: LatticeSet + ?Sized> LatticeSet for &T {
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn contains(&self, p: &[i64]) -> bool {
        (**self).contains(p)
    }
    fn bounds(&self) -> Option<Bounds> {
        (**self).bounds()
    }
    fn contains_skeleton(&self, center: &[i64], radius: i64, order: usize) -> bool {
        (**self).contains_skeleton(center, radius, order)
    }
}

/// Finite, deduplicated set of lattice points of one dimension, stored flat
/// in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    coords: Vec<i64>,
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointSet")
            .field("dim", &self.dim)
            .field("len", &self.len())
            .finish()
    }
}

impl PointSet {
    pub fn empty(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("point set dimension must be positive"));
        }
        Ok(PointSet {
            dim,
            coords: Vec::new(),
        })
    }

    /// Builds a set from points given as coordinate slices or vectors.
    pub fn from_points<I, P>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: AsRef<[i64]>,
    {
        let mut coords = Vec::new();
        for p in points {
            let p = p.as_ref();
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        Self::from_flat(dim, coords)
    }

    /// Builds a set from a flat buffer of `dim`-tuples, sorting and
    /// deduplicating.
    pub fn from_flat(dim: usize, coords: Vec<i64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("point set dimension must be positive"));
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::invalid(
                "flat coordinate buffer is not a multiple of the dimension",
            ));
        }
        let count = coords.len() / dim;
        let already_sorted =
            (1..count).all(|i| coords[(i - 1) * dim..i * dim] < coords[i * dim..(i + 1) * dim]);
        if already_sorted {
            return Ok(PointSet { dim, coords });
        }
        let mut order: Vec<usize> = (0..count).collect();
        order.par_sort_unstable_by(|&a, &b| {
            coords[a * dim..(a + 1) * dim].cmp(&coords[b * dim..(b + 1) * dim])
        });
        let mut out: Vec<i64> = Vec::with_capacity(coords.len());
        for idx in order {
            let p = &coords[idx * dim..(idx + 1) * dim];
            let n = out.len();
            if n >= dim && &out[n - dim..] == p {
                continue;
            }
            out.extend_from_slice(p);
        }
        Ok(PointSet { dim, coords: out })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, idx: usize) -> &[i64] {
        &self.coords[idx * self.dim..(idx + 1) * self.dim]
    }

    /// Points in lexicographic order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[i64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        self.iter().map(LatticePoint::from).collect()
    }

    pub fn position(&self, p: &[i64]) -> Option<usize> {
        if p.len() != self.dim {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(p) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn is_subset(&self, other: &impl LatticeSet) -> bool {
        self.iter().all(|p| other.contains(p))
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        check_dim(self.dim, other.dim)?;
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        PointSet::from_flat(self.dim, coords)
    }
}

impl LatticeSet for PointSet {
    fn dim(&self) -> usize {
        self.dim
    }

    fn contains(&self, p: &[i64]) -> bool {
        self.position(p).is_some()
    }

    fn bounds(&self) -> Option<Bounds> {
        if self.is_empty() {
            return None;
        }
        let mut lo = vec![i64::MAX; self.dim];
        let mut hi = vec![i64::MIN; self.dim];
        for p in self.iter() {
            for (j, &c) in p.iter().enumerate() {
                lo[j] = lo[j].min(c);
                hi[j] = hi[j].max(c);
            }
        }
        Some(Bounds { lo, hi })
    }
}

/// A `k`-skeleton of the cube of half-side `radius` centered at `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonSpec {
    center: LatticePoint,
    radius: i64,
    order: usize,
}

impl SkeletonSpec {
    pub fn new(center: LatticePoint, radius: i64, order: usize) -> Result<Self> {
        if radius < 1 {
            return Err(Error::invalid(format!("radius must be >= 1, got {radius}")));
        }
        if order >= center.dim() {
            return Err(Error::invalid(format!(
                "skeleton order {order} must be below the dimension {}",
                center.dim()
            )));
        }
        Ok(SkeletonSpec {
            center,
            radius,
            order,
        })
    }

    pub fn center(&self) -> &LatticePoint {
        &self.center
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// All lattice points of the skeleton described by `spec`.
pub fn skeleton_points(spec: &SkeletonSpec) -> PointSet {
    let c = spec.center.coords();
    let mut flat = Vec::new();
    for_each_skeleton_point(c, spec.radius, spec.order, |p| {
        flat.extend_from_slice(p);
        true
    });
    PointSet::from_flat(c.len(), flat).expect("skeleton points share the center's dimension")
}

/// `sum_{j=n-k}^{n} C(n,j) 2^j (2r-1)^(n-j)`, the number of points of a
/// discrete `k`-skeleton in `Z^n`.
pub fn skeleton_size(dim: usize, radius: i64, order: usize) -> u128 {
    let inner = (2 * radius - 1) as u128;
    (dim - order..=dim)
        .map(|j| binomial(dim, j) * (1u128 << j) * inner.pow((dim - j) as u32))
        .sum()
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t as u128 + 1))
}

/// The `2n` points `center +- radius * e_i`.
pub fn orthoplex_points(center: &LatticePoint, radius: i64) -> Result<PointSet> {
    if radius < 1 {
        return Err(Error::invalid(format!("radius must be >= 1, got {radius}")));
    }
    let c = center.coords();
    let mut flat = Vec::with_capacity(2 * c.len() * c.len());
    for i in 0..c.len() {
        for sign in [-1, 1] {
            let mut p = c.to_vec();
            p[i] += sign * radius;
            flat.extend_from_slice(&p);
        }
    }
    PointSet::from_flat(c.len(), flat)
}

/// Calls `visit` on every vertex of the cube; stops early when `visit`
/// returns `false`. Returns whether all vertices were accepted.
fn all_vertices(
    center: &[i64],
    radius: i64,
    buf: &mut [i64],
    mut visit: impl FnMut(&[i64]) -> bool,
) -> bool {
    let n = center.len();
    for mask in 0u64..(1u64 << n) {
        for j in 0..n {
            buf[j] = if mask >> j & 1 == 1 {
                center[j] + radius
            } else {
                center[j] - radius
            };
        }
        if !visit(buf) {
            return false;
        }
    }
    true
}

/// Walks every point of the discrete `order`-skeleton face by face (points
/// shared by several faces are visited more than once). Returns `false` as
/// soon as `visit` does.
pub(crate) fn for_each_skeleton_point(
    center: &[i64],
    radius: i64,
    order: usize,
    mut visit: impl FnMut(&[i64]) -> bool,
) -> bool {
    let n = center.len();
    let mut p = center.to_vec();
    for free in (0..n).combinations(order) {
        let pinned: Vec<usize> = (0..n).filter(|j| !free.contains(j)).collect();
        for mask in 0u64..(1u64 << pinned.len()) {
            for (t, &j) in pinned.iter().enumerate() {
                p[j] = if mask >> t & 1 == 1 {
                    center[j] + radius
                } else {
                    center[j] - radius
                };
            }
            for &j in &free {
                p[j] = center[j] - radius;
            }
            loop {
                if !visit(&p) {
                    return false;
                }
                // odometer over the free coordinates
                let mut advanced = false;
                for &j in &free {
                    if p[j] < center[j] + radius {
                        p[j] += 1;
                        advanced = true;
                        break;
                    }
                    p[j] = center[j] - radius;
                }
                if !advanced {
                    break;
                }
            }
        }
    }
    true
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Smallest `r >= 1` with the `k`-skeleton around `x` contained in `b`.
pub fn covering_radius<B: LatticeSet + ?Sized>(b: &B, x: &[i64], k: usize) -> Result<Option<i64>> {
    check_dim(b.dim(), x.len())?;
    if k >= x.len() {
        return Err(Error::invalid(format!(
            "skeleton order {k} must be below the dimension {}",
            x.len()
        )));
    }
    Ok(skeleton_radius(b, x, k))
}

fn skeleton_radius<B: LatticeSet + ?Sized>(b: &B, x: &[i64], k: usize) -> Option<i64> {
    let cap = b.bounds()?.radius_cap(x);
    (1..=cap).find(|&r| b.contains_skeleton(x, r, k))
}

/// Smallest `r >= 1` with `x +- r e_i` in `b` for every axis `i`.
pub fn orthoplex_radius<B: LatticeSet + ?Sized>(b: &B, x: &[i64]) -> Result<Option<i64>> {
    check_dim(b.dim(), x.len())?;
    let Some(bounds) = b.bounds() else {
        return Ok(None);
    };
    let cap = bounds.radius_cap(x);
    let mut buf = x.to_vec();
    Ok((1..=cap).find(|&r| {
        (0..x.len()).all(|i| {
            [-r, r].into_iter().all(|d| {
                buf[i] = x[i] + d;
                let hit = b.contains(&buf);
                buf[i] = x[i];
                hit
            })
        })
    }))
}

/// Smallest `r >= 1` with `x_I + r*sigma` in `a` for every `l`-subset `I` of
/// the coordinates of `x` and every sign vector `sigma`, where `l = dim(a)`.
pub fn nl_radius<A: LatticeSet + ?Sized>(a: &A, x: &[i64]) -> Result<Option<i64>> {
    let l = a.dim();
    if l == 0 || l > x.len() {
        return Err(Error::invalid(format!(
            "projection dimension {l} must lie in 1..={}",
            x.len()
        )));
    }
    let Some(bounds) = a.bounds() else {
        return Ok(None);
    };
    let subsets: Vec<Vec<usize>> = (0..x.len()).combinations(l).collect();
    let cap = subsets
        .iter()
        .map(|idx| {
            let proj: Vec<i64> = idx.iter().map(|&j| x[j]).collect();
            bounds.radius_cap(&proj)
        })
        .min()
        .unwrap_or(0);
    let mut buf = vec![0; l];
    Ok((1..=cap).find(|&r| {
        subsets.iter().all(|idx| {
            let proj: Vec<i64> = idx.iter().map(|&j| x[j]).collect();
            all_vertices(&proj, r, &mut buf, |p| a.contains(p))
        })
    }))
}

/// One covered point and the minimal radius that covers it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub point: LatticePoint,
    pub radius: i64,
}

/// Outcome of a covering verification. Witnesses and failures are listed in
/// the canonical order of the verified set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub satisfied: bool,
    pub witnesses: Vec<Witness>,
    pub failures: Vec<LatticePoint>,
}

impl CoverReport {
    fn from_radii(s: &PointSet, radii: Vec<Option<i64>>) -> Self {
        let mut witnesses = Vec::new();
        let mut failures = Vec::new();
        for (p, r) in s.iter().zip(radii) {
            match r {
                Some(radius) => witnesses.push(Witness {
                    point: p.into(),
                    radius,
                }),
                None => failures.push(p.into()),
            }
        }
        CoverReport {
            satisfied: failures.is_empty(),
            witnesses,
            failures,
        }
    }

    pub fn witness(&self, p: &[i64]) -> Option<i64> {
        self.witnesses
            .binary_search_by(|w| w.point.coords().cmp(p))
            .ok()
            .map(|i| self.witnesses[i].radius)
    }

    pub fn max_radius(&self) -> Option<i64> {
        self.witnesses.iter().map(|w| w.radius).max()
    }
}

fn per_point<F>(s: &PointSet, search: F) -> Vec<Option<i64>>
where
    F: Fn(&[i64]) -> Option<i64> + Sync,
{
    let pts: Vec<&[i64]> = s.iter().collect();
    pts.par_iter().map(|p| search(p)).collect()
}

/// Checks that `b` contains the `k`-skeleton of a cube around every point of `s`.
pub fn verify_cover<B: LatticeSet + ?Sized>(b: &B, s: &PointSet, k: usize) -> Result<CoverReport> {
    check_dim(b.dim(), s.dim())?;
    if k >= s.dim() {
        return Err(Error::invalid(format!(
            "skeleton order {k} must be below the dimension {}",
            s.dim()
        )));
    }
    let radii = per_point(s, |x| skeleton_radius(b, x, k));
    Ok(CoverReport::from_radii(s, radii))
}

/// Checks the projection condition: for every `x` in `s` one radius `r`
/// puts `x_I + r*sigma` in `a` for all coordinate subsets `I` of size
/// `dim(a)` and all sign vectors `sigma`.
pub fn verify_nl_condition<A: LatticeSet + ?Sized>(a: &A, s: &PointSet) -> Result<CoverReport> {
    let l = a.dim();
    if l == 0 || l > s.dim() {
        return Err(Error::invalid(format!(
            "projection dimension {l} must lie in 1..={}",
            s.dim()
        )));
    }
    let radii = per_point(s, |x| nl_radius(a, x).expect("dimensions checked above"));
    Ok(CoverReport::from_radii(s, radii))
}

/// Checks that `b` contains the orthoplex vertices `x +- r e_i` around every
/// point of `s`.
pub fn verify_orthoplex_cover<B: LatticeSet + ?Sized>(b: &B, s: &PointSet) -> Result<CoverReport> {
    check_dim(b.dim(), s.dim())?;
    let radii = per_point(s, |x| {
        orthoplex_radius(b, x).expect("dimensions checked above")
    });
    Ok(CoverReport::from_radii(s, radii))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c.to_vec()).unwrap()
    }

    fn skel(c: &[i64], r: i64, k: usize) -> PointSet {
        skeleton_points(&SkeletonSpec::new(pt(c), r, k).unwrap())
    }

    /// Direct filter over the full cube: at least `n - k` coordinates at
    /// distance exactly `r`.
    fn skel_by_filter(c: &[i64], r: i64, k: usize) -> PointSet {
        let n = c.len();
        let pts = (0..n)
            .map(|j| c[j] - r..=c[j] + r)
            .multi_cartesian_product()
            .filter(|p| {
                p.iter()
                    .zip(c)
                    .filter(|(a, b)| (*a - *b).abs() == r)
                    .count()
                    >= n - k
            })
            .collect::<Vec<_>>();
        PointSet::from_points(n, pts).unwrap()
    }

    #[test]
    fn square_vertices() {
        let s = skel(&[5, 7], 2, 0);
        let expected = PointSet::from_points(2, [[3, 5], [3, 9], [7, 5], [7, 9]]).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn boundary_of_three_by_three() {
        let s = skel(&[0, 0], 1, 1);
        assert_eq!(s.len(), 8);
        assert!(!s.contains(&[0, 0]));
        assert_eq!(s, skel_by_filter(&[0, 0], 1, 1));
    }

    #[test]
    fn cube_edges() {
        let s = skel(&[0, 0, 0], 1, 1);
        assert_eq!(s.len(), 20);
        assert_eq!(skeleton_size(3, 1, 1), 20);
        assert_eq!(s, skel_by_filter(&[0, 0, 0], 1, 1));
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for n in 1..=4 {
            for k in 0..n {
                for r in 1..=4 {
                    let c = vec![1; n];
                    let s = skel(&c, r, k);
                    assert_eq!(s.len() as u128, skeleton_size(n, r, k), "n={n} k={k} r={r}");
                    if n <= 3 {
                        assert_eq!(s, skel_by_filter(&c, r, k));
                    }
                }
            }
        }
    }

    #[test]
    fn skeleton_order_is_monotone() {
        for n in 2..=4 {
            for k in 0..n - 1 {
                let lower = skel(&vec![0; n], 2, k);
                let upper = skel(&vec![0; n], 2, k + 1);
                assert!(lower.is_subset(&upper));
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert!(SkeletonSpec::new(pt(&[0, 0]), 0, 0).is_err());
        assert!(SkeletonSpec::new(pt(&[0, 0]), 1, 2).is_err());
        assert!(LatticePoint::new(vec![]).is_err());
    }

    #[test]
    fn orthoplex_shape() {
        let o = orthoplex_points(&pt(&[0, 0]), 1).unwrap();
        let expected = PointSet::from_points(2, [[1, 0], [-1, 0], [0, 1], [0, -1]]).unwrap();
        assert_eq!(o, expected);
        assert_eq!(orthoplex_points(&pt(&[2, 3, 4]), 2).unwrap().len(), 6);
        for n in 1..=5 {
            assert_eq!(orthoplex_points(&pt(&vec![7; n]), 3).unwrap().len(), 2 * n);
        }
        assert!(orthoplex_points(&pt(&[0]), 0).is_err());
    }

    #[test]
    fn point_set_canonical_and_dedup() {
        let s = PointSet::from_points(2, [[3, 1], [1, 2], [3, 1], [1, -5]]).unwrap();
        assert_eq!(s.len(), 3);
        let pts: Vec<_> = s.iter().map(|p| p.to_vec()).collect();
        assert_eq!(pts, vec![vec![1, -5], vec![1, 2], vec![3, 1]]);
        assert!(PointSet::from_points(2, [vec![1, 2, 3]]).is_err());
        assert!(PointSet::empty(0).is_err());
    }

    #[test]
    fn covering_radius_examples() {
        let b = skel(&[0, 0], 3, 0);
        assert_eq!(covering_radius(&b, &[0, 0], 0).unwrap(), Some(3));
        let empty = PointSet::empty(2).unwrap();
        assert_eq!(covering_radius(&empty, &[0, 0], 0).unwrap(), None);
        assert!(covering_radius(&b, &[0, 0, 0], 0).is_err());
        assert!(covering_radius(&b, &[0, 0], 2).is_err());
    }

    #[test]
    fn covering_radius_is_minimal() {
        let x = [4, -1];
        for k in 0..2 {
            let b = skel(&x, 2, k).union(&skel(&x, 5, k)).unwrap();
            assert_eq!(covering_radius(&b, &x, k).unwrap(), Some(2));
            // exhaustive scan against the shape itself
            let spread = b.bounds().unwrap().spread();
            let first = (1..=spread).find(|&r| skel(&x, r, k).is_subset(&b));
            assert_eq!(first, Some(2));
        }
    }

    #[test]
    fn verify_cover_reports() {
        let x = pt(&[0, 0]);
        let b = skel(x.coords(), 2, 0);
        let s = PointSet::from_points(2, [x.coords()]).unwrap();
        let rep = verify_cover(&b, &s, 0).unwrap();
        assert!(rep.satisfied);
        assert_eq!(rep.witness(&[0, 0]), Some(2));

        let empty_s = PointSet::empty(2).unwrap();
        let rep = verify_cover(&b, &empty_s, 0).unwrap();
        assert!(rep.satisfied && rep.witnesses.is_empty());

        let pruned = PointSet::from_points(2, b.iter().filter(|p| *p != [2, 2])).unwrap();
        let rep = verify_cover(&pruned, &s, 0).unwrap();
        assert!(!rep.satisfied);
        assert_eq!(rep.failures, vec![x]);
    }

    #[test]
    fn nl_condition_on_a_line() {
        let a = PointSet::from_points(1, [[-1], [1]]).unwrap();
        let s = PointSet::from_points(2, [[0, 0]]).unwrap();
        let rep = verify_nl_condition(&a, &s).unwrap();
        assert!(rep.satisfied);
        assert_eq!(rep.witness(&[0, 0]), Some(1));
        let s1 = PointSet::from_points(1, [[0]]).unwrap();
        assert!(verify_nl_condition(&s, &s1).is_err());
    }

    #[test]
    fn orthoplex_cover_reports() {
        let x = pt(&[3, -2, 5]);
        let b = orthoplex_points(&x, 4).unwrap();
        let s = PointSet::from_points(3, [x.coords()]).unwrap();
        let rep = verify_orthoplex_cover(&b, &s).unwrap();
        assert!(rep.satisfied);
        assert_eq!(rep.witness(x.coords()), Some(4));

        let missing = PointSet::from_points(3, b.iter().filter(|p| *p != [7, -2, 5])).unwrap();
        assert!(!verify_orthoplex_cover(&missing, &s).unwrap().satisfied);
    }
}
