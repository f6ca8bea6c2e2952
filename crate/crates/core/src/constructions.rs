//! Sharp extremal constructions: pairs `(B, S)` with `|S| = p` where `B`
//! contains a skeleton, a projected cube, or orthoplex vertices around every
//! point of `S`.
//!
//! `B` is kept implicit (membership by digit tables) so constructions far
//! beyond the materialization cap can still be verified; call
//! [`ConstructedSet::materialize`] to obtain a [`PointSet`]. `S` is always
//! materialized.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::digits::{build_digit_set, DigitSet, DigitTable};
use crate::error::{Error, Result};
use crate::lattice::{
    verify_cover, verify_nl_condition, verify_orthoplex_cover, Bounds, CoverReport, LatticeSet,
    PointSet,
};
use crate::DEFAULT_POINT_CAP;

/// Which covering condition a construction targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Skeleton,
    Nl,
    Orthoplex,
}

/// Points of `[lo, hi]^dim` with at most `order` coordinates outside a digit
/// set. With `order = k` this is the union over `k`-subsets `J` of the
/// products taking the full digit hull on `J` and the digit set elsewhere.
#[derive(Clone, Debug)]
pub struct DigitBlock {
    dim: usize,
    order: usize,
    digits: DigitSet,
    table: DigitTable,
}

impl DigitBlock {
    pub fn new(digits: DigitSet, dim: usize, order: usize) -> Result<Self> {
        if dim == 0 || order > dim {
            return Err(Error::invalid(format!(
                "block order {order} exceeds dimension {dim}"
            )));
        }
        let table = digits.table();
        Ok(DigitBlock {
            dim,
            order,
            digits,
            table,
        })
    }

    pub fn digits(&self) -> &DigitSet {
        &self.digits
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn hull(&self) -> (i64, i64) {
        (self.digits.min(), self.digits.max())
    }

    /// `sum_{j<=order} C(dim, j) (h - d)^j d^(dim - j)` with `h` the hull
    /// width and `d` the digit count.
    pub fn size(&self) -> u128 {
        let (lo, hi) = self.hull();
        let h = (hi - lo + 1) as u128;
        let d = self.digits.len() as u128;
        (0..=self.order)
            .map(|j| binom(self.dim, j) * (h - d).pow(j as u32) * d.pow((self.dim - j) as u32))
            .sum()
    }

    /// Enumerates the block as a disjoint union over the set `J` of
    /// coordinates lying outside the digit set.
    fn materialize(&self, cap: u128) -> Result<PointSet> {
        let size = self.size();
        if size > cap {
            return Err(Error::budget("materialized B", size, cap));
        }
        let (lo, hi) = self.hull();
        let gaps: Vec<i64> = (lo..=hi).filter(|&v| !self.table.contains(v)).collect();
        let mut flat = Vec::with_capacity(size as usize * self.dim);
        for j in 0..=self.order {
            for outside in (0..self.dim).combinations(j) {
                let factors: Vec<&[i64]> = (0..self.dim)
                    .map(|c| {
                        if outside.contains(&c) {
                            gaps.as_slice()
                        } else {
                            self.digits.members()
                        }
                    })
                    .collect();
                for p in factors
                    .iter()
                    .map(|f| f.iter().copied())
                    .multi_cartesian_product()
                {
                    flat.extend_from_slice(&p);
                }
            }
        }
        PointSet::from_flat(self.dim, flat)
    }
}

fn binom(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t as u128 + 1))
}

impl LatticeSet for DigitBlock {
    fn dim(&self) -> usize {
        self.dim
    }

    fn contains(&self, p: &[i64]) -> bool {
        let (lo, hi) = self.hull();
        let mut outside = 0;
        for &c in p {
            if c < lo || c > hi {
                return false;
            }
            if !self.table.contains(c) {
                outside += 1;
                if outside > self.order {
                    return false;
                }
            }
        }
        p.len() == self.dim
    }

    fn bounds(&self) -> Option<Bounds> {
        let (lo, hi) = self.hull();
        Some(Bounds {
            lo: vec![lo; self.dim],
            hi: vec![hi; self.dim],
        })
    }

    /// Coordinates of skeleton points vary independently: pinned
    /// coordinates take `x_j +- r`, free ones range over `[x_j - r, x_j + r]`.
    /// The worst point therefore has `sum_j pinned_bad_j + min(k, #j with
    /// free_bad_j > pinned_bad_j)` coordinates outside the digit set.
    fn contains_skeleton(&self, center: &[i64], radius: i64, order: usize) -> bool {
        let (lo, hi) = self.hull();
        let mut pinned_bad = 0;
        let mut upgrades = 0;
        for &c in center {
            if c - radius < lo || c + radius > hi {
                return false;
            }
            let pinned = !(self.table.contains(c - radius) && self.table.contains(c + radius));
            let free = !self.table.contains_range(c - radius, c + radius);
            pinned_bad += pinned as usize;
            upgrades += (free && !pinned) as usize;
        }
        pinned_bad + upgrades.min(order) <= self.order
    }
}

/// `g(block)` for the integer matrix `g = scale * M^{-1}`; membership pulls
/// back through `M`.
#[derive(Clone, Debug)]
pub struct LinearImage {
    inner: DigitBlock,
    forward: Vec<Vec<i64>>,
    back: Vec<Vec<i64>>,
    scale: i64,
}

impl LinearImage {
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(&self.forward, x)
    }

    fn pull_back(&self, y: &[i64]) -> Option<Vec<i64>> {
        mat_vec(&self.back, y)
            .into_iter()
            .map(|v| (v % self.scale == 0).then_some(v / self.scale))
            .collect()
    }
}

fn mat_vec(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

impl LatticeSet for LinearImage {
    fn dim(&self) -> usize {
        self.inner.dim
    }

    fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.inner.dim && self.pull_back(p).is_some_and(|x| self.inner.contains(&x))
    }

    fn bounds(&self) -> Option<Bounds> {
        let (lo, hi) = self.inner.hull();
        let (mut blo, mut bhi) = (Vec::new(), Vec::new());
        for row in &self.forward {
            let (mut a, mut b) = (0, 0);
            for &g in row {
                a += (g * lo).min(g * hi);
                b += (g * lo).max(g * hi);
            }
            blo.push(a);
            bhi.push(b);
        }
        Some(Bounds { lo: blo, hi: bhi })
    }
}

/// The set `B` of a construction.
#[derive(Clone, Debug)]
pub enum ConstructedSet {
    Block(DigitBlock),
    Image(LinearImage),
}

impl ConstructedSet {
    /// Exact number of points.
    pub fn size(&self) -> u128 {
        match self {
            ConstructedSet::Block(b) => b.size(),
            ConstructedSet::Image(g) => g.inner.size(),
        }
    }

    pub fn materialize(&self, cap: u128) -> Result<PointSet> {
        match self {
            ConstructedSet::Block(b) => b.materialize(cap),
            ConstructedSet::Image(g) => {
                let inner = g.inner.materialize(cap)?;
                let mut flat = Vec::with_capacity(inner.len() * inner.dim());
                for x in inner.iter() {
                    flat.extend(g.apply(x));
                }
                PointSet::from_flat(inner.dim(), flat)
            }
        }
    }
}

impl LatticeSet for ConstructedSet {
    fn dim(&self) -> usize {
        match self {
            ConstructedSet::Block(b) => b.dim(),
            ConstructedSet::Image(g) => g.dim(),
        }
    }
    fn contains(&self, p: &[i64]) -> bool {
        match self {
            ConstructedSet::Block(b) => b.contains(p),
            ConstructedSet::Image(g) => g.contains(p),
        }
    }
    fn bounds(&self) -> Option<Bounds> {
        match self {
            ConstructedSet::Block(b) => b.bounds(),
            ConstructedSet::Image(g) => g.bounds(),
        }
    }
    fn contains_skeleton(&self, center: &[i64], radius: i64, order: usize) -> bool {
        match self {
            ConstructedSet::Block(b) => b.contains_skeleton(center, radius, order),
            ConstructedSet::Image(g) => g.contains_skeleton(center, radius, order),
        }
    }
}

/// A construction `(B, S)` together with its parameters.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub shape: Shape,
    pub n: usize,
    /// Skeleton order `k`, projection dimension `l`, or 0 for orthoplexes.
    pub order: usize,
    pub p: u64,
    pub base: i64,
    /// Denominator cleared by the orthoplex linear map; 1 otherwise.
    pub scale: i64,
    pub b: ConstructedSet,
    pub s: PointSet,
}

/// JSON summary emitted next to constructed files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub n: usize,
    pub k: usize,
    pub p: u64,
    pub i: i64,
    #[serde(rename = "sizeB")]
    pub size_b: u128,
    #[serde(rename = "sizeS")]
    pub size_s: usize,
    pub scale: i64,
}

impl ConstructionResult {
    pub fn summary(&self) -> Summary {
        Summary {
            n: self.n,
            k: self.order,
            p: self.p,
            i: self.base,
            size_b: self.b.size(),
            size_s: self.s.len(),
            scale: self.scale,
        }
    }

    /// Runs the verifier matching the construction's shape.
    pub fn verify(&self) -> Result<CoverReport> {
        match self.shape {
            Shape::Skeleton => verify_cover(&self.b, &self.s, self.order),
            Shape::Nl => verify_nl_condition(&self.b, &self.s),
            Shape::Orthoplex => verify_orthoplex_cover(&self.b, &self.s),
        }
    }
}

/// Smallest `i >= 2` with `p <= (i^{2n} - 1)^n`.
pub fn choose_base(n: usize, p: u64) -> Result<i64> {
    if n == 0 || p == 0 {
        return Err(Error::invalid("need n >= 1 and p >= 1"));
    }
    let mut i = 2i64;
    loop {
        let side = i
            .checked_pow(2 * n as u32)
            .ok_or(Error::Overflow("block side"))? as u128
            - 1;
        if side.checked_pow(n as u32).is_none_or(|c| p as u128 <= c) {
            return Ok(i);
        }
        i += 1;
    }
}

/// First `p` points of `[1, side]^n` in lexicographic order.
pub fn lex_prefix(n: usize, side: i64, p: u64, cap: u128) -> Result<PointSet> {
    if p as u128 > cap {
        return Err(Error::budget("materialized S", p as u128, cap));
    }
    let total = (side as u128).checked_pow(n as u32);
    if total.is_some_and(|t| (p as u128) > t) {
        return Err(Error::invalid(format!(
            "p = {p} exceeds the block [1, {side}]^{n}"
        )));
    }
    let mut flat = Vec::with_capacity(p as usize * n);
    let mut cur = vec![1i64; n];
    for _ in 0..p {
        flat.extend_from_slice(&cur);
        for j in (0..n).rev() {
            if cur[j] < side {
                cur[j] += 1;
                break;
            }
            cur[j] = 1;
        }
    }
    PointSet::from_flat(n, flat)
}

/// Skeleton construction with the default point cap on `S`.
pub fn skeleton_construction(n: usize, k: usize, p: u64) -> Result<ConstructionResult> {
    skeleton_construction_with_cap(n, k, p, DEFAULT_POINT_CAP)
}

/// `S` = first `p` points of `[1, i^{2n} - 1]^n`; `B` = points of the digit
/// hull with at most `k` coordinates outside `D(i, n)`.
pub fn skeleton_construction_with_cap(
    n: usize,
    k: usize,
    p: u64,
    cap: u128,
) -> Result<ConstructionResult> {
    if k >= n {
        return Err(Error::invalid(format!(
            "skeleton order {k} must be below n = {n}"
        )));
    }
    let i = choose_base(n, p)?;
    let digits = build_digit_set(i, n)?;
    let s = lex_prefix(n, digits.top(), p, cap)?;
    Ok(ConstructionResult {
        shape: Shape::Skeleton,
        n,
        order: k,
        p,
        base: i,
        scale: 1,
        b: ConstructedSet::Block(DigitBlock::new(digits, n, k)?),
        s,
    })
}

/// `(|S|, |B|)` of the full-block skeleton construction at base `i`, without
/// materializing either set.
pub fn skeleton_block_sizes(n: usize, k: usize, i: i64) -> Result<(u128, u128)> {
    if k >= n {
        return Err(Error::invalid(format!(
            "skeleton order {k} must be below n = {n}"
        )));
    }
    let digits = build_digit_set(i, n)?;
    let size_s = (digits.top() as u128).pow(n as u32);
    Ok((size_s, DigitBlock::new(digits, n, k)?.size()))
}

pub fn nl_construction(n: usize, l: usize, p: u64) -> Result<ConstructionResult> {
    nl_construction_with_cap(n, l, p, DEFAULT_POINT_CAP)
}

/// `B = D(i, n)^l` in `Z^l`, `S` = first `p` points of `[1, i^{2n} - 1]^n`.
pub fn nl_construction_with_cap(
    n: usize,
    l: usize,
    p: u64,
    cap: u128,
) -> Result<ConstructionResult> {
    if l == 0 || l > n {
        return Err(Error::invalid(format!(
            "projection dimension {l} must lie in 1..={n}"
        )));
    }
    let i = choose_base(n, p)?;
    let digits = build_digit_set(i, n)?;
    let s = lex_prefix(n, digits.top(), p, cap)?;
    Ok(ConstructionResult {
        shape: Shape::Nl,
        n,
        order: l,
        p,
        base: i,
        scale: 1,
        b: ConstructedSet::Block(DigitBlock::new(digits, l, 0)?),
        s,
    })
}

/// The sign vectors `(1,..,1)` and `(1,..,-1 at slot i,..,1)`, and the
/// integer matrix `scale * M^{-1}` where `M` has those vectors as columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignBasis {
    pub vectors: Vec<Vec<i64>>,
    pub inverse_scaled: Vec<Vec<i64>>,
    pub scale: i64,
}

impl SignBasis {
    /// `M` with the sign vectors as columns.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vectors.len();
        (0..n)
            .map(|row| (0..n).map(|col| self.vectors[col][row]).collect())
            .collect()
    }
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
fn rational_inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut ext: Vec<BigRational> = row
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect();
            ext.extend((0..n).map(|c| {
                if c == r {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            ext
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::invalid("sign vectors are linearly dependent"))?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn sign_basis(n: usize) -> Result<SignBasis> {
    if n == 0 {
        return Err(Error::invalid("sign basis needs n >= 1"));
    }
    let vectors: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i > 0 && j == i { -1 } else { 1 })
                .collect()
        })
        .collect();
    let m: Vec<Vec<i64>> = (0..n)
        .map(|r| (0..n).map(|c| vectors[c][r]).collect())
        .collect();
    let inv = rational_inverse(&m)?;
    let scale = inv
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let inverse_scaled = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|q| {
                    let v = q * BigRational::from_integer(scale.clone());
                    debug_assert!(v.is_integer());
                    v.to_integer().to_i64().ok_or(Error::Overflow("sign basis"))
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SignBasis {
        vectors,
        inverse_scaled,
        scale: scale
            .abs()
            .to_i64()
            .ok_or(Error::Overflow("sign basis scale"))?,
    })
}

pub fn orthoplex_construction(n: usize, p: u64) -> Result<ConstructionResult> {
    orthoplex_construction_with_cap(n, p, DEFAULT_POINT_CAP)
}

/// `S = g(first p points of [1, i^{2n} - 1]^n)`, `B = g(D(i, n)^n)` with
/// `g = scale * M^{-1}` sending each sign vector to `scale * e_i`.
pub fn orthoplex_construction_with_cap(n: usize, p: u64, cap: u128) -> Result<ConstructionResult> {
    let basis = sign_basis(n)?;
    let i = choose_base(n, p)?;
    let digits = build_digit_set(i, n)?;
    let cube = lex_prefix(n, digits.top(), p, cap)?;
    let image = LinearImage {
        inner: DigitBlock::new(digits, n, 0)?,
        back: basis.matrix(),
        forward: basis.inverse_scaled.clone(),
        scale: basis.scale,
    };
    let mut flat = Vec::with_capacity(cube.len() * n);
    for x in cube.iter() {
        flat.extend(image.apply(x));
    }
    let s = PointSet::from_flat(n, flat)?;
    Ok(ConstructionResult {
        shape: Shape::Orthoplex,
        n,
        order: 0,
        p,
        base: i,
        scale: basis.scale,
        b: ConstructedSet::Image(image),
        s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::find_radius;
    use crate::lattice::{orthoplex_points, skeleton_points, LatticePoint, SkeletonSpec};

    #[test]
    fn base_selection() {
        assert_eq!(choose_base(2, 1).unwrap(), 2);
        assert_eq!(choose_base(2, 225).unwrap(), 2);
        assert_eq!(choose_base(2, 226).unwrap(), 3);
        assert_eq!(choose_base(1, 3).unwrap(), 2);
        assert_eq!(choose_base(1, 4).unwrap(), 3);
        assert!(choose_base(2, 0).is_err());
    }

    #[test]
    fn lex_prefix_order() {
        let s = lex_prefix(2, 3, 5, DEFAULT_POINT_CAP).unwrap();
        let pts: Vec<Vec<i64>> = s.iter().map(<[i64]>::to_vec).collect();
        assert_eq!(
            pts,
            vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 1], vec![2, 2]]
        );
        assert!(lex_prefix(2, 3, 10, DEFAULT_POINT_CAP).is_err());
        assert!(lex_prefix(2, 3, 5, 4).is_err());
    }

    #[test]
    fn vertex_block_is_digit_square() {
        let c = skeleton_construction(2, 0, 225).unwrap();
        assert_eq!(c.base, 2);
        assert_eq!(c.s.len(), 225);
        let d = build_digit_set(2, 2).unwrap();
        let b = c.b.materialize(DEFAULT_POINT_CAP).unwrap();
        let square = PointSet::from_points(
            2,
            d.members()
                .iter()
                .flat_map(|&u| d.members().iter().map(move |&v| [u, v])),
        )
        .unwrap();
        assert_eq!(b, square);
        assert!(c.verify().unwrap().satisfied);
    }

    #[test]
    fn single_point_construction() {
        for (n, k) in [(1, 0), (2, 0), (2, 1), (3, 2)] {
            let c = skeleton_construction(n, k, 1).unwrap();
            let rep = c.verify().unwrap();
            assert!(rep.satisfied);
            assert_eq!(rep.witnesses.len(), 1);
        }
    }

    #[test]
    fn block_size_matches_materialization() {
        for (n, k, p) in [(2, 0, 10), (2, 1, 10), (2, 1, 300), (1, 0, 4), (1, 0, 9)] {
            let c = skeleton_construction(n, k, p).unwrap();
            let b = c.b.materialize(DEFAULT_POINT_CAP).unwrap();
            assert_eq!(b.len() as u128, c.b.size(), "n={n} k={k}");
            // membership agrees with the materialized set on the hull
            if n == 2 {
                let bounds = b.bounds().unwrap();
                for u in bounds.lo[0] - 1..=bounds.hi[0] + 1 {
                    for v in bounds.lo[1] - 1..=bounds.hi[1] + 1 {
                        assert_eq!(b.contains(&[u, v]), c.b.contains(&[u, v]));
                    }
                }
            }
        }
        // n = 2, k = 1, i = 2: d = 55 digits inside a hull of 57 integers
        let c = skeleton_construction(2, 1, 225).unwrap();
        assert_eq!(c.b.size(), 55 * 55 + 2 * 55 * 2);
    }

    #[test]
    fn size_bound_with_digit_hull() {
        for (n, k) in [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)] {
            for i in 2..=3 {
                let d = build_digit_set(i, n).unwrap();
                let hull = (d.max() - d.min() + 1) as u128;
                let (_, size_b) = skeleton_block_sizes(n, k, i).unwrap();
                let bound =
                    binom(n, k) * (d.len() as u128).pow((n - k) as u32) * hull.pow(k as u32);
                assert!(size_b <= bound);
            }
        }
    }

    #[test]
    fn fast_skeleton_check_matches_enumeration() {
        let c = skeleton_construction(2, 1, 225).unwrap();
        let ConstructedSet::Block(block) = &c.b else {
            unreachable!()
        };
        let b = c.b.materialize(DEFAULT_POINT_CAP).unwrap();
        for x in c.s.iter().step_by(7) {
            for r in 1..=12 {
                for order in 0..2 {
                    let spec = SkeletonSpec::new(LatticePoint::from(x), r, order).unwrap();
                    let brute = skeleton_points(&spec).is_subset(&b);
                    assert_eq!(block.contains_skeleton(x, r, order), brute, "x={x:?} r={r}");
                }
            }
        }
        let c = skeleton_construction(3, 1, 40).unwrap();
        let ConstructedSet::Block(block) = &c.b else {
            unreachable!()
        };
        for x in c.s.iter() {
            for r in 1..=6 {
                for order in 0..3 {
                    let spec = SkeletonSpec::new(LatticePoint::from(x), r, order).unwrap();
                    let brute = skeleton_points(&spec).is_subset(&c.b);
                    assert_eq!(block.contains_skeleton(x, r, order), brute);
                }
            }
        }
    }

    #[test]
    fn narrow_free_factor_leaves_block_corner_uncovered() {
        // free coordinates restricted to [1, 15] instead of the digit hull
        let d = build_digit_set(2, 2).unwrap();
        let top = d.top();
        let mut flat = Vec::new();
        for &u in d.members() {
            for v in 1..=top {
                flat.extend_from_slice(&[u, v, v, u]);
            }
        }
        let narrow = PointSet::from_flat(2, flat).unwrap();
        let s = PointSet::from_points(2, [[top, top]]).unwrap();
        assert!(!verify_cover(&narrow, &s, 1).unwrap().satisfied);
        let c = skeleton_construction(2, 1, 225).unwrap();
        assert!(verify_cover(&c.b, &s, 1).unwrap().satisfied);
    }

    #[test]
    fn interpolation_keeps_b() {
        let a = skeleton_construction(2, 1, 20).unwrap();
        let b = skeleton_construction(2, 1, 200).unwrap();
        assert_eq!(a.base, b.base);
        assert_eq!(a.b.size(), b.b.size());
        assert_eq!(
            a.b.materialize(DEFAULT_POINT_CAP).unwrap(),
            b.b.materialize(DEFAULT_POINT_CAP).unwrap()
        );
        for p in [1, 2, 17, 224, 225, 226] {
            assert_eq!(skeleton_construction(2, 0, p).unwrap().s.len() as u64, p);
        }
    }

    #[test]
    fn nl_examples() {
        let c = nl_construction(2, 2, 225).unwrap();
        assert_eq!(c.s.len(), 225);
        assert_eq!(c.b.size(), 55 * 55);
        assert!(c.verify().unwrap().satisfied);

        let c = nl_construction(1, 1, 3).unwrap();
        let d = build_digit_set(2, 1).unwrap();
        assert_eq!(c.b.materialize(100).unwrap().len(), d.len());
        for x in 1..=3 {
            let r = find_radius(&[x], 2).unwrap();
            assert!(d.contains(x + r) && d.contains(x - r));
        }
        assert!(c.verify().unwrap().satisfied);
        assert!(nl_construction(2, 3, 5).is_err());
        assert!(nl_construction(2, 0, 5).is_err());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn sign_basis_examples() {
        let b = sign_basis(2).unwrap();
        assert_eq!(b.matrix(), vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(b.scale, 2);
        assert_eq!(b.inverse_scaled, vec![vec![1, 1], vec![1, -1]]);
        let one = sign_basis(1).unwrap();
        assert_eq!((one.scale, one.inverse_scaled.clone()), (1, vec![vec![1]]));
        for n in 1..=5 {
            let b = sign_basis(n).unwrap();
            let m = b.matrix();
            for r in 0..n {
                for c in 0..n {
                    let v: i64 = (0..n).map(|t| b.inverse_scaled[r][t] * m[t][c]).sum();
                    assert_eq!(v, if r == c { b.scale } else { 0 });
                }
            }
            for i in 1..n {
                let diff: Vec<i64> = (0..n).map(|j| b.vectors[i][j] - b.vectors[0][j]).collect();
                let expected: Vec<i64> = (0..n).map(|j| if j == i { -2 } else { 0 }).collect();
                assert_eq!(diff, expected);
            }
        }
        assert!(sign_basis(0).is_err());
    }

    #[test]
    fn orthoplex_examples() {
        let c = orthoplex_construction(1, 3).unwrap();
        assert_eq!(c.scale, 1);
        let d = build_digit_set(2, 1).unwrap();
        assert_eq!(
            c.b.materialize(100)
                .unwrap()
                .iter()
                .map(|p| p[0])
                .collect::<Vec<_>>(),
            d.members()
        );
        assert!(c.verify().unwrap().satisfied);

        let c = orthoplex_construction(2, 225).unwrap();
        assert_eq!(c.s.len(), 225);
        assert_eq!(c.b.size(), 55 * 55);
        let rep = c.verify().unwrap();
        assert!(rep.satisfied);
        assert!(rep.witnesses.iter().all(|w| w.radius % c.scale == 0));

        // the implicit image agrees with the materialized one
        let b = c.b.materialize(DEFAULT_POINT_CAP).unwrap();
        assert_eq!(b.len() as u128, c.b.size());
        assert!(b.iter().all(|p| c.b.contains(p)));
        assert_eq!(verify_orthoplex_cover(&b, &c.s).unwrap(), rep);
        // witness radii reproduce actual orthoplexes
        for w in rep.witnesses.iter().take(20) {
            assert!(orthoplex_points(&w.point, w.radius).unwrap().is_subset(&b));
        }
    }

    #[test]
    fn materialize_respects_cap() {
        let c = skeleton_construction(3, 0, 10).unwrap();
        assert!(matches!(
            c.b.materialize(1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
