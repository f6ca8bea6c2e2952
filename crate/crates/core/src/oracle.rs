//! Exact minimal covers on small instances by branch and bound.
//!
//! Any feasible `B` contains one shape per point of `S`, and every such union
//! is feasible, so the minimum is taken over radius assignments
//! `r: S -> [1, r_max]`.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    orthoplex_points, skeleton_points, verify_cover, verify_orthoplex_cover, CoverReport,
    LatticePoint, PointSet, SkeletonSpec,
};

/// Default cap on search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverShape {
    /// The `k`-skeleton; `Skeleton(0)` is the vertex shape.
    Skeleton(usize),
    Orthoplex,
}

impl CoverShape {
    pub fn points(&self, center: &[i64], radius: i64) -> Result<PointSet> {
        let c = LatticePoint::new(center.to_vec())?;
        match *self {
            CoverShape::Skeleton(k) => Ok(skeleton_points(&SkeletonSpec::new(c, radius, k)?)),
            CoverShape::Orthoplex => orthoplex_points(&c, radius),
        }
    }

    /// Whether the explicit `|S|^((2n-1)/2n) / 2^(n-1)` lower bound applies.
    pub fn has_explicit_bound(&self) -> bool {
        matches!(self, CoverShape::Skeleton(0) | CoverShape::Orthoplex)
    }
}

#[derive(Clone, Debug)]
pub struct CoverInstance {
    pub s: PointSet,
    pub shape: CoverShape,
    pub r_max: i64,
}

impl CoverInstance {
    pub fn new(s: PointSet, shape: CoverShape, r_max: i64) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::invalid("cover instance needs a nonempty S"));
        }
        if r_max < 1 {
            return Err(Error::invalid(format!("r_max must be >= 1, got {r_max}")));
        }
        if let CoverShape::Skeleton(k) = shape {
            if k >= s.dim() {
                return Err(Error::invalid(format!(
                    "skeleton order {k} must be below {}",
                    s.dim()
                )));
            }
        }
        Ok(CoverInstance { s, shape, r_max })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub point: LatticePoint,
    pub radius: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// Minimal within the radius cap when `complete`, otherwise the best found.
    pub min_size: usize,
    pub assignment: Vec<Assignment>,
    pub nodes_explored: u64,
    /// False when the node budget ran out before the search finished.
    pub complete: bool,
}

impl OracleResult {
    /// The union of the assigned shapes.
    pub fn union(&self, shape: CoverShape) -> Result<PointSet> {
        let mut out: Option<PointSet> = None;
        for a in &self.assignment {
            let pts = shape.points(a.point.coords(), a.radius)?;
            out = Some(match out {
                None => pts,
                Some(acc) => acc.union(&pts)?,
            });
        }
        out.ok_or_else(|| Error::invalid("empty assignment"))
    }

    /// Rebuilds `B` and runs the matching verifier on it.
    pub fn replay(&self, instance: &CoverInstance) -> Result<(PointSet, CoverReport)> {
        let b = self.union(instance.shape)?;
        let report = match instance.shape {
            CoverShape::Skeleton(k) => verify_cover(&b, &instance.s, k)?,
            CoverShape::Orthoplex => verify_orthoplex_cover(&b, &instance.s)?,
        };
        Ok((b, report))
    }
}

/// `|S|^((2n-1)/(2n)) / 2^(n-1)`.
pub fn explicit_lower_bound(n: usize, size_s: usize) -> f64 {
    let e = (2 * n - 1) as f64 / (2 * n) as f64;
    (size_s as f64).powf(e) / 2f64.powi(n as i32 - 1)
}

/// Shapes as interned point ids: `shapes[j][r - 1]` for the `j`th point of S.
fn intern_shapes(instance: &CoverInstance) -> Result<(Vec<Vec<Vec<u32>>>, usize)> {
    let mut ids: HashMap<Vec<i64>, u32> = HashMap::new();
    let mut shapes = Vec::with_capacity(instance.s.len());
    for x in instance.s.iter() {
        let mut per_radius = Vec::with_capacity(instance.r_max as usize);
        for r in 1..=instance.r_max {
            let pts = instance.shape.points(x, r)?;
            let row = pts
                .iter()
                .map(|p| {
                    let next = ids.len() as u32;
                    *ids.entry(p.to_vec()).or_insert(next)
                })
                .collect();
            per_radius.push(row);
        }
        shapes.push(per_radius);
    }
    Ok((shapes, ids.len()))
}

struct Search<'a> {
    shapes: &'a [Vec<Vec<u32>>],
    counts: Vec<u32>,
    union: usize,
    current: Vec<i64>,
    best: usize,
    best_assignment: Vec<i64>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn add(&mut self, j: usize, r: i64) {
        for &id in &self.shapes[j][(r - 1) as usize] {
            let c = &mut self.counts[id as usize];
            if *c == 0 {
                self.union += 1;
            }
            *c += 1;
        }
    }

    fn remove(&mut self, j: usize, r: i64) {
        for &id in &self.shapes[j][(r - 1) as usize] {
            let c = &mut self.counts[id as usize];
            *c -= 1;
            if *c == 0 {
                self.union -= 1;
            }
        }
    }

    // Children are visited in increasing radius and only strict improvements
    // are kept, so the first optimum found is the lexicographically least.
    fn dfs(&mut self, j: usize) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if self.union >= self.best {
            return;
        }
        if j == self.shapes.len() {
            self.best = self.union;
            self.best_assignment = self.current.clone();
            return;
        }
        for r in 1..=self.shapes[j].len() as i64 {
            self.add(j, r);
            self.current.push(r);
            self.dfs(j + 1);
            self.current.pop();
            self.remove(j, r);
        }
    }
}

pub fn min_cover(instance: &CoverInstance) -> Result<OracleResult> {
    min_cover_with_budget(instance, DEFAULT_NODE_BUDGET)
}

pub fn min_cover_with_budget(instance: &CoverInstance, budget: u64) -> Result<OracleResult> {
    let (shapes, universe) = intern_shapes(instance)?;
    let mut search = Search {
        shapes: &shapes,
        counts: vec![0; universe],
        union: 0,
        current: Vec::with_capacity(shapes.len()),
        best: usize::MAX,
        best_assignment: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.dfs(0);
    if search.best_assignment.is_empty() {
        return Err(Error::budget(
            "oracle search nodes",
            budget as u128 + 1,
            budget as u128,
        ));
    }
    let assignment = instance
        .s
        .iter()
        .zip(&search.best_assignment)
        .map(|(p, &radius)| Assignment {
            point: p.into(),
            radius,
        })
        .collect();
    Ok(OracleResult {
        min_size: search.best,
        assignment,
        nodes_explored: search.nodes.min(budget),
        complete: !search.exhausted,
    })
}

/// Plain enumeration of every assignment; only for cross-checking.
pub fn min_cover_exhaustive(instance: &CoverInstance) -> Result<OracleResult> {
    let (shapes, _) = intern_shapes(instance)?;
    let m = shapes.len();
    let mut radii = vec![1i64; m];
    let mut best: Option<(usize, Vec<i64>)> = None;
    let mut leaves = 0u64;
    loop {
        leaves += 1;
        let union: HashSet<u32> = (0..m)
            .flat_map(|j| shapes[j][(radii[j] - 1) as usize].iter().copied())
            .collect();
        if best.as_ref().is_none_or(|(b, _)| union.len() < *b) {
            best = Some((union.len(), radii.clone()));
        }
        // odometer with the last point varying fastest, i.e. lexicographic
        let Some(pos) = (0..m).rev().find(|&j| radii[j] < instance.r_max) else {
            break;
        };
        radii[pos] += 1;
        radii[pos + 1..].iter_mut().for_each(|r| *r = 1);
    }
    let (min_size, radii) = best.expect("at least one assignment");
    Ok(OracleResult {
        min_size,
        assignment: instance
            .s
            .iter()
            .zip(radii)
            .map(|(p, radius)| Assignment {
                point: p.into(),
                radius,
            })
            .collect(),
        nodes_explored: leaves,
        complete: true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub size_s: usize,
    pub min_size: usize,
    pub r_max: i64,
    pub nodes_explored: u64,
}

/// Runs every instance and returns rows ordered by `|S|`, ties in input
/// order. Fails if any instance runs out of budget.
pub fn min_cover_sweep(instances: &[CoverInstance], budget: u64) -> Result<Vec<SweepRow>> {
    let results: Vec<Result<SweepRow>> = instances
        .par_iter()
        .map(|inst| {
            let res = min_cover_with_budget(inst, budget)?;
            if !res.complete {
                return Err(Error::budget(
                    "oracle search nodes",
                    budget as u128 + 1,
                    budget as u128,
                ));
            }
            Ok(SweepRow {
                size_s: inst.s.len(),
                min_size: res.min_size,
                r_max: inst.r_max,
                nodes_explored: res.nodes_explored,
            })
        })
        .collect();
    let mut rows = results.into_iter().collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.size_s);
    Ok(rows)
}

pub fn write_sweep_csv<W: std::io::Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)
            .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(dim: usize, pts: &[&[i64]]) -> PointSet {
        PointSet::from_points(dim, pts.iter().map(|p| p.to_vec())).unwrap()
    }

    fn vertex(s: PointSet, r_max: i64) -> CoverInstance {
        CoverInstance::new(s, CoverShape::Skeleton(0), r_max).unwrap()
    }

    #[test]
    fn line_examples() {
        let res = min_cover(&vertex(set(1, &[&[0]]), 4)).unwrap();
        assert_eq!(res.min_size, 2);
        assert_eq!(res.assignment[0].radius, 1);

        let inst = vertex(set(1, &[&[0], &[1], &[2]]), 3);
        let res = min_cover(&inst).unwrap();
        assert_eq!(res.min_size, 3);
        assert!(res.complete);
        let (b, report) = res.replay(&inst).unwrap();
        assert_eq!(b, set(1, &[&[-1], &[1], &[3]]));
        assert!(report.satisfied);
        let radii: Vec<i64> = res.assignment.iter().map(|a| a.radius).collect();
        assert_eq!(radii, vec![1, 2, 1]);
    }

    #[test]
    fn instance_validation() {
        assert!(CoverInstance::new(set(1, &[&[0]]), CoverShape::Skeleton(0), 0).is_err());
        assert!(CoverInstance::new(set(1, &[&[0]]), CoverShape::Skeleton(1), 2).is_err());
        assert!(CoverInstance::new(PointSet::empty(2).unwrap(), CoverShape::Orthoplex, 2).is_err());
    }

    #[test]
    fn budget_is_flagged() {
        let inst = vertex(set(1, &[&[0], &[1], &[2], &[5]]), 3);
        let res = min_cover_with_budget(&inst, 6).unwrap();
        assert!(!res.complete);
        assert!(min_cover_with_budget(&inst, 2).is_err());
        assert!(min_cover_sweep(&[inst], 6).is_err());
    }

    #[test]
    fn branch_and_bound_matches_enumeration() {
        let grid: Vec<Vec<i64>> = (0..3)
            .cartesian_product(0..3)
            .map(|(a, b)| vec![a, b])
            .collect();
        let shapes = [
            CoverShape::Skeleton(0),
            CoverShape::Skeleton(1),
            CoverShape::Orthoplex,
        ];
        for size in 1..=3 {
            for pts in grid.iter().combinations(size) {
                let s = PointSet::from_points(2, pts.into_iter().cloned()).unwrap();
                for shape in shapes {
                    for r_max in 1..=3 {
                        let inst = CoverInstance::new(s.clone(), shape, r_max).unwrap();
                        let fast = min_cover(&inst).unwrap();
                        let slow = min_cover_exhaustive(&inst).unwrap();
                        assert_eq!(fast.min_size, slow.min_size);
                        assert_eq!(fast.assignment, slow.assignment);
                        let (b, report) = fast.replay(&inst).unwrap();
                        assert_eq!(b.len(), fast.min_size);
                        assert!(report.satisfied);
                    }
                }
            }
        }
        for size in 1..=3 {
            for pts in (0..5i64).combinations(size) {
                let s = PointSet::from_points(1, pts.into_iter().map(|v| vec![v])).unwrap();
                let inst = vertex(s, 3);
                assert_eq!(min_cover(&inst).unwrap(), {
                    let mut slow = min_cover_exhaustive(&inst).unwrap();
                    slow.nodes_explored = min_cover(&inst).unwrap().nodes_explored;
                    slow
                });
            }
        }
    }

    #[test]
    fn explicit_lower_bound_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let pts: Vec<Vec<i64>> = (0..3)
                .map(|_| vec![rng.gen_range(0..6), rng.gen_range(0..6)])
                .collect();
            let s = PointSet::from_points(2, pts).unwrap();
            for shape in [CoverShape::Skeleton(0), CoverShape::Orthoplex] {
                let res = min_cover(&CoverInstance::new(s.clone(), shape, 3).unwrap()).unwrap();
                assert!(res.min_size as f64 >= explicit_lower_bound(2, s.len()));
                assert!(res.min_size >= 2);
                assert!(res.min_size <= 4 * s.len());
            }
        }
    }

    #[test]
    fn adding_points_never_helps() {
        let line: Vec<Vec<i64>> = (0..6).map(|v| vec![v * 2 % 5]).collect();
        let instances: Vec<CoverInstance> = (1..=line.len())
            .map(|m| vertex(PointSet::from_points(1, line[..m].to_vec()).unwrap(), 4))
            .collect();
        let rows = min_cover_sweep(&instances, DEFAULT_NODE_BUDGET).unwrap();
        assert!(rows.windows(2).all(|w| w[0].min_size <= w[1].min_size));
        let singles: Vec<CoverInstance> = (0..4).map(|v| vertex(set(1, &[&[v]]), 3)).collect();
        let rows = min_cover_sweep(&singles, DEFAULT_NODE_BUDGET).unwrap();
        assert!(rows.iter().all(|r| r.min_size == 2));
    }

    #[test]
    fn sweep_csv_layout() {
        let rows = min_cover_sweep(&[vertex(set(1, &[&[0]]), 2)], 100).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("size_s,min_size,r_max,nodes_explored\n1,2,2,"));
    }
}
