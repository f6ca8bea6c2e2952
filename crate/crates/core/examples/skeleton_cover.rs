// Builds sets B, S in Z^2 where B contains the 1-skeleton (the boundary) of
// a square around every point of S, then checks it point by point.

use skeletal::constructions::skeleton_construction;
use skeletal::lattice::{skeleton_points, LatticePoint, SkeletonSpec};

pub fn run() -> skeletal::Result<()> {
    let square = SkeletonSpec::new(LatticePoint::new(vec![0, 0])?, 1, 1)?;
    println!(
        "boundary of the 3x3 square: {} points",
        skeleton_points(&square).len()
    );

    for p in [1, 10, 225] {
        let c = skeleton_construction(2, 1, p)?;
        let report = c.verify()?;
        let summary = c.summary();
        println!(
            "p={p:>3}  base i={}  |S|={:>3}  |B|={:>5}  covered={}  largest radius={}",
            summary.i,
            summary.size_s,
            summary.size_b,
            report.satisfied,
            report.max_radius().unwrap_or(0)
        );
        assert!(report.satisfied);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skeletal::Result<()> {
    run()
}
