// Exact smallest B for tiny S, compared with the explicit lower bound
// |S|^((2n-1)/2n) / 2^(n-1).

use skeletal::lattice::PointSet;
use skeletal::oracle::{
    explicit_lower_bound, min_cover, min_cover_sweep, CoverInstance, CoverShape,
};

pub fn run() -> skeletal::Result<()> {
    let line = PointSet::from_points(1, [[0i64], [1], [2]].iter().map(|p| p.to_vec()))?;
    let inst = CoverInstance::new(line, CoverShape::Skeleton(0), 3)?;
    let res = min_cover(&inst)?;
    let (b, report) = res.replay(&inst)?;
    let b: Vec<i64> = b.iter().map(|p| p[0]).collect();
    println!("S = {{0,1,2}}: min |B| = {} with B = {b:?}", res.min_size);
    assert!(report.satisfied);

    let s = PointSet::from_points(2, vec![vec![0, 0], vec![1, 2], vec![3, 1]])?;
    for shape in [
        CoverShape::Skeleton(0),
        CoverShape::Skeleton(1),
        CoverShape::Orthoplex,
    ] {
        let res = min_cover(&CoverInstance::new(s.clone(), shape, 3)?)?;
        println!(
            "{shape:?}: min |B| = {:>2} after {:>3} nodes (bound {:.2})",
            res.min_size,
            res.nodes_explored,
            explicit_lower_bound(2, s.len())
        );
    }

    let pts: Vec<Vec<i64>> = (0..5).map(|v| vec![v * 3 % 7]).collect();
    let prefixes = (1..=pts.len())
        .map(|m| {
            CoverInstance::new(
                PointSet::from_points(1, pts[..m].to_vec())?,
                CoverShape::Skeleton(0),
                4,
            )
        })
        .collect::<skeletal::Result<Vec<_>>>()?;
    for row in min_cover_sweep(&prefixes, 1_000_000)? {
        println!("  |S|={} min |B|={}", row.size_s, row.min_size);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skeletal::Result<()> {
    run()
}
