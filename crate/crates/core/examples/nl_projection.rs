// For S in Z^n and A in Z^l, every l-coordinate projection of some cube
// around each point of S must have its vertices in A.

use skeletal::constructions::nl_construction;
use skeletal::lattice::{nl_radius, verify_nl_condition, PointSet};

pub fn run() -> skeletal::Result<()> {
    let line = PointSet::from_points(1, (-4..=4).map(|v| vec![v]))?;
    println!(
        "radius for (1, 2) against [-4, 4]: {:?}",
        nl_radius(&line, &[1, 2])?
    );

    for (n, l, p) in [(2, 1, 100), (2, 2, 100), (3, 2, 60)] {
        let c = nl_construction(n, l, p)?;
        let report = verify_nl_condition(&c.b, &c.s)?;
        println!(
            "n={n} l={l}: |S|={} |A|={} satisfied={}",
            c.s.len(),
            c.b.size(),
            report.satisfied
        );
        assert!(report.satisfied);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skeletal::Result<()> {
    run()
}
