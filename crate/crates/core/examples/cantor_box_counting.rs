// Cantor-type sums in one dimension: T has dimension near 1, while A, the
// set hit by x +- r for all x in T, should look thinner.

use num_rational::BigRational;
use num_traits::One;
use skeletal::cantor::{dimension_estimate, truncated_sum, vertex_stages};
use skeletal::exponents::format_rational;

pub fn run() -> skeletal::Result<()> {
    let vs = vertex_stages(1, &BigRational::one(), 3)?;
    println!("T flags {:?}", vs.t_stages.flags());
    println!("A flags {:?}", vs.a.flags());

    let scales: Vec<BigRational> = vs.t_stages.stages.iter().map(|s| s.delta.clone()).collect();
    for (name, spec) in [("T", &vs.t_stages), ("A", &vs.a)] {
        let sum = truncated_sum(spec, 3)?;
        let est = dimension_estimate(&sum.points, &scales)?;
        println!(
            "{name}: {} points, slope {:.3}",
            sum.points.len(),
            est.slope
        );
        for row in &est.table {
            println!(
                "  scale {:>7}  boxes {:>5}",
                format_rational(&row.scale),
                row.count
            );
        }
    }

    let x = vs.t_stages.stages[1].points[5].clone();
    let rho = vs.radius(1, std::slice::from_ref(&x))?;
    println!(
        "x = {} uses rho = {}",
        format_rational(&x),
        format_rational(&rho)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> skeletal::Result<()> {
    run()
}
