// The sharp exponent beta(n, k) and the bootstrap iteration that climbs to it.

use skeletal::exponents::{beta, format_rational, iterate_f, rational_to_f64};

pub fn run() -> skeletal::Result<()> {
    let rep = iterate_f(2, 1, 1e-9, 10_000)?;
    println!("n=2 k=1: beta {}", format_rational(&rep.beta));
    for (m, a) in rep.trace.iter().take(5).enumerate() {
        println!(
            "  f^{m}(0) = {:<12} ~ {:.6}",
            format_rational(a),
            rational_to_f64(a)
        );
    }
    println!(
        "  within 1e-9 after {:?} steps, monotone {}",
        rep.converged_at,
        rep.is_monotone()
    );

    for n in 1..=4 {
        let row: Vec<String> = (0..n)
            .map(|k| beta(n, k).map(|b| format_rational(&b)))
            .collect::<Result<_, _>>()?;
        println!("n={n}: {}", row.join("  "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skeletal::Result<()> {
    run()
}
