// Orthoplex vertices x +- r e_i around every point of S, obtained by pushing
// the vertex construction through an integer linear map.

use skeletal::constructions::{orthoplex_construction, sign_basis};

pub fn run() -> skeletal::Result<()> {
    let basis = sign_basis(3)?;
    println!("sign vectors {:?}", basis.vectors);
    println!(
        "scale {} and scaled inverse {:?}",
        basis.scale, basis.inverse_scaled
    );

    for (n, p) in [(2, 50), (2, 225), (3, 200)] {
        let c = orthoplex_construction(n, p)?;
        let report = c.verify()?;
        println!(
            "n={n} p={p:>3}: |S|={} |B|={} covered={} largest radius={}",
            c.s.len(),
            c.b.size(),
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
