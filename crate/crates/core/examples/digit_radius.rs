// The digit sets D(i, n), explicit radii for tuples of inputs, and interval
// covers of the multiscale sets A_N.

use skeletal::digits::{
    build_digit_set, build_multiscale_set, find_radius, find_radius_multiscale,
    interval_cover_count,
};

pub fn run() -> skeletal::Result<()> {
    for (i, n) in [(2, 1), (3, 1), (2, 2), (4, 2)] {
        let d = build_digit_set(i, n)?;
        println!(
            "|D({i},{n})| = {:>4}, hull [{}, {}]",
            d.len(),
            d.min(),
            d.max()
        );
    }

    let d = build_digit_set(3, 2)?;
    let xs = [17, 40];
    let r = find_radius(&xs, 3)?;
    println!("inputs {xs:?}: radius {r}");
    for x in xs {
        assert!(d.contains(x - r) && d.contains(x + r));
    }

    let a2 = build_multiscale_set(2, 2)?;
    let xs = [5, 11];
    let r = find_radius_multiscale(&xs, &a2)?;
    println!("A_N with N={}: radius for {xs:?} is {r}", a2.big_n());
    for x in xs {
        assert!(a2.contains(x - r) && a2.contains(x + r));
    }

    let a = build_multiscale_set(3, 1)?;
    println!("A_N with N={} has {} points", a.big_n(), a.len());
    for len in [1, 4, 16, 64] {
        println!(
            "  intervals of length {len:>2}: {}",
            interval_cover_count(a.members(), len)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> skeletal::Result<()> {
    run()
}
