// Kruskal-Katona: cascades, the exact lower bound on shadows, Lovasz's
// relaxation, and colex segments that attain the bound.

use skeletal::shadows::{
    cascade_representation, colex_segment, exact_shadow, kk_shadow_bound, lovasz_shadow_bound,
};

pub fn run() -> skeletal::Result<()> {
    for (m, b) in [(5u64, 2u64), (10, 3), (100, 4)] {
        let c = cascade_representation(m, b)?;
        println!(
            "m={m:>3} b={b}: cascade {:?}, kk {} >= lovasz {:.3}",
            c.indices,
            kk_shadow_bound(m, b, 1)?,
            lovasz_shadow_bound(m, b, 1)?
        );
    }
    let seg = colex_segment(7, 3)?;
    let shadow = exact_shadow(&seg, 1)?;
    println!("first 7 triples in colex order: {:?}", seg.members());
    println!("their shadow has {} pairs", shadow.len());
    assert_eq!(shadow.len() as u128, kk_shadow_bound(7, 3, 1)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> skeletal::Result<()> {
    run()
}
