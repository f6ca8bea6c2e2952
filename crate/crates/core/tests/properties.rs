// Cross-module invariants checked on random and exhaustive inputs.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skeletal::cantor::{box_count, vertex_stages};
use skeletal::constructions::{
    nl_construction, orthoplex_construction, sign_basis, skeleton_construction,
};
use skeletal::lattice::{
    skeleton_points, verify_cover, verify_nl_condition, LatticePoint, PointSet, SkeletonSpec,
};
use skeletal::shadows::{exact_shadow, kk_shadow_bound, lovasz_shadow_bound, SetFamily};

fn signed_permute(perm: &[usize], signs: &[i64], x: &[i64]) -> Vec<i64> {
    perm.iter().zip(signs).map(|(&j, &s)| s * x[j]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skeletons_commute_with_signed_permutations(
        n in 2usize..=3,
        k_seed in 0usize..3,
        r in 1i64..=3,
        center in prop::collection::vec(-5i64..5, 3),
        perm_seed in 0usize..6,
        sign_bits in 0u8..8,
    ) {
        let k = k_seed % n;
        let x = &center[..n];
        let perm = (0..n).permutations(n).nth(perm_seed % (1..=n).product::<usize>()).unwrap();
        let signs: Vec<i64> = (0..n).map(|j| if sign_bits >> j & 1 == 1 { -1 } else { 1 }).collect();
        let skel = skeleton_points(&SkeletonSpec::new(LatticePoint::new(x.to_vec()).unwrap(), r, k).unwrap());
        let mapped = PointSet::from_points(n, skel.iter().map(|p| signed_permute(&perm, &signs, p))).unwrap();
        let moved_center = signed_permute(&perm, &signs, x);
        let direct = skeleton_points(&SkeletonSpec::new(LatticePoint::new(moved_center).unwrap(), r, k).unwrap());
        prop_assert_eq!(mapped, direct);
    }

    #[test]
    fn full_projection_condition_is_the_vertex_cover(
        b_mask in prop::collection::vec(prop::bool::weighted(0.6), 81),
        s_pts in prop::collection::vec((0i64..=8, 0i64..=8), 1..6),
    ) {
        let grid: Vec<Vec<i64>> = (0..=8).cartesian_product(0..=8).map(|(a, b)| vec![a, b]).collect();
        let b = PointSet::from_points(2, grid.iter().zip(&b_mask).filter(|(_, &m)| m).map(|(p, _)| p.clone())).unwrap();
        prop_assume!(!b.is_empty());
        let s = PointSet::from_points(2, s_pts.iter().map(|&(a, c)| vec![a, c])).unwrap();
        prop_assert_eq!(verify_nl_condition(&b, &s).unwrap(), verify_cover(&b, &s, 0).unwrap());
    }

    #[test]
    fn constructions_have_exact_size_and_verify(p in 1u64..=400, k in 0usize..2) {
        let c = skeleton_construction(2, k, p).unwrap();
        prop_assert_eq!(c.s.len() as u64, p);
        prop_assert!(c.verify().unwrap().satisfied);
        let c = nl_construction(2, k + 1, p).unwrap();
        prop_assert_eq!(c.s.len() as u64, p);
        prop_assert!(c.verify().unwrap().satisfied);
        let c = orthoplex_construction(2, p).unwrap();
        prop_assert_eq!(c.s.len() as u64, p);
        prop_assert!(c.verify().unwrap().satisfied);
    }

    #[test]
    fn box_count_is_monotone_under_refinement(
        pts in prop::collection::vec((-500i64..500, 1i64..50), 1..40),
        s in (1i64..40, 1i64..40),
        m in 1i64..6,
    ) {
        let q = |(a, b): (i64, i64)| BigRational::new(BigInt::from(a), BigInt::from(b));
        let pts: Vec<BigRational> = pts.into_iter().map(q).collect();
        let small = q(s);
        let large = &small * BigInt::from(m);
        prop_assert!(box_count(&pts, &small).unwrap() >= box_count(&pts, &large).unwrap());
    }
}

#[test]
fn orthoplex_images_are_integral() {
    for n in 2..=4 {
        let basis = sign_basis(n).unwrap();
        let m = basis.matrix();
        for x in (1..=3i64)
            .map(|v| vec![v; n])
            .chain([vec![1; n], (1..=n as i64).collect()])
        {
            let y: Vec<i64> = basis
                .inverse_scaled
                .iter()
                .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum())
                .collect();
            let back: Vec<i64> = m
                .iter()
                .map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum())
                .collect();
            assert_eq!(back, x.iter().map(|v| v * basis.scale).collect::<Vec<_>>());
        }
    }
    let c = orthoplex_construction(3, 150).unwrap();
    let m = sign_basis(3).unwrap().matrix();
    let top = 63;
    for s in c.s.iter() {
        let pulled: Vec<i64> = m
            .iter()
            .map(|row| row.iter().zip(s).map(|(a, b)| a * b).sum())
            .collect();
        for v in pulled {
            assert_eq!(v % c.scale, 0);
            assert!((1..=top).contains(&(v / c.scale)));
        }
    }
}

#[test]
fn random_triple_families_dominate_bounds() {
    let triples: Vec<Vec<u32>> = (1..=5u32).combinations(3).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let mask: u32 = rng.gen_range(1..1 << triples.len());
        let fam = SetFamily::new(
            5,
            3,
            triples
                .iter()
                .enumerate()
                .filter(|(t, _)| mask >> t & 1 == 1)
                .map(|(_, s)| s.clone()),
        )
        .unwrap();
        let m = fam.len() as u64;
        let exact = exact_shadow(&fam, 1).unwrap().len() as u128;
        let kk = kk_shadow_bound(m, 3, 1).unwrap();
        assert!(exact >= kk, "mask {mask:#b}");
        assert!(kk as f64 + 1e-9 >= lovasz_shadow_bound(m, 3, 1).unwrap());
    }
}

#[test]
fn stage_metadata_matches_stage_sets() {
    for (n, depth) in [(1, 4), (2, 2)] {
        let vs = vertex_stages(n, &BigRational::one(), depth).unwrap();
        for (t, a) in vs.t_stages.stages.iter().zip(&vs.a.stages) {
            assert_eq!(t.points.len() as u64, t.ell);
            assert_eq!(a.points.len() as u64, a.ell);
            assert_eq!(t.diameter(), &t.d - &t.delta);
            assert_eq!(t.min_gap().unwrap(), t.delta);
            assert_eq!(a.min_gap().unwrap(), a.delta);
        }
    }
}

#[test]
fn cantor_ratio_bracket_at_finite_depth() {
    let vs = vertex_stages(1, &BigRational::one(), 4).unwrap();
    assert!(vs.t_stages.flags().valid());
    let ratios = vs.t_stages.ratio_table();
    for j in [2usize, 3, 4] {
        let r = ratios[j - 1];
        assert!(
            (0.75..=1.25).contains(&r),
            "j={j}: ratio {r:.4} outside [0.75, 1.25]; table {ratios:?}"
        );
    }
}
