mod common;

use apolar::invariants::transvectant_coeffs;
use apolar::json::{parse_quantic, quantic_to_json};
use apolar::{
    classify_quartic, cross_ratio, from_roots, is_maximally_separated, quadratic_invariant,
    roots_of, x_points, x_points_general, BinaryQuantic, Extended, PointCP1, SymmetricSpinor, C64,
};
use common::{c, quantic_from_affine_roots, scale_to_unit, set_distance, Gen};
use proptest::prelude::*;

fn close(a: &[C64], b: &[C64], tol: f64) -> bool {
    let size = a.iter().chain(b).map(|v| v.norm()).fold(1e-300, f64::max);
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol * size)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 32,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn transvectant_is_covariant(seed in any::<u64>(), m in 1usize..7, n in 1usize..7, k in 0usize..7) {
        let k = k % (m.min(n) + 1);
        let mut g = Gen::new(seed);
        let (phi, psi, map) = (g.quantic(m), g.quantic(n), g.moebius());
        let lhs = transvectant_coeffs(phi.transform(&map).coeffs(), psi.transform(&map).coeffs(), k).unwrap();
        let t = transvectant_coeffs(phi.coeffs(), psi.coeffs(), k).unwrap();
        let rhs = match BinaryQuantic::new(t.clone()) {
            Ok(form) => form.transform(&map).into_coeffs(),
            Err(_) => t,
        };
        prop_assert!(close(&lhs, &rhs, 1e-10));
    }

    #[test]
    fn transvectant_symmetry(seed in any::<u64>(), m in 1usize..7, n in 1usize..7, k in 0usize..7) {
        let k = k % (m.min(n) + 1);
        let mut g = Gen::new(seed);
        let (phi, psi) = (g.vector(m + 1, 1.0), g.vector(n + 1, 1.0));
        let ab = transvectant_coeffs(&phi, &psi, k).unwrap();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let ba: Vec<C64> = transvectant_coeffs(&psi, &phi, k).unwrap().iter().map(|v| v * sign).collect();
        prop_assert!(close(&ab, &ba, 1e-12));
    }

    #[test]
    fn transvectant_is_bilinear(seed in any::<u64>(), m in 1usize..7, n in 1usize..7, k in 0usize..7) {
        let k = k % (m.min(n) + 1);
        let mut g = Gen::new(seed);
        let (a, b, psi) = (g.vector(m + 1, 1.0), g.vector(m + 1, 1.0), g.vector(n + 1, 1.0));
        let (s, t) = (g.complex(2.0), g.complex(2.0));
        let combo: Vec<C64> = a.iter().zip(&b).map(|(x, y)| s * x + t * y).collect();
        let lhs = transvectant_coeffs(&combo, &psi, k).unwrap();
        let ta = transvectant_coeffs(&a, &psi, k).unwrap();
        let tb = transvectant_coeffs(&b, &psi, k).unwrap();
        let rhs: Vec<C64> = ta.iter().zip(&tb).map(|(x, y)| s * x + t * y).collect();
        let size = ta.iter().chain(&tb).map(|v| v.norm()).fold(0.0, f64::max) * (s.norm() + t.norm());
        prop_assert!(lhs.iter().zip(&rhs).all(|(x, y)| (x - y).norm() <= 1e-12 * size));
    }

    #[test]
    fn invariant_has_weight_zero_under_unimodular_maps(seed in any::<u64>(), n in 1usize..6) {
        let mut g = Gen::new(seed);
        let (q, map) = (g.quantic(2 * n), g.moebius());
        let image = q.transform(&map);
        let err = (quadratic_invariant(&image) - quadratic_invariant(&q)).norm();
        prop_assert!(err <= 1e-10 * q.bombieri_norm() * image.bombieri_norm());
    }

    #[test]
    fn sextic_invariant_has_weight_six(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (q, s) = (g.quantic(6), g.complex(1.0) + c(1.5, 0.0));
        let unit = g.moebius();
        let scaled = apolar::MoebiusMap::new(unit.a * s, unit.b * s, unit.c * s, unit.d * s).unwrap();
        // Each coefficient picks up s⁶, so 𝓘 picks up s¹² = det⁶.
        let want = quadratic_invariant(&q) * scaled.det().powi(6);
        let got = quadratic_invariant(&q.transform(&scaled));
        prop_assert!((got - want).norm() <= 1e-9 * want.norm().max(1e-300));
    }

    #[test]
    fn cross_ratio_is_moebius_invariant(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let pts: Vec<PointCP1> = g.separated_points(4, 0.2).into_iter().map(PointCP1::affine).collect();
        let map = g.moebius();
        let moved: Vec<PointCP1> = pts.iter().map(|p| map.apply(p)).collect();
        let Extended::Finite(a) = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap() else {
            return Err(TestCaseError::fail("infinite cross ratio"));
        };
        let Extended::Finite(b) = cross_ratio(&moved[0], &moved[1], &moved[2], &moved[3]).unwrap() else {
            return Err(TestCaseError::fail("infinite cross ratio"));
        };
        prop_assert!((a - b).norm() <= 1e-8 * a.norm().max(1.0));
    }

    #[test]
    fn tetrahedral_orderings_are_equianharmonic(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let map = g.moebius();
        // Cube roots of unity and ∞, the roots of x³y − y⁴.
        let base = [c(1.0, 0.0), c(-0.5, 3f64.sqrt() / 2.0), c(-0.5, -(3f64.sqrt()) / 2.0)];
        let mut pts: Vec<PointCP1> = base.iter().map(|z| map.apply(&PointCP1::affine(*z))).collect();
        pts.push(map.apply(&PointCP1::infinity()));
        for p in permutations(4) {
            let Extended::Finite(l) = cross_ratio(&pts[p[0]], &pts[p[1]], &pts[p[2]], &pts[p[3]]).unwrap() else {
                return Err(TestCaseError::fail("infinite cross ratio"));
            };
            prop_assert!((l * l - l + 1.0).norm() <= 1e-8, "ordering {:?} gives {}", p, l);
        }
    }

    #[test]
    fn classification_is_moebius_invariant(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let q = scale_to_unit(&quantic_from_affine_roots(&g.separated_points(4, 0.3)));
        let before = classify_quartic(&q, 1e-9).unwrap();
        let after = classify_quartic(&scale_to_unit(&q.transform(&g.moebius())), 1e-9).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn roots_round_trip(seed in any::<u64>(), degree in 1usize..9) {
        let mut g = Gen::new(seed);
        let q = g.quantic(degree);
        let rebuilt = from_roots(&roots_of(&q, 1e-9)).unwrap();
        prop_assert!(rebuilt.is_proportional_to(&q, 1e-7));
    }

    #[test]
    fn maximal_separation_is_moebius_invariant(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let pts: Vec<PointCP1> = g.separated_points(5, 0.3).into_iter().map(PointCP1::affine).collect();
        let map = g.moebius();
        let moved: Vec<PointCP1> = pts.iter().map(|p| map.apply(p)).collect();
        let a = is_maximally_separated(&pts, 1e-9).unwrap().separated;
        let b = is_maximally_separated(&moved, 1e-9).unwrap().separated;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn spinor_product_factorises(seed in any::<u64>(), n in 1usize..7) {
        let mut g = Gen::new(seed);
        let pairs: Vec<(C64, C64)> = (0..n).map(|_| (g.complex(1.0), g.complex(1.0))).collect();
        let factors: Vec<SymmetricSpinor> = pairs.iter().map(|&(a, b)| SymmetricSpinor::valence_one(a, b)).collect();
        let product = SymmetricSpinor::symmetrized_product(&factors).unwrap();
        let quantic = pairs
            .iter()
            .map(|&(a, b)| BinaryQuantic::new(vec![a, b]).unwrap())
            .reduce(|acc, f| acc.mul(&f))
            .unwrap();
        prop_assert!(close(product.components(), quantic.coeffs(), 1e-12));
    }

    #[test]
    fn g2_scalar_is_quadratic(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let u = g.vector(7, 1.0);
        let s = g.complex(2.0);
        let su: Vec<C64> = u.iter().map(|v| v * s).collect();
        let a = apolar::g2::compatibility_scalar(&u).unwrap() * s * s;
        let b = apolar::g2::compatibility_scalar(&su).unwrap();
        prop_assert!((a - b).norm() <= 1e-10 * a.norm().max(1e-300));
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), degree in 0usize..8) {
        let mut g = Gen::new(seed);
        let q = g.quantic(degree);
        let text = quantic_to_json(&q).to_string();
        let back: BinaryQuantic = parse_quantic(&text).unwrap();
        prop_assert_eq!(back, q);
    }
}

#[test]
fn general_x_points_match_the_sextic_split() {
    let mut g = Gen::new(31);
    for _ in 0..20 {
        let psi = g.sextic_distinct();
        for which in 0..6 {
            let split = x_points(&psi, which, 1e-9).unwrap();
            let general = x_points_general(&split.others, &split.split_root, 1e-9).unwrap();
            let (a, b) = (split.xpoints.expanded(), general.expanded());
            let d = set_distance(&a, &b).max(set_distance(&b, &a));
            assert!(d <= 1e-7, "split {which}: X-points differ by {d:e}");
        }
    }
}
