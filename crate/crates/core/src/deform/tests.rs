use super::*;
use crate::artin::{generator_set, GeneratorSet};
use crate::combinatorics::GroupParams;
use crate::groebner::{IdealBasis, Limits};
use crate::poly::{parse_polynomial, rational, Coeff, PolyRing, Polynomial, VarTable};
use proptest::prelude::*;

fn gs(r: u64, a: u64) -> GeneratorSet {
    generator_set(GroupParams::new(r, a).unwrap())
}

fn params(s: &GeneratorSet, steps: &[&[i64]]) -> DeformationParams {
    DeformationParams::new(s.group, steps.iter().map(|v| v.iter().map(|&x| rational(x)).collect()).collect()).unwrap()
}

fn symbolic(s: &GeneratorSet) -> Vec<Polynomial> {
    deformed_relations(s).polynomials(Lambda::Symbolic).unwrap()
}

fn parsed(p: &Polynomial, text: &str) -> Polynomial {
    parse_polynomial(p.ring(), text).unwrap()
}

#[test]
fn relations_for_7_3() {
    let s = gs(7, 3);
    let rel = deformed_relations(&s);
    assert_eq!(rel.len(), 6);
    assert_eq!(rel.step(1).count(), 2);
    assert!(rel.step(1).all(|r| r.d == 0));
    assert_eq!(rel.step(2).count(), 4);
    let polys = symbolic(&s);
    let expect = [
        "k1*c0_3*c3_2*c2_1 - c1_0*a0_1 - lam1_1",
        "c1_0*a0_1 - k1*c0_3*c3_2*c2_1 - lam1_0",
        "a3_0*c0_3 - c3_2*a2_3 - lam2_3",
        "a2_3*c3_2 - c2_1*a1_2 - lam2_2",
        "a1_2*c2_1 - k1*a0_1 - lam2_1",
        "a0_1*k1 - c0_3*a3_0 - lam2_0",
    ];
    for (p, e) in polys.iter().zip(expect) {
        assert_eq!(p, &parsed(p, e), "{e}");
    }
    let closing = impose_delta(&s, &polys[5]);
    assert_eq!(closing, parsed(&closing, "a0_1*k1 - c0_3*a3_0 + lam2_1 + lam2_2 + lam2_3"));
}

#[test]
fn relations_for_165_104() {
    let s = gs(165, 104);
    let rel = deformed_relations(&s);
    let polys = symbolic(&s);
    assert_eq!(rel.len(), 3 + 4 + 2 + 3 + 4);
    assert_eq!(polys[0], parsed(&polys[0], "k1*c0_7*c7_6*c6_5*c5_4*c4_3*c3_2 - c2_1*a1_2 - lam1_2"));
    assert_eq!(polys[1], parsed(&polys[1], "a1_2*c2_1 - c1_0*a0_1 - lam1_1"));
    let step3: Vec<&Polynomial> = rel.relations.iter().zip(&polys).filter(|(r, _)| r.step == 3).map(|(_, p)| p).collect();
    assert_eq!(step3.len(), 2);
    assert_eq!(step3[0], &parsed(step3[0], "k3*c0_7*c7_6*c6_5*c5_4 - k2*a0_1*a1_2*a2_3*a3_4 - lam3_1"));
}

#[test]
fn step_sums_are_minus_lambda_sums() {
    for (r, a) in [(7, 3), (3, 1), (11, 4)] {
        let s = gs(r, a);
        let sums = deformed_relations(&s).step_sums(Lambda::Symbolic).unwrap();
        for (i, p) in sums.iter().enumerate() {
            let ring = p.ring();
            let expected = (0..s.beta[i] as usize).fold(Polynomial::zero(ring), |acc, j| {
                acc.sub(&Polynomial::var_named(ring, &lambda_name(i + 1, j)).unwrap())
            });
            assert_eq!(p, &expected);
        }
    }
}

#[test]
fn empty_representation_space() {
    let s = gs(7, 3);
    let rel = deformed_relations(&s);
    let bad = params(&s, &[&[0, 1], &[0, 0, 0, 0]]);
    assert!(rep_variety_empty_check(&rel, &bad).unwrap());
    assert!(!rep_variety_empty_check(&rel, &DeformationParams::zero(s.group)).unwrap());
    let good = params(&s, &[&[2, -2], &[1, 2, 3, -6]]);
    assert!(!rep_variety_empty_check(&rel, &good).unwrap());
    assert!(matches!(
        DeformationParams::new(s.group, vec![vec![]]),
        Err(DeformError::Shape { .. })
    ));
}

#[test]
fn charts_for_7_3() {
    let s = gs(7, 3);
    let c0 = chart_eliminate(&s, 0, Lambda::Symbolic).unwrap();
    assert_eq!(c0.coordinates, ["c1_0", "a0_1"]);
    assert!(c0.is_affine_plane());
    let c2 = chart_eliminate(&s, 2, Lambda::Symbolic).unwrap();
    assert_eq!(c2.coordinates, ["c3_2", "a2_3"]);
    assert!(c2.is_affine_plane());
    for t in chart_indices(&s) {
        assert!(chart_eliminate(&s, t, Lambda::Symbolic).unwrap().is_affine_plane(), "W{t}");
    }
    assert!(matches!(chart_eliminate(&s, 9, Lambda::Symbolic), Err(DeformError::ChartIndex(9))));
}

#[test]
fn charts_for_degenerate_groups() {
    for r in 2..8 {
        let s = gs(r, 1);
        for t in chart_indices(&s) {
            let c = chart_eliminate(&s, t, Lambda::Symbolic).unwrap();
            assert!(c.is_affine_plane(), "({r},1) W{t}: {c:?}");
        }
    }
}

#[test]
fn counterexample_chart_for_3_1() {
    let s = gs(3, 1);
    let zero = DeformationParams::zero(s.group);
    let chart = chart_eliminate_custom(&s, &["a1"], &zero).unwrap();
    assert_eq!(chart.residual.len(), 1);
    let res = &chart.residual[0];
    assert_eq!(res.monic(), parsed(res, "c1*k1 - c1*a2^2").monic());
    let ideal = chart.residual_ideal().unwrap();
    let origin = vec![Coeff::from_integer(0.into()); ideal.ring().nvars()];
    assert!(jacobian_singular_at(&ideal, &origin, Limits::default()).unwrap());

    let other = chart_eliminate_custom(&s, &["a2"], &zero).unwrap();
    assert!(!other.residual.is_empty());

    let bad = params(&s, &[&[1, 0], &[0, 0]]);
    assert!(matches!(chart_eliminate_custom(&s, &["a1"], &bad), Err(DeformError::NotInDelta)));
}

#[test]
fn custom_with_standard_units_agrees() {
    let s = gs(7, 3);
    let lam = params(&s, &[&[3, -3], &[1, 2, 3, -6]]);
    for t in chart_indices(&s) {
        let (units, _) = chart_layout(&s, t).unwrap();
        let refs: Vec<&str> = units.iter().map(String::as_str).collect();
        let custom = chart_eliminate_custom(&s, &refs, &lam).unwrap();
        assert!(custom.is_affine_plane(), "W{t}");
        assert!(chart_eliminate(&s, t, Lambda::Concrete(&lam)).unwrap().is_affine_plane());
    }
}

fn ideal(names: &[&str], gens: &[&str]) -> IdealBasis {
    let ring = PolyRing::new(
        VarTable::unweighted(names.iter().map(|s| s.to_string())).unwrap(),
        crate::poly::MonomialOrder::DegRevLex,
    );
    let g = gens.iter().map(|t| parse_polynomial(&ring, t).unwrap()).collect();
    IdealBasis::new(&ring, g).unwrap()
}

#[test]
fn jacobian_examples() {
    let zero3 = vec![rational(0); 3];
    assert!(!jacobian_singular_at(&ideal(&["x", "y", "z"], &["x"]), &zero3, Limits::default()).unwrap());
    assert!(jacobian_singular_at(&ideal(&["x", "y"], &["x*y"]), &zero3[..2], Limits::default()).unwrap());
    assert!(matches!(
        jacobian_singular_at(&ideal(&["x", "y"], &["x - 1"]), &zero3[..2], Limits::default()),
        Err(DeformError::NotOnVariety)
    ));
}

#[test]
fn fiber_of_2_1() {
    let s = gs(2, 1);
    let lam = params(&s, &[&[5, -5]]);
    let red = reduced_fiber(&s, &lam).unwrap();
    assert_eq!(red.len(), 1);
    let f = &red.generators()[0];
    assert_eq!(f, &parsed(f, "z0_0*z2_0 - z1_1^2 - 5*z1_1"));
    assert_eq!(fiber_dimension(&s, &lam, Limits::default()).unwrap(), Some(2));
}

#[test]
fn fiber_for_7_3_at_zero() {
    let s = gs(7, 3);
    let zero = DeformationParams::zero(s.group);
    let rels: Vec<String> = fiber_relations(&s, &zero).unwrap().iter().map(|p| p.to_string()).collect();
    assert_eq!(rels, ["z1_0 - z1_1", "z2_0 - z2_1", "z2_1 - z2_2", "z2_2 - z2_3"]);
    assert_eq!(fiber_dimension(&s, &zero, Limits::default()).unwrap(), Some(2));
    let bad = params(&s, &[&[1, 0], &[0, 0, 0, 0]]);
    assert!(matches!(pi_fiber_ideal(&s, &bad), Err(DeformError::NotInDelta)));
}

#[test]
fn reduced_and_direct_fiber_dimensions_agree() {
    for (r, a) in [(3, 1), (5, 2), (7, 3), (7, 2)] {
        let s = gs(r, a);
        for lam in DeformationParams::seeded_samples(s.group, 7, 2) {
            let red = fiber_dimension(&s, &lam, Limits::default()).unwrap();
            let direct = fiber_dimension_direct(&s, &lam, Limits::default()).unwrap();
            assert_eq!(red, direct, "({r},{a})");
            assert_eq!(red, Some(2));
        }
    }
}

#[test]
fn pi_on_constant_point_is_zero() {
    let s = gs(7, 3);
    let p = vec![rational(4); s.len()];
    assert!(pi_map_eval(&s, &p).unwrap().is_zero());
    assert!(pi_map_eval(&s, &p[1..]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pi_lands_in_delta(r in 2u64..16, a in 1u64..15, seed in any::<u64>()) {
        prop_assume!(a < r && num_integer::gcd(r, a) == 1);
        let s = gs(r, a);
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let point: Vec<Coeff> = (0..s.len()).map(|_| rational(rng.gen_range(-50..50))).collect();
        prop_assert!(pi_map_eval(&s, &point).unwrap().in_delta());
    }

    #[test]
    fn fiber_points_map_back_to_lambda(r in 2u64..12, a in 1u64..11, seed in any::<u64>()) {
        prop_assume!(a < r && num_integer::gcd(r, a) == 1);
        let s = gs(r, a);
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let lam = DeformationParams::random_in_delta(s.group, &mut rng);
        let mut point = vec![rational(0); s.len()];
        for (k, v) in s.vars.iter().enumerate() {
            point[k] = rational((v.i * 7 + 3) as i64);
        }
        for i in 1..=s.m() {
            let beta = s.beta[i - 1] as usize;
            for j in (0..beta - 1).rev() {
                point[s.idx(i, j)] = &point[s.idx(i, j + 1)] + lam.get(i, beta - 1 - j);
            }
        }
        for rel in fiber_relations(&s, &lam).unwrap() {
            prop_assert!(rel.evaluate(&point) == rational(0));
        }
        prop_assert_eq!(pi_map_eval(&s, &point).unwrap(), lam);
    }

    #[test]
    fn emptiness_matches_delta(r in 2u64..21, a in 1u64..20, seed in any::<u64>(), inside in any::<bool>()) {
        prop_assume!(a < r && num_integer::gcd(r, a) == 1);
        let s = gs(r, a);
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let lam = if inside {
            DeformationParams::random_in_delta(s.group, &mut rng)
        } else {
            DeformationParams::random_unconstrained(s.group, &mut rng)
        };
        let rel = deformed_relations(&s);
        prop_assert_eq!(rep_variety_empty_check(&rel, &lam).unwrap(), !lam.in_delta());
    }
}
