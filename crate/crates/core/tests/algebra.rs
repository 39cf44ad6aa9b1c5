use lya::catalog::{affine2, derivation_violation, example4, example4_perturbed, sl2};
use lya::linalg::{unit_vec, zero_vec};
use lya::{check_homomorphism, qi, CheckOptions, LinearMap, LyAlgebra, LyaError, Matrix, Rational, Subspace};
use proptest::prelude::*;

fn e(n: usize, i: usize) -> Vec<Rational> {
    unit_vec(n, i)
}

#[test]
fn example4_brackets() {
    let a = example4();
    assert_eq!(a.bracket2(&e(4, 0), &e(4, 1)).unwrap(), vec![qi(0), qi(0), qi(0), qi(2)]);
    assert_eq!(a.bracket3(&e(4, 0), &e(4, 1), &e(4, 0)).unwrap(), e(4, 3));
    assert!(a.is_verified());
    assert!(a.check_ly_axioms(CheckOptions::default()).passed());
}

#[test]
fn bracket_dimension_mismatch() {
    let a = example4();
    assert!(matches!(
        a.bracket2(&e(3, 0), &e(4, 1)),
        Err(LyaError::DimMismatch { .. })
    ));
    assert!(a.bracket3(&e(4, 0), &e(4, 1), &e(5, 0)).is_err());
}

#[test]
fn sl2_brackets() {
    let s = sl2();
    assert_eq!(s.bracket2(&e(3, 0), &e(3, 1)).unwrap(), vec![qi(0), qi(2), qi(0)]);
    // ⟨e, f, h⟩ = [[e,f],h] = [h,h] = 0
    assert_eq!(s.bracket3(&e(3, 1), &e(3, 2), &e(3, 0)).unwrap(), zero_vec(3));
    assert!(s.is_verified());
}

#[test]
fn affine2_ternary() {
    let a = affine2();
    // ⟨e1,e2,e2⟩ = [[e1,e2],e2] = [e1,e2] = e1
    assert_eq!(a.bracket3(&e(2, 0), &e(2, 1), &e(2, 1)).unwrap(), e(2, 0));
    assert!(a.is_verified());
}

#[test]
fn non_lie_input_is_rejected() {
    // [e1,e2] = e3, [e2,e3] = e2, [e3,e1] = 0 breaks Jacobi
    let r = LyAlgebra::from_lie_algebra("bad", 3, &[(0, 1, 2, qi(1)), (1, 2, 1, qi(1))]);
    assert!(matches!(r, Err(LyaError::NotLieAlgebra { .. })));
}

#[test]
fn perturbed_example_still_satisfies_axioms() {
    // ⟨e1,e2,e1⟩ = e3 with [e3,e1] = e4: ternary brackets only see e1, e2 in
    // their first two slots and binary brackets land in span{e4}, which kills
    // every term of the derivation identity.
    let a = example4_perturbed();
    assert!(a.check_ly_axioms(CheckOptions::default()).passed());
    let (x, y) = (e(4, 0), e(4, 1));
    for (z, w) in [(0, 1), (0, 2), (2, 0), (1, 2)] {
        let (z, w) = (e(4, z), e(4, w));
        let lhs = a.bracket3(&x, &y, &a.bracket2(&z, &w).unwrap()).unwrap();
        let r1 = a.bracket2(&a.bracket3(&x, &y, &z).unwrap(), &w).unwrap();
        let r2 = a.bracket2(&z, &a.bracket3(&x, &y, &w).unwrap()).unwrap();
        assert_eq!(lhs, zero_vec(4));
        assert_eq!(r1.iter().zip(&r2).map(|(p, q)| p + q).collect::<Vec<_>>(), zero_vec(4));
    }
}

#[test]
fn derivation_violation_is_detected() {
    let a = derivation_violation();
    assert!(!a.is_verified());
    let r = a.check_ly_axioms(CheckOptions::all_violations());
    assert_eq!(r.equation_passed("ly.ternary_derivation"), Some(false));
    // ⟨e1,e2,[e1,e2]⟩ = ⟨e1,e2,e3⟩ = e1 while [⟨e1,e2,e1⟩,e2] + [e1,⟨e1,e2,e2⟩] = 0
    let v = r
        .violations
        .iter()
        .find(|v| v.equation == "ly.ternary_derivation" && v.witness == vec![0, 1, 0, 1])
        .expect("witness (e1,e2,e1,e2)");
    assert_eq!(v.residual, e(3, 0));
    let (verified, _) = a.verify();
    assert!(!verified.is_verified());
    assert!(verified.ensure_verified().is_err());
}

#[test]
fn antisymmetric_completion_and_conflicts() {
    let a = LyAlgebra::from_entries("x", 2, &[(0, 1, 0, qi(1))], &[]).unwrap();
    assert_eq!(a.binary().at(1, 0), &vec![qi(-1), qi(0)]);
    let bad = LyAlgebra::from_entries("x", 2, &[(0, 1, 0, qi(1)), (1, 0, 0, qi(1))], &[]);
    assert!(bad.is_err());
    let diag = LyAlgebra::from_entries("x", 2, &[(0, 0, 0, qi(1))], &[]);
    assert!(diag.is_err());
}

#[test]
fn centers() {
    assert_eq!(example4().center(), Subspace::coordinate(4, &[2, 3]));
    assert_eq!(LyAlgebra::abelian(3).center(), Subspace::full(3));
    assert!(sl2().center().is_zero());
}

#[test]
fn derived_algebras() {
    assert_eq!(example4().derived_algebra(), Subspace::coordinate(4, &[3]));
    assert!(LyAlgebra::abelian(3).derived_algebra().is_zero());
    assert_eq!(sl2().derived_algebra(), Subspace::full(3));
}

#[test]
fn center_and_derived_are_subalgebras() {
    for a in [example4(), sl2(), affine2(), LyAlgebra::abelian(2)] {
        assert!(a.is_subalgebra(&a.center()), "{}", a.name());
        assert!(a.is_subalgebra(&a.derived_algebra()), "{}", a.name());
    }
}

#[test]
fn homomorphism_examples() {
    let a = example4();
    let opts = CheckOptions::default();
    assert!(check_homomorphism(&a, &a, &LinearMap::identity(4), opts).unwrap().passed());
    assert!(check_homomorphism(&a, &sl2(), &LinearMap::zero(4, 3), opts).unwrap().passed());
    // φ = 2·Id: φ[e1,e2] = 4e4 but [φe1, φe2] = 8e4
    let two = LinearMap::new(Matrix::scalar(4, &qi(2)));
    let r = check_homomorphism(&a, &a, &two, opts).unwrap();
    assert_eq!(r.equation_passed("hom.binary"), Some(false));
    assert_eq!(r.equation_passed("hom.ternary"), Some(false));
    let v = r.violations.iter().find(|v| v.witness == vec![0, 1]).unwrap();
    assert_eq!(v.residual, vec![qi(0), qi(0), qi(0), qi(-4)]);
    assert!(check_homomorphism(&a, &a, &LinearMap::identity(3), opts).is_err());
}

#[test]
fn direct_sums() {
    let a = example4();
    assert_eq!(a.direct_sum(&LyAlgebra::abelian(0)), a);
    assert_eq!(LyAlgebra::abelian(1).direct_sum(&LyAlgebra::abelian(2)), LyAlgebra::abelian(3));
    let aa = a.direct_sum(&a);
    assert_eq!(aa.dim(), 8);
    assert!(aa.check_ly_axioms(CheckOptions::default()).passed());
}

#[test]
fn transport_by_automorphism_is_identity() {
    let a = example4();
    let psi = lya::catalog::example4_automorphism();
    assert!(check_homomorphism(&a, &a, &psi, CheckOptions::default()).unwrap().passed());
    assert_eq!(a.transport(&psi).unwrap(), a);
}

fn small() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| lya::q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Axioms on basis tuples imply them on arbitrary vectors.
    #[test]
    fn axioms_hold_on_random_vectors(
        xs in proptest::collection::vec(small(), 4 * 5),
    ) {
        for a in [example4(), sl2().direct_sum(&affine2())] {
            let n = a.dim();
            let v = |k: usize| xs.iter().cycle().skip(k * 4).take(n).cloned().collect::<Vec<_>>();
            let (x, y, z, w, t) = (v(0), v(1), v(2), v(3), v(4));
            let b2 = |p: &[Rational], q: &[Rational]| a.bracket2(p, q).unwrap();
            let b3 = |p: &[Rational], q: &[Rational], r: &[Rational]| a.bracket3(p, q, r).unwrap();
            let add = |p: Vec<Rational>, q: Vec<Rational>| p.iter().zip(&q).map(|(a, b)| a + b).collect::<Vec<_>>();
            let sub = |p: Vec<Rational>, q: Vec<Rational>| p.iter().zip(&q).map(|(a, b)| a - b).collect::<Vec<_>>();
            let zero = zero_vec(n);
            // ly.jacobi
            let mut s = zero.clone();
            for (p, q, r) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                s = add(s, b2(&b2(p, q), r));
                s = add(s, b3(p, q, r));
            }
            prop_assert_eq!(&s, &zero);
            // ly.ternary_cyclic
            let mut s = zero.clone();
            for (p, q, r) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                s = add(s, b3(&b2(p, q), r, &w));
            }
            prop_assert_eq!(&s, &zero);
            // ly.ternary_derivation
            let lhs = b3(&x, &y, &b2(&z, &w));
            let rhs = add(b2(&b3(&x, &y, &z), &w), b2(&z, &b3(&x, &y, &w)));
            prop_assert_eq!(sub(lhs, rhs), zero.clone());
            // ly.fundamental
            let lhs = b3(&x, &y, &b3(&z, &w, &t));
            let rhs = add(
                add(b3(&b3(&x, &y, &z), &w, &t), b3(&z, &b3(&x, &y, &w), &t)),
                b3(&z, &w, &b3(&x, &y, &t)),
            );
            prop_assert_eq!(sub(lhs, rhs), zero);
        }
    }

    #[test]
    fn abelian_center_and_derived(n in 0usize..5) {
        let a = LyAlgebra::abelian(n);
        prop_assert_eq!(a.center(), Subspace::full(n));
        prop_assert!(a.derived_algebra().is_zero());
        prop_assert!(a.check_ly_axioms(CheckOptions::default()).passed());
    }
}
