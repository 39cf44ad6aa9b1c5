use lya::catalog::{example4_action, example4_hom_pair, projection_e1e2, projection_e1e3, sl2_on_abelian};
use lya::cohomology::{pair_count, pairs};
use lya::deformation::{binary_residual_series, certificate_holds, ternary_residual_series};
use lya::linalg::{sub_vec, unit_vec, zero_vec};
use lya::rrb::{random_matrix, search_operators};
use lya::{
    check_equivalence, check_linear_deformation, difference_class, qi, CheckOptions, Cochain,
    DifferenceClass, Extension, LinearMap, LyaError, Matrix, OrderNDeformation, Rational,
    RrbOperator, TComplex, Vector,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn opts() -> CheckOptions {
    CheckOptions::default()
}

fn zero_op_sl2() -> RrbOperator {
    RrbOperator::new(sl2_on_abelian(), LinearMap::zero(3, 3))
        .unwrap()
        .verify(CheckOptions::first_only())
        .0
}

fn ops() -> Vec<RrbOperator> {
    let mut v = vec![projection_e1e3(), example4_hom_pair().1, zero_op_sl2()];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    v.extend(search_operators(&mut rng, &sl2_on_abelian(), 60).into_iter().skip(1).take(1));
    v.extend(search_operators(&mut rng, &example4_action(), 60).into_iter().take(2));
    v
}

fn cocycles(op: &RrbOperator) -> Vec<LinearMap> {
    TComplex::new(op.clone())
        .unwrap()
        .cocycle_basis(1)
        .unwrap()
        .iter()
        .map(|c| c.to_map().unwrap())
        .collect()
}

/// `Σ c_k t^k` evaluated at `t`.
fn operator_at(terms: &[LinearMap], t: &Rational) -> LinearMap {
    let mut acc = LinearMap::zero(terms[0].source_dim(), terms[0].target_dim());
    let mut pow = qi(1);
    for c in terms {
        acc = acc.add(&c.scale(&pow));
        pow = &pow * t;
    }
    acc
}

/// Coefficients of the polynomial through `(t_i, values_i)`, `t_i = 0, 1, …`.
fn interpolate(values: &[Vector]) -> Vec<Vector> {
    let k = values.len();
    let vander = Matrix::from_rows(
        &(0..k)
            .map(|i| (0..k).map(|j| qi((i as i64).pow(j as u32))).collect())
            .collect::<Vec<_>>(),
        k,
    )
    .unwrap();
    let dim = values[0].len();
    let mut coeffs = vec![zero_vec(dim); k];
    for r in 0..dim {
        let col: Vector = values.iter().map(|v| v[r].clone()).collect();
        let c = vander.solve(&col).unwrap();
        for j in 0..k {
            coeffs[j][r] = c[j].clone();
        }
    }
    coeffs
}

/// The identities evaluated at the plain operator `T_t` for `t = 0..=3n`,
/// interpolated back into coefficients.
fn interpolated_residuals(d: &OrderNDeformation, u: usize, v: usize, w: usize) -> (Vec<Vector>, Vec<Vector>) {
    let terms = d.all_terms();
    let a = d.base().action();
    let (g, h) = (a.acting(), a.carrier());
    let n = h.dim();
    let (eu, ev, ew) = (unit_vec(n, u), unit_vec(n, v), unit_vec(n, w));
    let points = 3 * d.order() + 1;
    let (mut bin, mut ter) = (Vec::new(), Vec::new());
    for i in 0..points {
        let tt = operator_at(&terms, &qi(i as i64));
        let (tu, tv, tw) = (tt.apply(&eu), tt.apply(&ev), tt.apply(&ew));
        let inner = sub_vec(&a.rho_apply(&tu, &ev), &a.rho_apply(&tv, &eu));
        let inner: Vector = inner.iter().zip(h.bracket2(&eu, &ev).unwrap()).map(|(x, y)| x + &y).collect();
        bin.push(sub_vec(&g.bracket2(&tu, &tv).unwrap(), &tt.apply(&inner)));
        let mut inner = a.d_apply(&tu, &tv, &ew);
        for (x, y) in inner.iter_mut().zip(a.mu_apply(&tv, &tw, &eu)) {
            *x = &*x + &y;
        }
        inner = sub_vec(&inner, &a.mu_apply(&tu, &tw, &ev));
        for (x, y) in inner.iter_mut().zip(h.bracket3(&eu, &ev, &ew).unwrap()) {
            *x = &*x + &y;
        }
        ter.push(sub_vec(&g.bracket3(&tu, &tv, &tw).unwrap(), &tt.apply(&inner)));
    }
    (interpolate(&bin), interpolate(&ter))
}

/// Extends while possible, up to order `max`.
fn tower(op: &RrbOperator, first: LinearMap, max: usize) -> Vec<OrderNDeformation> {
    let mut out = vec![OrderNDeformation::new(op.clone(), vec![first]).unwrap()];
    while out.len() < max {
        match out.last().unwrap().extend().unwrap() {
            Extension::Extended { next } => {
                let d = out.last().unwrap().extended(next).unwrap();
                out.push(d);
            }
            Extension::NotExtendable { .. } => break,
        }
    }
    out
}

#[test]
fn cocycles_give_first_order_solutions() {
    let op = projection_e1e3();
    let z = cocycles(&op);
    assert!(!z.is_empty());
    let mut full = 0;
    for f in &z {
        let r = check_linear_deformation(&op, f, opts()).unwrap();
        assert_eq!(r.equation_passed("linear.binary[t^1]"), Some(true));
        assert_eq!(r.equation_passed("linear.ternary[t^1]"), Some(true));
        assert!(r.equation_passed("linear.ternary[t^3]").is_some());
        assert_eq!(r.data["is_cocycle"], true);
        assert_eq!(r.data["t1_equals_coboundary"], true);
        full += r.passed() as usize;
    }
    assert!(full > 0);
}

#[test]
fn non_cocycle_fails_first_order() {
    let op = projection_e1e3();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = LinearMap::new(random_matrix(&mut rng, 4, 4));
    let r = check_linear_deformation(&op, &f, opts()).unwrap();
    assert!(!r.passed());
    assert_eq!(r.data["t1_vanishes"], false);
    assert_eq!(r.data["is_cocycle"], false);
    assert_eq!(r.data["t1_equals_coboundary"], true);
}

#[test]
fn linear_deformation_requires_verified_base() {
    let f = LinearMap::zero(4, 4);
    assert!(matches!(
        check_linear_deformation(&projection_e1e2(), &f, opts()),
        Err(LyaError::Unverified(_))
    ));
    assert!(OrderNDeformation::new(projection_e1e2(), vec![f]).is_err());
}

#[test]
fn zero_terms_have_zero_obstruction() {
    for op in ops() {
        let n = op.h().dim();
        let m = op.g().dim();
        let d = OrderNDeformation::new(op, vec![LinearMap::zero(n, m), LinearMap::zero(n, m)]).unwrap();
        assert!(d.check_order_n(opts()).passed());
        let ob = d.obstruction_class().unwrap();
        assert!(ob.as_cochain.is_zero() && ob.ob_i.is_zero() && ob.ob_ii.is_zero());
        match d.extend().unwrap() {
            Extension::Extended { next } => {
                assert!(d.extended(next).unwrap().check_order_n(opts()).passed());
            }
            Extension::NotExtendable { .. } => panic!("zero obstruction must extend"),
        }
    }
}

#[test]
fn order_zero_is_the_operator_check() {
    let d = OrderNDeformation::new(projection_e1e3(), vec![]).unwrap();
    assert!(d.check_order_n(opts()).passed());
}

#[test]
fn obstruction_matches_expansion_and_interpolation() {
    let mut nonzero = 0;
    for op in ops() {
        let n = op.h().dim();
        for f in cocycles(&op).into_iter().take(3) {
            for d in tower(&op, f, 3) {
                let ob = d.obstruction_class().unwrap();
                assert!(ob.is_cocycle);
                nonzero += !ob.as_cochain.is_zero() as usize;
                let top = d.order() + 1;
                let terms = d.all_terms();
                for u in 0..n {
                    for v in 0..n {
                        let series = binary_residual_series(op.action(), &terms, top, &unit_vec(n, u), &unit_vec(n, v));
                        assert_eq!(&series[top], ob.ob_i.at(u, v));
                        for w in 0..n {
                            let series = ternary_residual_series(
                                op.action(),
                                &terms,
                                top,
                                &unit_vec(n, u),
                                &unit_vec(n, v),
                                &unit_vec(n, w),
                            );
                            assert_eq!(&series[top], ob.ob_ii.at(u, v, w));
                        }
                    }
                }
                // a few tuples against the interpolated polynomial
                for (u, v, w) in [(0, 1, 0), (0, 2, 1), (1, 2, 2)] {
                    let (bin, ter) = interpolated_residuals(&d, u, v, w);
                    assert_eq!(&bin[top], ob.ob_i.at(u, v));
                    assert_eq!(&ter[top], ob.ob_ii.at(u, v, w));
                    for k in 1..top {
                        assert!(bin[k].iter().chain(&ter[k]).all(|c| c.is_zero()));
                    }
                }
            }
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn extension_gives_next_order() {
    for op in ops() {
        for f in cocycles(&op) {
            let d = OrderNDeformation::new(op.clone(), vec![f]).unwrap();
            if let Extension::Extended { next } = d.extend().unwrap() {
                let r = d.extended(next).unwrap().check_order_n(opts());
                assert!(r.passed(), "{}", r.to_pretty());
            }
        }
    }
}

#[test]
fn obstructed_first_order_deformation() {
    // With T = 0 every t² residual is already the obstruction, and there are
    // no 2-coboundaries, so any cocycle whose t² coefficient is nonzero is stuck.
    let op = zero_op_sl2();
    let cx = TComplex::new(op.clone()).unwrap();
    assert_eq!(cx.cohomology_dims(2).unwrap().coboundaries, 0);
    let stuck: Vec<LinearMap> = cocycles(&op)
        .into_iter()
        .filter(|f| !check_linear_deformation(&op, f, opts()).unwrap().passed())
        .collect();
    assert!(!stuck.is_empty());
    let d1 = cx.coboundary_matrix(1).unwrap().clone();
    for f in stuck {
        let d = OrderNDeformation::new(op.clone(), vec![f]).unwrap();
        let ob = d.obstruction_class().unwrap();
        assert!(ob.is_cocycle && !ob.as_cochain.is_zero());
        match d.extend().unwrap() {
            Extension::NotExtendable { certificate, rhs } => {
                assert!(certificate_holds(&d1, &rhs, &certificate));
                let neg: Vector = ob.as_cochain.coords().iter().map(|c| -c).collect();
                assert_eq!(rhs, neg);
            }
            Extension::Extended { .. } => panic!("nonzero class in a complex without coboundaries"),
        }
    }
}

#[test]
fn obstruction_refuses_invalid_input() {
    let op = projection_e1e3();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = LinearMap::new(random_matrix(&mut rng, 4, 4));
    let d = OrderNDeformation::new(op, vec![f]).unwrap();
    assert!(!d.check_order_n(opts()).passed());
    assert!(matches!(d.obstruction_class(), Err(LyaError::InvalidDeformation(_))));
    assert!(matches!(d.extend(), Err(LyaError::InvalidDeformation(_))));
}

#[test]
fn difference_classes() {
    let op = projection_e1e3();
    let cx = TComplex::new(op.clone()).unwrap();
    let f1 = cocycles(&op)[0].clone();
    let m = op.g().dim();
    let x: Vector = (0..pair_count(m)).map(|i| qi(i as i64 - 2)).collect();
    let bd = cx.zero_cochain_map(&x).unwrap().to_map().unwrap();
    let f2 = f1.add(&bd);
    match difference_class(&op, &f1, &f2).unwrap() {
        DifferenceClass::Cohomologous { x: found } => {
            let again = cx.zero_cochain_map(&found).unwrap().to_map().unwrap();
            assert_eq!(again, bd);
        }
        other => panic!("{other:?}"),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let f3 = LinearMap::new(random_matrix(&mut rng, 4, 4));
    match difference_class(&op, &f1, &f3).unwrap() {
        DifferenceClass::NotCohomologous { certificate } => {
            let rhs = Cochain::from_map(&f3.sub(&f1)).coords();
            assert!(certificate_holds(cx.coboundary_matrix(0).unwrap(), &rhs, &certificate));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn equivalence_of_identical_deformations() {
    let op = projection_e1e3();
    let f = cocycles(&op)
        .into_iter()
        .find(|f| check_linear_deformation(&op, f, opts()).unwrap().passed())
        .unwrap();
    let x = zero_vec(pair_count(4));
    let r = check_equivalence(&op, &f, &f, &x, opts()).unwrap();
    assert!(r.passed(), "{}", r.to_pretty());
}

#[test]
fn equivalence_first_order_part() {
    // Whenever 𝔗₂ − 𝔗₁ = ∂X the constant and linear coefficients of every
    // homomorphism condition vanish; the higher ones are reported as they are.
    let mut checked = 0;
    for op in ops() {
        let cx = TComplex::new(op.clone()).unwrap();
        let m = op.g().dim();
        let zero = LinearMap::zero(op.h().dim(), m);
        for (k, _) in pairs(m).iter().enumerate() {
            let x = unit_vec(pair_count(m), k);
            let bd = cx.zero_cochain_map(&x).unwrap().to_map().unwrap();
            if bd.is_zero() || !check_linear_deformation(&op, &bd, opts()).unwrap().passed() {
                continue;
            }
            let r = check_equivalence(&op, &zero, &bd, &x, CheckOptions::all_violations()).unwrap();
            assert_eq!(r.equation_passed("equiv.difference_is_boundary"), Some(true));
            for id in [
                "equiv.psi_g_binary",
                "equiv.psi_g_ternary",
                "equiv.psi_h_binary",
                "equiv.psi_h_ternary",
                "equiv.intertwines_operator",
                "equiv.rho_equivariant",
                "equiv.mu_equivariant",
            ] {
                for t in 0..2 {
                    let key = format!("{id}[t^{t}]");
                    assert_eq!(r.equation_passed(&key), Some(true), "{key}");
                }
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn equivalence_detects_wrong_element() {
    let op = projection_e1e3();
    let cx = TComplex::new(op.clone()).unwrap();
    let zero = LinearMap::zero(4, 4);
    let k = (0..6)
        .find(|&k| !cx.zero_cochain_map(&unit_vec(6, k)).unwrap().is_zero())
        .unwrap();
    let r = check_equivalence(&op, &zero, &zero, &unit_vec(6, k), opts()).unwrap();
    assert_eq!(r.equation_passed("equiv.difference_is_boundary"), Some(false));
    assert_eq!(r.equation_passed("equiv.intertwines_operator[t^1]"), Some(false));
}

#[test]
fn equivalence_requires_linear_deformations() {
    let op = projection_e1e3();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = LinearMap::new(random_matrix(&mut rng, 4, 4));
    let zero = LinearMap::zero(4, 4);
    assert!(matches!(
        check_equivalence(&op, &zero, &f, &zero_vec(6), opts()),
        Err(LyaError::InvalidDeformation(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn obstruction_is_a_cocycle(coeffs in prop::collection::vec(-2i64..=2, 9)) {
        let op = zero_op_sl2();
        let basis = cocycles(&op);
        let mut f = LinearMap::zero(3, 3);
        for (c, b) in coeffs.iter().zip(&basis) {
            f = f.add(&b.scale(&qi(*c)));
        }
        let d = OrderNDeformation::new(op, vec![f]).unwrap();
        let ob = d.obstruction_class().unwrap();
        prop_assert!(ob.is_cocycle);
        if let Extension::Extended { next } = d.extend().unwrap() {
            prop_assert!(d.extended(next).unwrap().check_order_n(CheckOptions::first_only()).passed());
        }
    }
}
