//! Small named algebras, actions and operators used by tests, the CLI
//! fixture corpus and documentation examples.

use crate::algebra::{LinearMap, LyAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::rational::qi;
use crate::rep::{adjoint_rep, RepAction};
use crate::report::CheckOptions;
use crate::rrb::{HomPair, RrbOperator};

/// Four-dimensional algebra with `[e1,e2] = 2e4`, `⟨e1,e2,e1⟩ = e4`.
pub fn example4() -> LyAlgebra {
    let a = LyAlgebra::from_entries("example4", 4, &[(0, 1, 3, qi(2))], &[(0, 1, 0, 3, qi(1))])
        .expect("valid entries");
    a.verify().0
}

/// `example4` with `⟨e1,e2,e1⟩ = e3` and an extra `[e3,e1] = e4`. Every ternary
/// bracket needs `e1, e2` in its first two slots and every binary bracket lands
/// in `span{e4}`, so this is still a Lie-Yamaguti algebra.
pub fn example4_perturbed() -> LyAlgebra {
    LyAlgebra::from_entries(
        "example4-perturbed",
        4,
        &[(0, 1, 3, qi(2)), (2, 0, 3, qi(1))],
        &[(0, 1, 0, 2, qi(1))],
    )
    .expect("valid entries")
}

/// Three-dimensional `[e1,e2] = e3`, `⟨e1,e2,e3⟩ = e1`; violates the ternary
/// derivation identity at `(e1, e2, e1, e2)`.
pub fn derivation_violation() -> LyAlgebra {
    LyAlgebra::from_entries("derivation-violation", 3, &[(0, 1, 2, qi(1))], &[(0, 1, 2, 0, qi(1))])
        .expect("valid entries")
}

/// `sl2` with basis `(h, e, f)` and `⟨x,y,z⟩ = [[x,y],z]`.
pub fn sl2() -> LyAlgebra {
    LyAlgebra::from_lie_algebra(
        "sl2",
        3,
        &[(0, 1, 1, qi(2)), (0, 2, 2, qi(-2)), (1, 2, 0, qi(1))],
    )
    .expect("sl2 satisfies Jacobi")
    .with_basis_names(vec!["h".into(), "e".into(), "f".into()])
    .expect("three names")
}

/// Two-dimensional nonabelian Lie algebra `[e1,e2] = e1`, as a Lie-Yamaguti
/// algebra.
pub fn affine2() -> LyAlgebra {
    LyAlgebra::from_lie_algebra("affine2", 2, &[(0, 1, 0, qi(1))]).expect("Lie algebra")
}

/// Adjoint representation of `example4`, certified as an action.
pub fn example4_action() -> RepAction {
    adjoint_rep(&example4()).certify(CheckOptions::first_only()).0
}

/// `sl2` acting on the abelian algebra of dimension 3 through its adjoint maps.
/// Any representation on an abelian carrier is an action.
pub fn sl2_on_abelian() -> RepAction {
    let ad = adjoint_rep(&sl2());
    RepAction::new(sl2(), LyAlgebra::abelian(3), ad.rho_list().to_vec(), ad.mu_list().to_vec())
        .expect("same shapes as the adjoint")
        .certify(CheckOptions::first_only())
        .0
}

/// The projection of `example4` onto `span{e1,e2}` along `span{e3,e4}`, over
/// the adjoint action. It fails the weight-1 identity at `(e1, e2)`.
pub fn projection_e1e2() -> RrbOperator {
    let p = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
    operator(example4_action(), p)
}

/// The projection of `example4` onto `span{e1,e3}` along `span{e2,e4}`.
pub fn projection_e1e3() -> RrbOperator {
    let p = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0]]);
    operator(example4_action(), p)
}

/// Identity on `example4` over its adjoint action (not a weight-1 operator).
pub fn identity_on_example4() -> RrbOperator {
    operator(example4_action(), Matrix::identity(4))
}

/// Automorphism `e1 ↦ e1+e2, e2 ↦ e2, e3 ↦ e3+e4, e4 ↦ e4` of `example4`.
pub fn example4_automorphism() -> LinearMap {
    LinearMap::new(Matrix::from_ints(&[
        &[1, 0, 0, 0],
        &[1, 1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 1, 1],
    ]))
}

/// `(T', T, (ψ, ψ))` with `T' = projection_e1e3` and `T = ψ T' ψ⁻¹`.
pub fn example4_hom_pair() -> (RrbOperator, RrbOperator, HomPair) {
    let psi = example4_automorphism();
    let from = projection_e1e3();
    let inv = psi.inverse().expect("automorphism is invertible");
    let t = psi
        .compose(from.map())
        .and_then(|x| x.compose(&inv))
        .expect("square maps");
    let to = operator(example4_action(), t.matrix().clone());
    (from, to, HomPair::new(psi.clone(), psi))
}

/// Abelian `g` (dimension `m`) acting trivially on abelian `h` (dimension `n`).
pub fn zero_action(m: usize, n: usize) -> RepAction {
    RepAction::zero(LyAlgebra::abelian(m), LyAlgebra::abelian(n))
        .certify(CheckOptions::first_only())
        .0
}

/// An arbitrary map over [`zero_action`]; every such map is a weight-1 operator.
pub fn zero_fixture(t: Matrix) -> RrbOperator {
    let action = zero_action(t.rows(), t.cols());
    operator(action, t)
}

/// `span{e1,e3}` and `span{e2,e4}` in `example4`.
pub fn example4_splitting() -> (Subspace, Subspace) {
    (Subspace::coordinate(4, &[0, 2]), Subspace::coordinate(4, &[1, 3]))
}

fn operator(action: RepAction, t: Matrix) -> RrbOperator {
    RrbOperator::new(action, LinearMap::new(t))
        .expect("fixture shapes agree")
        .verify(CheckOptions::first_only())
        .0
}
