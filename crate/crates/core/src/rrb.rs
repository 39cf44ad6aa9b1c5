//! Relative Rota-Baxter operators of weight 1, their homomorphisms, and the
//! constructions attached to them (graph, Nijenhuis lift, descent algebra).

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{check_homomorphism, LinearMap, LyAlgebra};
use crate::error::{dim_check, LyaError, Result};
use crate::linalg::{add_vec, sub_vec, unit_vec, Matrix, Subspace, Vector};
use crate::rational::{q, qi, Rational};
use crate::rep::{adjoint_rep, graph_subspace, RepAction};
use crate::report::{CheckOptions, Report};
use crate::tensor::{Bilinear, Trilinear};

/// A linear map `T: h → g` over an action of `g` on `h`.
#[derive(Clone, Debug)]
pub struct RrbOperator {
    action: RepAction,
    t: LinearMap,
    verified: bool,
}

impl RrbOperator {
    /// Packages `t` (a `dim g × dim h` matrix) over `action`; nothing is checked
    /// beyond shapes.
    pub fn new(action: RepAction, t: LinearMap) -> Result<Self> {
        dim_check("operator source (carrier dimension)", action.n(), t.source_dim())?;
        dim_check("operator target (acting dimension)", action.m(), t.target_dim())?;
        Ok(RrbOperator {
            action,
            t,
            verified: false,
        })
    }

    pub fn action(&self) -> &RepAction {
        &self.action
    }

    pub fn map(&self) -> &LinearMap {
        &self.t
    }

    pub fn g(&self) -> &LyAlgebra {
        self.action.acting()
    }

    pub fn h(&self) -> &LyAlgebra {
        self.action.carrier()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// `Tu`
    pub fn apply(&self, u: &[Rational]) -> Vector {
        self.t.apply(u)
    }

    /// Same action, different map.
    pub fn with_map(&self, t: LinearMap) -> Result<Self> {
        Self::new(self.action.clone(), t)
    }

    /// Right-hand side inside `T(…)` of the binary identity:
    /// `ρ(Tu)v − ρ(Tv)u + [u,v]_h`.
    pub(crate) fn descent_bin(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let (tu, tv) = (self.apply(u), self.apply(v));
        let mut acc = self.action.rho_apply(&tu, v);
        acc = sub_vec(&acc, &self.action.rho_apply(&tv, u));
        add_vec(&acc, &self.h().br(u, v))
    }

    /// `D(Tu,Tv)w + μ(Tv,Tw)u − μ(Tu,Tw)v + ⟨u,v,w⟩_h`.
    pub(crate) fn descent_ter(&self, u: &[Rational], v: &[Rational], w: &[Rational]) -> Vector {
        let (tu, tv, tw) = (self.apply(u), self.apply(v), self.apply(w));
        let a = &self.action;
        let mut acc = a.d_apply(&tu, &tv, w);
        acc = add_vec(&acc, &a.mu_apply(&tv, &tw, u));
        acc = sub_vec(&acc, &a.mu_apply(&tu, &tw, v));
        add_vec(&acc, &self.h().tr(u, v, w))
    }

    /// `[Tu,Tv] = T(ρ(Tu)v − ρ(Tv)u + [u,v]_h)` and the ternary analogue on
    /// all basis tuples of `h`.
    pub fn check_rrb(&self, opts: CheckOptions) -> Report {
        let n = self.action.n();
        let g = self.g();
        let h = self.h();
        let mut r = Report::new("relative Rota-Baxter operator of weight 1", opts);
        if !self.action.is_action_certified() {
            r.note("the underlying representation is not certified as an action");
        }
        r.check_tuples("rrb.binary", &[n, n], |ix| {
            let (u, v) = (h.e(ix[0]), h.e(ix[1]));
            let lhs = g.br(&self.apply(&u), &self.apply(&v));
            sub_vec(&lhs, &self.apply(&self.descent_bin(&u, &v)))
        });
        r.check_tuples("rrb.ternary", &[n, n, n], |ix| {
            let (u, v, w) = (h.e(ix[0]), h.e(ix[1]), h.e(ix[2]));
            let lhs = g.tr(&self.apply(&u), &self.apply(&v), &self.apply(&w));
            sub_vec(&lhs, &self.apply(&self.descent_ter(&u, &v, &w)))
        });
        r
    }

    /// Runs [`Self::check_rrb`] and records the outcome in the verified flag.
    pub fn verify(mut self, opts: CheckOptions) -> (Self, Report) {
        let r = self.check_rrb(opts);
        self.verified = r.passed() && self.action.is_action_certified();
        (self, r)
    }

    pub fn ensure_verified(&self) -> Result<()> {
        if self.verified {
            Ok(())
        } else {
            Err(LyaError::Unverified(
                "operator has not passed the relative Rota-Baxter check".into(),
            ))
        }
    }

    /// Closure of `{Tu + u}` under both brackets of the semidirect product.
    pub fn graph_subalgebra_check(&self, opts: CheckOptions) -> Result<Report> {
        let sd = self.action.semidirect_product()?;
        Ok(graph_closure(&sd, self.t.matrix(), opts))
    }

    /// `[[Id, T], [0, 0]]` on `g ⊕ h`.
    pub fn lift_operator(&self) -> LinearMap {
        let (m, n) = (self.action.m(), self.action.n());
        let mut a = Matrix::zeros(m + n, m + n);
        for i in 0..m {
            a.set(i, i, Rational::one());
        }
        for i in 0..m {
            for j in 0..n {
                a.set(i, m + j, self.t.matrix().get(i, j).clone());
            }
        }
        LinearMap::new(a)
    }

    /// Nijenhuis check of the lift on the semidirect product.
    pub fn check_lift_nijenhuis(&self, opts: CheckOptions) -> Result<Report> {
        let sd = self.action.semidirect_product()?;
        Ok(check_nijenhuis(&sd, &self.lift_operator(), opts))
    }

    /// Structure tensors of `[u,v]_T`, `⟨u,v,w⟩_T` on `h`, whether or not the
    /// operator is verified.
    pub fn descent_tensors(&self) -> (Bilinear, Trilinear) {
        let h = self.h();
        let n = h.dim();
        let bin = Bilinear::from_fn(n, n, |i, j| self.descent_bin(&h.e(i), &h.e(j)));
        let ter = Trilinear::from_fn(n, n, |i, j, k| {
            self.descent_ter(&h.e(i), &h.e(j), &h.e(k))
        });
        (bin, ter)
    }

    /// The descent algebra; requires a verified operator.
    pub fn descent_algebra(&self) -> Result<LyAlgebra> {
        self.ensure_verified()?;
        let (alg, _) = self.descent_algebra_unchecked().verify();
        Ok(alg)
    }

    /// Descent brackets for an arbitrary map, tagged unverified.
    pub fn descent_algebra_unchecked(&self) -> LyAlgebra {
        let (bin, ter) = self.descent_tensors();
        LyAlgebra::from_tensors(format!("descent of {}", self.h().name()), bin, ter)
            .expect("descent brackets are antisymmetric")
            .with_basis_names(self.h().basis_names().to_vec())
            .expect("same dimension")
    }
}

/// Closure of the graph of `t` (as `{Tu + u}` inside `sd = g ⊕ h`) under both
/// brackets; residuals are `X − T(U)` for each bracket `X + U`.
pub fn graph_closure(sd: &LyAlgebra, t: &Matrix, opts: CheckOptions) -> Report {
    let (m, n) = (t.rows(), t.cols());
    debug_assert_eq!(sd.dim(), m + n);
    let gamma = |a: usize| {
        let mut v = t.col(a);
        v.extend(unit_vec(n, a));
        v
    };
    let resid = |v: Vector| {
        let (x, u) = v.split_at(m);
        sub_vec(x, &t.apply(u))
    };
    let mut r = Report::new("graph subalgebra", opts);
    r.check_tuples("graph.binary", &[n, n], |ix| {
        resid(sd.br(&gamma(ix[0]), &gamma(ix[1])))
    });
    r.check_tuples("graph.ternary", &[n, n, n], |ix| {
        resid(sd.tr(&gamma(ix[0]), &gamma(ix[1]), &gamma(ix[2])))
    });
    r
}

/// Graph of `t` as a subspace of `g ⊕ h`.
pub fn graph(t: &LinearMap) -> Subspace {
    graph_subspace(t.matrix())
}

/// The binary and ternary Nijenhuis identities for `nmap` on `a`.
pub fn check_nijenhuis(a: &LyAlgebra, nmap: &LinearMap, opts: CheckOptions) -> Report {
    let d = a.dim();
    let mut r = Report::new("Nijenhuis operator", opts);
    if nmap.source_dim() != d || nmap.target_dim() != d {
        r.check_flag("nijenhuis.shape", false);
        return r;
    }
    let nn = |v: &[Rational]| nmap.apply(v);
    r.check_tuples("nijenhuis.binary", &[d, d], |ix| {
        let (x, y) = (a.e(ix[0]), a.e(ix[1]));
        let (nx, ny) = (nn(&x), nn(&y));
        let lhs = a.br(&nx, &ny);
        let mut inner = add_vec(&a.br(&nx, &y), &a.br(&x, &ny));
        inner = sub_vec(&inner, &nn(&a.br(&x, &y)));
        sub_vec(&lhs, &nn(&inner))
    });
    r.check_tuples("nijenhuis.ternary", &[d, d, d], |ix| {
        let (x, y, z) = (a.e(ix[0]), a.e(ix[1]), a.e(ix[2]));
        let (nx, ny, nz) = (nn(&x), nn(&y), nn(&z));
        let lhs = a.tr(&nx, &ny, &nz);
        let mut inner = a.tr(&nx, &ny, &z);
        inner = add_vec(&inner, &a.tr(&nx, &y, &nz));
        inner = add_vec(&inner, &a.tr(&x, &ny, &nz));
        let mut corr = a.tr(&nx, &y, &z);
        corr = add_vec(&corr, &a.tr(&x, &ny, &z));
        corr = add_vec(&corr, &a.tr(&x, &y, &nz));
        inner = sub_vec(&inner, &nn(&corr));
        inner = add_vec(&inner, &nn(&nn(&a.tr(&x, &y, &z))));
        sub_vec(&lhs, &nn(&inner))
    });
    r
}

/// Projection of `a` onto `h` along `t`, over the adjoint action.
///
/// Every hypothesis (adjoint action, `h` an abelian subalgebra, `h` meeting the
/// derived algebra trivially, `a = t ⊕ h`) is re-checked and reported by name.
/// The resulting operator is then run through the weight-1 check; its verified
/// flag reflects that check rather than being assumed.
pub fn projection_operator(
    a: &LyAlgebra,
    h: &Subspace,
    t: &Subspace,
    opts: CheckOptions,
) -> Result<(RrbOperator, Report)> {
    let d = a.dim();
    if h.ambient_dim() != d || t.ambient_dim() != d {
        return Err(LyaError::AmbientMismatch(h.ambient_dim(), t.ambient_dim()));
    }
    let fail = |hyp: &str| {
        Err(LyaError::PreconditionFailed {
            hypothesis: hyp.to_string(),
        })
    };
    let (ad, _) = adjoint_rep(a).certify(opts);
    if !ad.is_action_certified() {
        return fail("adjoint representation is an action");
    }
    if !a.is_subalgebra(h) {
        return fail("h is a subalgebra");
    }
    if !a.is_abelian_on(h) {
        return fail("h is abelian");
    }
    let g1 = a.derived_algebra();
    if !h.intersect(&g1)?.is_zero() {
        return fail("derived algebra meets h trivially");
    }
    if h.dim() + t.dim() != d || !h.intersect(t)?.is_zero() {
        return fail("g is the direct sum of t and h");
    }
    // Change of basis to (h basis, t basis); P keeps the h coordinates.
    let cols: Vec<Vector> = h.basis().iter().chain(t.basis()).cloned().collect();
    let b = Matrix::from_cols(&cols, d)?;
    let binv = b.inverse()?;
    let mut keep = Matrix::zeros(d, d);
    for i in 0..h.dim() {
        keep.set(i, i, Rational::one());
    }
    let p = b.mul(&keep).mul(&binv);
    let op = RrbOperator::new(ad, LinearMap::new(p))?;
    let (op, mut r) = op.verify(opts);
    r.subject = "projection operator".into();
    r.set("binary_span", a.binary_span().basis());
    r.set("ternary_span", a.ternary_span().basis());
    r.set("derived_algebra", g1.basis());
    Ok((op, r))
}

/// A pair `(ψ_g, ψ_h)` intended as a homomorphism between two operators.
#[derive(Clone, Debug)]
pub struct HomPair {
    pub psi_g: LinearMap,
    pub psi_h: LinearMap,
}

impl HomPair {
    pub fn new(psi_g: LinearMap, psi_h: LinearMap) -> Self {
        HomPair { psi_g, psi_h }
    }

    pub fn identity(g_dim: usize, h_dim: usize) -> Self {
        HomPair::new(LinearMap::identity(g_dim), LinearMap::identity(h_dim))
    }
}

/// Homomorphism conditions from `from` (T') to `to` (T): both maps are algebra
/// homomorphisms, `ψ_g T' = T ψ_h`, and `ψ_h` intertwines `ρ`, `μ` and the
/// derived `D`.
pub fn check_rrb_homomorphism(
    from: &RrbOperator,
    to: &RrbOperator,
    pair: &HomPair,
    opts: CheckOptions,
) -> Result<Report> {
    let (a1, a2) = (from.action(), to.action());
    dim_check("psi_g source", a1.m(), pair.psi_g.source_dim())?;
    dim_check("psi_g target", a2.m(), pair.psi_g.target_dim())?;
    dim_check("psi_h source", a1.n(), pair.psi_h.source_dim())?;
    dim_check("psi_h target", a2.n(), pair.psi_h.target_dim())?;
    let mut r = Report::new("homomorphism of relative Rota-Baxter operators", opts);
    r.absorb("psi_g", check_homomorphism(a1.acting(), a2.acting(), &pair.psi_g, opts)?);
    r.absorb("psi_h", check_homomorphism(a1.carrier(), a2.carrier(), &pair.psi_h, opts)?);
    let (m, n) = (a1.m(), a1.n());
    let pg = |x: usize| pair.psi_g.image(x);
    let ph = |v: &[Rational]| pair.psi_h.apply(v);
    r.check_tuples("rrbhom.intertwines_operator", &[n], |ix| {
        let u = unit_vec(n, ix[0]);
        sub_vec(&pair.psi_g.apply(&from.apply(&u)), &to.apply(&ph(&u)))
    });
    r.check_tuples("rrbhom.rho_equivariant", &[m, n], |ix| {
        let lhs = ph(&a1.rho_e(ix[0]).col(ix[1]));
        sub_vec(&lhs, &a2.rho_apply(&pg(ix[0]), &pair.psi_h.image(ix[1])))
    });
    r.check_tuples("rrbhom.mu_equivariant", &[m, m, n], |ix| {
        let lhs = ph(&a1.mu_e(ix[0], ix[1]).col(ix[2]));
        sub_vec(
            &lhs,
            &a2.mu_apply(&pg(ix[0]), &pg(ix[1]), &pair.psi_h.image(ix[2])),
        )
    });
    // follows from the two conditions above
    r.check_tuples("rrbhom.d_equivariant", &[m, m, n], |ix| {
        let lhs = ph(&a1.d_e(ix[0], ix[1]).col(ix[2]));
        sub_vec(
            &lhs,
            &a2.d_apply(&pg(ix[0]), &pg(ix[1]), &pair.psi_h.image(ix[2])),
        )
    });
    Ok(r)
}

/// Entries used for random operators.
pub fn sample_pool() -> [Rational; 6] {
    [qi(-2), qi(-1), qi(0), qi(1), qi(2), q(1, 2)]
}

/// A `rows × cols` matrix with entries drawn uniformly from [`sample_pool`].
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let pool = sample_pool();
    let data: Vec<Rational> = (0..rows * cols)
        .map(|_| pool.choose(rng).expect("nonempty pool").clone())
        .collect();
    Matrix::from_data(rows, cols, data).expect("sized buffer")
}

/// Like [`random_matrix`], with each row and each column independently zeroed
/// with probability 1/2. Low-rank maps with small support are far more likely
/// to be operators than dense ones.
pub fn random_masked_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let mut m = random_matrix(rng, rows, cols);
    let keep_r: Vec<bool> = (0..rows).map(|_| rng.gen_bool(0.5)).collect();
    let keep_c: Vec<bool> = (0..cols).map(|_| rng.gen_bool(0.5)).collect();
    for (i, kr) in keep_r.iter().enumerate() {
        for (j, kc) in keep_c.iter().enumerate() {
            if !(kr & kc) {
                m.set(i, j, Rational::zero());
            }
        }
    }
    m
}

/// Searches `tries` masked random maps over `action` and returns the verified ones.
pub fn search_operators<R: Rng + ?Sized>(
    rng: &mut R,
    action: &RepAction,
    tries: usize,
) -> Vec<RrbOperator> {
    let mut found = Vec::new();
    for _ in 0..tries {
        let t = random_masked_matrix(rng, action.m(), action.n());
        let op = RrbOperator::new(action.clone(), LinearMap::new(t)).expect("shapes from action");
        let (op, r) = op.verify(CheckOptions::first_only());
        if r.passed() && op.is_verified() {
            found.push(op);
        }
    }
    found
}
