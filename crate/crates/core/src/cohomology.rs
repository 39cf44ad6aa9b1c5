//! The Yamaguti cochain complex of a representation, the representation a
//! weight-1 relative Rota-Baxter operator induces on `g`, and the complex of
//! the operator itself.
//!
//! A degree-1 cochain is a map `h → V`. A degree-`p` cochain (`p ≥ 2`) is a
//! pair `(f, g)` with `f: (∧²h)^(p−1) → V` and `g: (∧²h)^(p−1) ⊗ h → V`,
//! stored on the reduced pair basis `e_a ∧ e_b` (`a < b`, lexicographic).

use std::sync::OnceLock;

use crate::algebra::{LinearMap, LyAlgebra};
use crate::error::{dim_check, LyaError, Result};
use crate::linalg::{add_vec, axpy, is_zero_vec, scale_vec, sub_vec, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::rational::{qi, Rational};
use crate::rep::RepAction;
use crate::rrb::{HomPair, RrbOperator};

/// `dim ∧²K^n`
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `e_a ∧ e_b` (`a < b`) in the pair basis.
pub fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// The pair basis `[(0,1), (0,2), …, (n−2, n−1)]`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Coordinates of `x ∧ y` in the pair basis.
pub fn wedge(x: &[Rational], y: &[Rational]) -> Vector {
    let n = x.len();
    assert_eq!(n, y.len());
    let mut out = zero_vec(pair_count(n));
    for (k, (a, b)) in pairs(n).into_iter().enumerate() {
        let c = &(&x[a] * &y[b]) - &(&x[b] * &y[a]);
        out[k] = c;
    }
    out
}

/// The map `x ∧ y ↦ Ax ∧ Ay` on pair coordinates.
pub fn lambda2(a: &Matrix) -> Matrix {
    let cols: Vec<Vector> = pairs(a.cols())
        .into_iter()
        .map(|(i, j)| wedge(&a.col(i), &a.col(j)))
        .collect();
    Matrix::from_cols(&cols, pair_count(a.rows())).expect("wedge columns have pair length")
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        qi(1)
    } else {
        qi(-1)
    }
}

/// A Yamaguti cochain on an `src`-dimensional algebra with values in a
/// `val`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    src: usize,
    val: usize,
    /// degree 1: `f[v·val + r]`; otherwise `f[t·val + r]` for a pair tuple `t`
    f: Vector,
    /// `g[(t·src + z)·val + r]`; empty in degree 1
    g: Vector,
}

impl Cochain {
    /// Number of pair tuples a degree-`degree` cochain is indexed by.
    fn tuple_count(degree: usize, src: usize) -> usize {
        pair_count(src).pow((degree - 1) as u32)
    }

    /// `n·m` in degree 1 and `M^(p−1)·m·(1+n)` above, with `M = n(n−1)/2`.
    pub fn space_dim(degree: usize, src: usize, val: usize) -> usize {
        assert!(degree >= 1, "cochains start in degree 1");
        if degree == 1 {
            src * val
        } else {
            Self::tuple_count(degree, src) * val * (1 + src)
        }
    }

    pub fn zero(degree: usize, src: usize, val: usize) -> Self {
        assert!(degree >= 1, "cochains start in degree 1");
        let (fl, gl) = if degree == 1 {
            (src * val, 0)
        } else {
            let t = Self::tuple_count(degree, src);
            (t * val, t * src * val)
        };
        Cochain {
            degree,
            src,
            val,
            f: zero_vec(fl),
            g: zero_vec(gl),
        }
    }

    /// Inverse of [`Cochain::coords`].
    pub fn from_coords(degree: usize, src: usize, val: usize, coords: &[Rational]) -> Result<Self> {
        if degree == 0 {
            return Err(LyaError::ShapeMismatch("cochains start in degree 1".into()));
        }
        let mut c = Self::zero(degree, src, val);
        dim_check("cochain coordinates", c.f.len() + c.g.len(), coords.len())?;
        let fl = c.f.len();
        c.f.clone_from_slice(&coords[..fl]);
        c.g.clone_from_slice(&coords[fl..]);
        Ok(c)
    }

    /// The degree-1 cochain of a linear map `h → V`.
    pub fn from_map(t: &LinearMap) -> Self {
        let (src, val) = (t.source_dim(), t.target_dim());
        let mut c = Self::zero(1, src, val);
        for v in 0..src {
            c.f[v * val..(v + 1) * val].clone_from_slice(&t.image(v));
        }
        c
    }

    /// The linear map of a degree-1 cochain.
    pub fn to_map(&self) -> Result<LinearMap> {
        if self.degree != 1 {
            return Err(LyaError::ShapeMismatch(format!(
                "degree-{} cochain is not a linear map",
                self.degree
            )));
        }
        let images: Vec<Vector> = (0..self.src).map(|v| self.value1(v).to_vec()).collect();
        LinearMap::from_images(&images, self.val)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn src_dim(&self) -> usize {
        self.src
    }

    pub fn val_dim(&self) -> usize {
        self.val
    }

    /// The `f` component followed by the `g` component.
    pub fn coords(&self) -> Vector {
        let mut v = self.f.clone();
        v.extend(self.g.iter().cloned());
        v
    }

    pub fn f_part(&self) -> &[Rational] {
        &self.f
    }

    pub fn g_part(&self) -> &[Rational] {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.f) && is_zero_vec(&self.g)
    }

    fn tuple_pos(&self, t: &[usize]) -> usize {
        let m = pair_count(self.src);
        t.iter().fold(0, |acc, &k| acc * m + k)
    }

    /// Degree-1 value on the basis vector `e_v`.
    pub fn value1(&self, v: usize) -> &[Rational] {
        &self.f[v * self.val..(v + 1) * self.val]
    }

    /// `f` on a tuple of pair-basis indices.
    pub fn f_at(&self, t: &[usize]) -> &[Rational] {
        let p = self.tuple_pos(t) * self.val;
        &self.f[p..p + self.val]
    }

    /// `g` on a tuple of pair-basis indices and a basis index.
    pub fn g_at(&self, t: &[usize], z: usize) -> &[Rational] {
        let p = (self.tuple_pos(t) * self.src + z) * self.val;
        &self.g[p..p + self.val]
    }

    /// Degree-1 value on an arbitrary vector.
    pub fn eval1(&self, v: &[Rational]) -> Vector {
        let mut out = zero_vec(self.val);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, self.value1(i));
            }
        }
        out
    }

    /// `f` on arbitrary elements of `∧²h` given in pair coordinates.
    pub fn eval_f(&self, args: &[&[Rational]]) -> Vector {
        assert!(self.degree >= 2 && args.len() == self.degree - 1);
        let mut out = zero_vec(self.val);
        let mut t = Vec::with_capacity(args.len());
        expand(args, &mut t, &qi(1), &mut |t, c| axpy(&mut out, c, self.f_at(t)));
        out
    }

    /// `g` on arbitrary elements of `∧²h` and an arbitrary vector of `h`.
    pub fn eval_g(&self, args: &[&[Rational]], z: &[Rational]) -> Vector {
        assert!(self.degree >= 2 && args.len() == self.degree - 1);
        let mut out = zero_vec(self.val);
        let mut t = Vec::with_capacity(args.len());
        expand(args, &mut t, &qi(1), &mut |t, c| {
            for (zi, zc) in z.iter().enumerate() {
                if !zc.is_zero() {
                    axpy(&mut out, &(c * zc), self.g_at(t, zi));
                }
            }
        });
        out
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!((self.degree, self.src, self.val), (other.degree, other.src, other.val));
        Cochain {
            f: add_vec(&self.f, &other.f),
            g: add_vec(&self.g, &other.g),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        Cochain {
            f: scale_vec(c, &self.f),
            g: scale_vec(c, &self.g),
            ..self.clone()
        }
    }

    fn f_mut(&mut self, t: &[usize]) -> &mut [Rational] {
        let p = self.tuple_pos(t) * self.val;
        &mut self.f[p..p + self.val]
    }

    fn g_mut(&mut self, t: &[usize], z: usize) -> &mut [Rational] {
        let p = (self.tuple_pos(t) * self.src + z) * self.val;
        &mut self.g[p..p + self.val]
    }
}

/// Multilinear expansion over the supports of `args`.
fn expand(args: &[&[Rational]], t: &mut Vec<usize>, coeff: &Rational, emit: &mut impl FnMut(&[usize], &Rational)) {
    let Some((first, rest)) = args.split_first() else {
        emit(t, coeff);
        return;
    };
    for (k, c) in first.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        t.push(k);
        expand(rest, t, &(coeff * c), emit);
        t.pop();
    }
}

/// Every tuple of `len` indices below `m`, last index fastest.
fn tuples(m: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..m).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn add_into(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    axpy(acc, c, v);
}

/// The Yamaguti coboundary of `c` with coefficients in `rep`. The algebra is
/// the acting algebra of `rep`; values live in its carrier.
pub fn yamaguti_coboundary(rep: &RepAction, c: &Cochain) -> Result<Cochain> {
    let alg = rep.acting();
    let (n, val) = (alg.dim(), rep.n());
    dim_check("cochain source (acting algebra dimension)", n, c.src)?;
    dim_check("cochain values (carrier dimension)", val, c.val)?;
    let mut out = Cochain::zero(c.degree + 1, n, val);
    let pr = pairs(n);
    if c.degree == 1 {
        for (k, &(a, b)) in pr.iter().enumerate() {
            // ρ(x)f(y) − ρ(y)f(x) − f([x,y])
            let mut v = rep.rho_e(a).apply(c.value1(b));
            v = sub_vec(&v, &rep.rho_e(b).apply(c.value1(a)));
            v = sub_vec(&v, &c.eval1(alg.binary().at(a, b)));
            out.f_mut(&[k]).clone_from_slice(&v);
            for z in 0..n {
                // D(x,y)f(z) + μ(y,z)f(x) − μ(x,z)f(y) − f(⟨x,y,z⟩)
                let mut v = rep.d_e(a, b).apply(c.value1(z));
                v = add_vec(&v, &rep.mu_e(b, z).apply(c.value1(a)));
                v = sub_vec(&v, &rep.mu_e(a, z).apply(c.value1(b)));
                v = sub_vec(&v, &c.eval1(alg.ternary().at(a, b, z)));
                out.g_mut(&[k], z).clone_from_slice(&v);
            }
        }
        return Ok(out);
    }

    let q = c.degree - 1;
    let mp = pr.len();
    let basis: Vec<Vector> = (0..mp).map(|k| unit_vec(mp, k)).collect();
    let e = |i: usize| unit_vec(n, i);
    let pre = sign(q);
    // 𝔛_k ∘ 𝔛_l = ⟨x_k,y_k,x_l⟩ ∧ y_l + x_l ∧ ⟨x_k,y_k,y_l⟩
    let circ = |k: usize, l: usize| -> Vector {
        let ((a, b), (c2, d)) = (pr[k], pr[l]);
        add_vec(
            &wedge(alg.ternary().at(a, b, c2), &e(d)),
            &wedge(&e(c2), alg.ternary().at(a, b, d)),
        )
    };
    let circs: Vec<Vec<Vector>> = (0..mp).map(|k| (0..mp).map(|l| circ(k, l)).collect()).collect();

    for t in tuples(mp, q + 1) {
        let args: Vec<&[Rational]> = t.iter().map(|&k| basis[k].as_slice()).collect();
        let head = &t[..q];
        let (xl, yl) = pr[t[q]];
        let without = |k: usize| -> Vec<&[Rational]> {
            args.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, a)| *a).collect()
        };
        let replaced = |k: usize, l: usize| -> Vec<&[Rational]> {
            args.iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(i, a)| if i == l { circs[t[k]][t[l]].as_slice() } else { *a })
                .collect()
        };

        // first component
        let mut v = zero_vec(val);
        add_into(&mut v, &pre, &rep.rho_e(xl).apply(c.g_at(head, yl)));
        add_into(&mut v, &-&pre, &rep.rho_e(yl).apply(c.g_at(head, xl)));
        add_into(&mut v, &-&pre, &c.eval_g(&args[..q], alg.binary().at(xl, yl)));
        for k in 0..q {
            let (a, b) = pr[t[k]];
            add_into(&mut v, &sign(k), &rep.d_e(a, b).apply(&c.eval_f(&without(k))));
        }
        for k in 0..=q {
            for l in k + 1..=q {
                add_into(&mut v, &-&sign(k), &c.eval_f(&replaced(k, l)));
            }
        }
        out.f_mut(&t).clone_from_slice(&v);

        // second component
        for z in 0..n {
            let ez = e(z);
            let mut v = zero_vec(val);
            add_into(&mut v, &pre, &rep.mu_e(yl, z).apply(c.g_at(head, xl)));
            add_into(&mut v, &-&pre, &rep.mu_e(xl, z).apply(c.g_at(head, yl)));
            for k in 0..=q {
                let (a, b) = pr[t[k]];
                add_into(&mut v, &sign(k), &rep.d_e(a, b).apply(&c.eval_g(&without(k), &ez)));
                add_into(&mut v, &-&sign(k), &c.eval_g(&without(k), alg.ternary().at(a, b, z)));
            }
            for k in 0..=q {
                for l in k + 1..=q {
                    add_into(&mut v, &-&sign(k), &c.eval_g(&replaced(k, l), &ez));
                }
            }
            out.g_mut(&t, z).clone_from_slice(&v);
        }
    }
    Ok(out)
}

/// Matrix of `c ↦ yamaguti_coboundary(rep, c)` from degree `p`; column `j` is
/// the coboundary of the `j`-th coordinate cochain.
pub fn yamaguti_matrix(rep: &RepAction, p: usize) -> Result<Matrix> {
    let (n, val) = (rep.m(), rep.n());
    let dim = Cochain::space_dim(p, n, val);
    let cols = (0..dim)
        .map(|j| {
            let c = Cochain::from_coords(p, n, val, &unit_vec(dim, j))?;
            Ok(yamaguti_coboundary(rep, &c)?.coords())
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_cols(&cols, Cochain::space_dim(p + 1, n, val))
}

/// `ρ_T(u)x = [Tu,x] + T(ρ(x)u)`, `μ_T(u,v)x = ⟨x,Tu,Tv⟩ − T(D(x,Tu)v − μ(x,Tv)u)`
/// on `g`, over the descent algebra. Requires a verified operator.
pub fn induced_rep(op: &RrbOperator) -> Result<RepAction> {
    op.ensure_verified()?;
    Ok(induced_rep_from(op, op.descent_algebra()?))
}

/// [`induced_rep`] without the verification requirement, over the unchecked
/// descent brackets.
pub fn induced_rep_unchecked(op: &RrbOperator) -> RepAction {
    induced_rep_from(op, op.descent_algebra_unchecked())
}

fn induced_rep_from(op: &RrbOperator, descent: LyAlgebra) -> RepAction {
    let (g, a) = (op.g(), op.action());
    let (m, n) = (g.dim(), op.h().dim());
    let h = op.h();
    let tu: Vec<Vector> = (0..n).map(|u| op.apply(&h.e(u))).collect();
    let col_map = |f: &dyn Fn(&Vector) -> Vector| -> Matrix {
        let cols: Vec<Vector> = (0..m).map(|x| f(&g.e(x))).collect();
        Matrix::from_cols(&cols, m).expect("g-sized columns")
    };
    let rho: Vec<Matrix> = (0..n)
        .map(|u| {
            col_map(&|x| add_vec(&g.br(&tu[u], x), &op.apply(&a.rho_apply(x, &h.e(u)))))
        })
        .collect();
    let mut mu = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            mu.push(col_map(&|x| {
                let inner = sub_vec(&a.d_apply(x, &tu[u], &h.e(v)), &a.mu_apply(x, &tu[v], &h.e(u)));
                sub_vec(&g.tr(x, &tu[u], &tu[v]), &op.apply(&inner))
            }));
        }
    }
    RepAction::new(descent, g.clone(), rho, mu).expect("induced operators are m×m")
}

/// `D_T(u,v)x = ⟨Tu,Tv,x⟩ − T(μ(Tv,x)u − μ(Tu,x)v)`, evaluated directly from
/// the operator rather than derived from `(ρ_T, μ_T)`.
pub fn induced_d_direct(op: &RrbOperator) -> Vec<Matrix> {
    let (g, a, h) = (op.g(), op.action(), op.h());
    let (m, n) = (g.dim(), h.dim());
    let tu: Vec<Vector> = (0..n).map(|u| op.apply(&h.e(u))).collect();
    let mut out = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let cols: Vec<Vector> = (0..m)
                .map(|x| {
                    let x = g.e(x);
                    let inner = sub_vec(&a.mu_apply(&tu[v], &x, &h.e(u)), &a.mu_apply(&tu[u], &x, &h.e(v)));
                    sub_vec(&g.tr(&tu[u], &tu[v], &x), &op.apply(&inner))
                })
                .collect();
            out.push(Matrix::from_cols(&cols, m).expect("g-sized columns"));
        }
    }
    out
}

/// `(dim Z^p, dim B^p, dim H^p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CohomologyDims {
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

/// Highest degree whose outgoing coboundary is cached.
pub const MAX_CACHED_DEGREE: usize = 3;

/// The cochain complex of a weight-1 relative Rota-Baxter operator `T: h → g`:
/// `∧²g` in degree 0, the Yamaguti complex of the descent algebra with
/// coefficients in `(g; ρ_T, μ_T)` above.
#[derive(Debug)]
pub struct TComplex {
    op: RrbOperator,
    induced: RepAction,
    matrices: [OnceLock<Matrix>; MAX_CACHED_DEGREE + 1],
}

impl TComplex {
    /// Requires a verified operator.
    pub fn new(op: RrbOperator) -> Result<Self> {
        let induced = induced_rep(&op)?;
        Ok(Self::assemble(op, induced))
    }

    /// Builds the same formulas for an arbitrary map. Nothing guarantees that
    /// the result is a complex; useful to diagnose maps that fail the identities.
    pub fn new_unchecked(op: RrbOperator) -> Self {
        let induced = induced_rep_unchecked(&op);
        Self::assemble(op, induced)
    }

    fn assemble(op: RrbOperator, induced: RepAction) -> Self {
        TComplex {
            op,
            induced,
            matrices: Default::default(),
        }
    }

    pub fn op(&self) -> &RrbOperator {
        &self.op
    }

    pub fn descent(&self) -> &LyAlgebra {
        self.induced.acting()
    }

    pub fn induced_rep(&self) -> &RepAction {
        &self.induced
    }

    pub fn h_dim(&self) -> usize {
        self.op.h().dim()
    }

    pub fn g_dim(&self) -> usize {
        self.op.g().dim()
    }

    /// `dim ∧²g` in degree 0, the cochain space dimension above.
    pub fn cochain_dim(&self, p: usize) -> usize {
        if p == 0 {
            pair_count(self.g_dim())
        } else {
            Cochain::space_dim(p, self.h_dim(), self.g_dim())
        }
    }

    /// `δ^T` on a cochain of degree ≥ 1.
    pub fn coboundary(&self, c: &Cochain) -> Result<Cochain> {
        yamaguti_coboundary(&self.induced, c)
    }

    /// `∂(X)v = T(D(X)v) − ⟨X, Tv⟩_g` for `X ∈ ∧²g` in pair coordinates.
    pub fn zero_cochain_map(&self, x: &[Rational]) -> Result<Cochain> {
        let (m, n) = (self.g_dim(), self.h_dim());
        dim_check("element of the exterior square", pair_count(m), x.len())?;
        let (g, a, h) = (self.op.g(), self.op.action(), self.op.h());
        let mut c = Cochain::zero(1, n, m);
        for (k, (i, j)) in pairs(m).into_iter().enumerate() {
            if x[k].is_zero() {
                continue;
            }
            for v in 0..n {
                let val = sub_vec(
                    &self.op.apply(&a.d_e(i, j).col(v)),
                    &g.tr(&g.e(i), &g.e(j), &self.op.apply(&h.e(v))),
                );
                let p = v * m;
                axpy(&mut c.f[p..p + m], &x[k], &val);
            }
        }
        Ok(c)
    }

    /// `∂(x ∧ y)`.
    pub fn zero_cochain_map_pair(&self, x: &[Rational], y: &[Rational]) -> Result<Cochain> {
        dim_check("first factor", self.g_dim(), x.len())?;
        dim_check("second factor", self.g_dim(), y.len())?;
        self.zero_cochain_map(&wedge(x, y))
    }

    fn build(&self, p: usize) -> Result<Matrix> {
        if p == 0 {
            let mg = pair_count(self.g_dim());
            let cols = (0..mg)
                .map(|k| Ok(self.zero_cochain_map(&unit_vec(mg, k))?.coords()))
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_cols(&cols, self.cochain_dim(1))
        } else {
            yamaguti_matrix(&self.induced, p)
        }
    }

    /// Matrix of the coboundary out of degree `p` (`p = 0` is `∂`), built once
    /// per degree up to [`MAX_CACHED_DEGREE`].
    pub fn coboundary_matrix(&self, p: usize) -> Result<&Matrix> {
        let Some(slot) = self.matrices.get(p) else {
            return Err(LyaError::ShapeMismatch(format!(
                "coboundary matrices are available out of degrees 0..={MAX_CACHED_DEGREE}, not {p}"
            )));
        };
        if let Some(m) = slot.get() {
            return Ok(m);
        }
        let m = self.build(p)?;
        // a concurrent builder may have won; both values are identical
        Ok(slot.get_or_init(|| m))
    }

    /// `δ^(p+1) · δ^(p)`, which vanishes on a complex.
    pub fn composite(&self, p: usize) -> Result<Matrix> {
        let upper = self.coboundary_matrix(p + 1)?;
        let lower = self.coboundary_matrix(p)?;
        upper.try_mul(lower)
    }

    /// `Z^p = ker δ^(p)`, `B^p = im δ^(p−1)` for `p ∈ {1, 2}`; `B¹ = im ∂`.
    /// Fails with `AxiomsFailed` when `B^p ⊄ Z^p`.
    pub fn cohomology_dims(&self, p: usize) -> Result<CohomologyDims> {
        self.check_degree(p)?;
        let out = self.coboundary_matrix(p)?;
        let inc = self.coboundary_matrix(p - 1)?;
        if !out.mul(inc).is_zero() {
            return Err(LyaError::AxiomsFailed(format!(
                "coboundaries into degree {p} are not cocycles"
            )));
        }
        let z = out.nullity();
        let b = inc.rank();
        Ok(CohomologyDims {
            cocycles: z,
            coboundaries: b,
            cohomology: z - b,
        })
    }

    /// Cocycles whose classes form a basis of `H^p`.
    pub fn cohomology_witnesses(&self, p: usize) -> Result<Vec<Cochain>> {
        let dims = self.cohomology_dims(p)?;
        let z = self.coboundary_matrix(p)?.nullspace();
        let b = self.coboundary_matrix(p - 1)?.column_space();
        let mut span = b;
        let mut reps = Vec::new();
        for v in z.basis() {
            if !span.contains(v) {
                span = span.sum(&Subspace::from_vectors(span.ambient_dim(), std::slice::from_ref(v))?)?;
                reps.push(Cochain::from_coords(p, self.h_dim(), self.g_dim(), v)?);
            }
        }
        debug_assert_eq!(reps.len(), dims.cohomology);
        Ok(reps)
    }

    /// A basis of `Z^p = ker δ^(p)`, `1 ≤ p ≤ 3`.
    pub fn cocycle_basis(&self, p: usize) -> Result<Vec<Cochain>> {
        if p == 0 {
            return Err(LyaError::ShapeMismatch("cochains start in degree 1".into()));
        }
        let z = self.coboundary_matrix(p)?.nullspace();
        z.basis()
            .iter()
            .map(|v| Cochain::from_coords(p, self.h_dim(), self.g_dim(), v))
            .collect()
    }

    fn check_degree(&self, p: usize) -> Result<()> {
        if (1..=2).contains(&p) {
            Ok(())
        } else {
            Err(LyaError::ShapeMismatch(format!(
                "cohomology is computed in degrees 1 and 2, not {p}"
            )))
        }
    }
}

/// `p(f)(𝔘₁, …) = ψ_g f(ψ_h⁻¹𝔘₁, …)` (and likewise for the second
/// component), carrying cochains of `T'` to cochains of `T` when `pair` is a
/// homomorphism from `T'` to `T`.
pub fn pushforward_cochain(pair: &HomPair, c: &Cochain) -> Result<Cochain> {
    dim_check("psi_h source", c.src, pair.psi_h.source_dim())?;
    dim_check("psi_g source", c.val, pair.psi_g.source_dim())?;
    let inv = pair.psi_h.inverse()?;
    let (n, val) = (inv.target_dim(), pair.psi_g.target_dim());
    let mut out = Cochain::zero(c.degree, n, val);
    if c.degree == 1 {
        for v in 0..n {
            let w = pair.psi_g.apply(&c.eval1(&inv.image(v)));
            out.f[v * val..(v + 1) * val].clone_from_slice(&w);
        }
        return Ok(out);
    }
    let l2 = lambda2(inv.matrix());
    let cols: Vec<Vector> = (0..l2.cols()).map(|k| l2.col(k)).collect();
    for t in tuples(pair_count(n), c.degree - 1) {
        let args: Vec<&[Rational]> = t.iter().map(|&k| cols[k].as_slice()).collect();
        let w = pair.psi_g.apply(&c.eval_f(&args));
        out.f_mut(&t).clone_from_slice(&w);
        for z in 0..n {
            let w = pair.psi_g.apply(&c.eval_g(&args, &inv.image(z)));
            out.g_mut(&t, z).clone_from_slice(&w);
        }
    }
    Ok(out)
}
