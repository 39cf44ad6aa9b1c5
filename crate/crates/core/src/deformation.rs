//! Linear and order-n deformations of weight-1 relative Rota-Baxter operators,
//! equivalence of linear deformations, obstruction classes and the extension
//! solver.
//!
//! Polynomials in the formal parameter `t` are coefficient lists
//! (`series[k]` is the coefficient of `t^k`) truncated at a working degree.

use serde::Serialize;

use crate::algebra::LinearMap;
use crate::cohomology::{pair_count, pairs, Cochain, TComplex};
use crate::error::{dim_check, LyaError, Result};
use crate::linalg::{add_vec, dot, is_zero_vec, sub_vec, zero_vec, Matrix, Vector};
use crate::rational::Rational;
use crate::rep::RepAction;
use crate::report::{CheckOptions, Report};
use crate::rrb::RrbOperator;
use crate::tensor::{Bilinear, Trilinear};

type Series = Vec<Vector>;

fn constant(v: &[Rational], deg: usize, dim: usize) -> Series {
    let mut s = vec![zero_vec(dim); deg + 1];
    s[0] = v.to_vec();
    s
}

fn combine(a: &Series, b: &Series, f: impl Fn(&[Rational], &[Rational]) -> Vector) -> Series {
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

/// `(Σ A_i t^i)(Σ v_j t^j)`
fn apply_series(maps: &[LinearMap], s: &Series, deg: usize) -> Series {
    let dim = maps[0].target_dim();
    let mut out = vec![zero_vec(dim); deg + 1];
    for (i, a) in maps.iter().enumerate() {
        for (j, v) in s.iter().enumerate() {
            if i + j <= deg && !is_zero_vec(v) {
                out[i + j] = add_vec(&out[i + j], &a.apply(v));
            }
        }
    }
    out
}

fn bilinear_series(
    a: &Series,
    b: &Series,
    deg: usize,
    dim: usize,
    f: impl Fn(&[Rational], &[Rational]) -> Vector,
) -> Series {
    let mut out = vec![zero_vec(dim); deg + 1];
    for (i, x) in a.iter().enumerate() {
        if is_zero_vec(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j <= deg && !is_zero_vec(y) {
                out[i + j] = add_vec(&out[i + j], &f(x, y));
            }
        }
    }
    out
}

fn trilinear_series(
    a: &Series,
    b: &Series,
    c: &Series,
    deg: usize,
    dim: usize,
    f: impl Fn(&[Rational], &[Rational], &[Rational]) -> Vector,
) -> Series {
    let mut out = vec![zero_vec(dim); deg + 1];
    for (i, x) in a.iter().enumerate() {
        if is_zero_vec(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j > deg || is_zero_vec(y) {
                continue;
            }
            for (k, z) in c.iter().enumerate() {
                if i + j + k <= deg && !is_zero_vec(z) {
                    out[i + j + k] = add_vec(&out[i + j + k], &f(x, y, z));
                }
            }
        }
    }
    out
}

fn check_shapes(action: &RepAction, terms: &[LinearMap]) -> Result<()> {
    if terms.is_empty() {
        return Err(LyaError::InvalidDeformation("no terms".into()));
    }
    for (i, t) in terms.iter().enumerate() {
        dim_check(&format!("term {i} source"), action.n(), t.source_dim())?;
        dim_check(&format!("term {i} target"), action.m(), t.target_dim())?;
    }
    Ok(())
}

/// Coefficients up to `t^deg` of `[T_t u, T_t v] − T_t(ρ(T_t u)v − ρ(T_t v)u + [u,v]_h)`
/// for `T_t = Σ terms[i] t^i`.
pub fn binary_residual_series(
    action: &RepAction,
    terms: &[LinearMap],
    deg: usize,
    u: &[Rational],
    v: &[Rational],
) -> Vec<Vector> {
    let (g, h) = (action.acting(), action.carrier());
    let (m, n) = (g.dim(), h.dim());
    let tu = apply_series(terms, &constant(u, deg, n), deg);
    let tv = apply_series(terms, &constant(v, deg, n), deg);
    let lhs = bilinear_series(&tu, &tv, deg, m, |x, y| g.br(x, y));
    let a = bilinear_series(&tu, &constant(v, deg, n), deg, n, |x, w| action.rho_apply(x, w));
    let b = bilinear_series(&tv, &constant(u, deg, n), deg, n, |x, w| action.rho_apply(x, w));
    let mut inner = combine(&a, &b, sub_vec);
    inner[0] = add_vec(&inner[0], &h.br(u, v));
    combine(&lhs, &apply_series(terms, &inner, deg), sub_vec)
}

/// Coefficients up to `t^deg` of
/// `⟨T_t u, T_t v, T_t w⟩ − T_t(D(T_t u, T_t v)w + μ(T_t v, T_t w)u − μ(T_t u, T_t w)v + ⟨u,v,w⟩_h)`.
pub fn ternary_residual_series(
    action: &RepAction,
    terms: &[LinearMap],
    deg: usize,
    u: &[Rational],
    v: &[Rational],
    w: &[Rational],
) -> Vec<Vector> {
    let (g, h) = (action.acting(), action.carrier());
    let (m, n) = (g.dim(), h.dim());
    let tu = apply_series(terms, &constant(u, deg, n), deg);
    let tv = apply_series(terms, &constant(v, deg, n), deg);
    let tw = apply_series(terms, &constant(w, deg, n), deg);
    let lhs = trilinear_series(&tu, &tv, &tw, deg, m, |x, y, z| g.tr(x, y, z));
    let d = bilinear_series(&tu, &tv, deg, n, |x, y| action.d_apply(x, y, w));
    let mu1 = bilinear_series(&tv, &tw, deg, n, |x, y| action.mu_apply(x, y, u));
    let mu2 = bilinear_series(&tu, &tw, deg, n, |x, y| action.mu_apply(x, y, v));
    let mut inner = combine(&combine(&d, &mu1, add_vec), &mu2, sub_vec);
    inner[0] = add_vec(&inner[0], &h.tr(u, v, w));
    combine(&lhs, &apply_series(terms, &inner, deg), sub_vec)
}

fn tag(id: &str, k: usize) -> String {
    format!("{id}[t^{k}]")
}

/// Records every coefficient `t^lo..=t^hi` of both identities on all basis
/// tuples under `{prefix}.binary[t^k]` and `{prefix}.ternary[t^k]`.
fn check_coefficients(
    r: &mut Report,
    prefix: &str,
    action: &RepAction,
    terms: &[LinearMap],
    lo: usize,
    (hi_bin, hi_ter): (usize, usize),
) {
    let h = action.carrier();
    let n = h.dim();
    let bin: Vec<Series> = (0..n * n)
        .map(|ix| binary_residual_series(action, terms, hi_bin, &h.e(ix / n), &h.e(ix % n)))
        .collect();
    for k in lo..=hi_bin {
        r.check_tuples(&tag(&format!("{prefix}.binary"), k), &[n, n], |t| {
            bin[t[0] * n + t[1]][k].clone()
        });
    }
    let ter: Vec<Series> = (0..n * n * n)
        .map(|ix| {
            let (a, b, c) = (ix / (n * n), (ix / n) % n, ix % n);
            ternary_residual_series(action, terms, hi_ter, &h.e(a), &h.e(b), &h.e(c))
        })
        .collect();
    for k in lo..=hi_ter {
        r.check_tuples(&tag(&format!("{prefix}.ternary"), k), &[n, n, n], |t| {
            ter[(t[0] * n + t[1]) * n + t[2]][k].clone()
        });
    }
}

/// Whether `T + t𝔗` satisfies both identities for every `t`: each coefficient
/// (`t¹, t²` binary; `t¹, t², t³` ternary) is reported separately. The data
/// records whether the `t¹` coefficient vanishes, whether `𝔗` is a 1-cocycle of
/// `T`, and whether the `t¹` coefficient equals `δ^T 𝔗` as a 2-cochain.
pub fn check_linear_deformation(op: &RrbOperator, frak: &LinearMap, opts: CheckOptions) -> Result<Report> {
    op.ensure_verified()?;
    let terms = [op.map().clone(), frak.clone()];
    check_shapes(op.action(), &terms)?;
    let mut r = Report::new("linear deformation", opts);
    check_coefficients(&mut r, "linear", op.action(), &terms, 1, (2, 3));
    let t1 = r.equation_passed("linear.binary[t^1]") == Some(true)
        && r.equation_passed("linear.ternary[t^1]") == Some(true);
    let cx = TComplex::new(op.clone())?;
    let d = cx.coboundary(&Cochain::from_map(frak))?;
    let t1_cochain = first_order_cochain(op, frak);
    r.set("t1_vanishes", t1);
    r.set("is_cocycle", d.is_zero());
    r.set("t1_equals_coboundary", t1_cochain == d);
    Ok(r)
}

/// The `t¹` coefficient of both identities for `T + t𝔗`, as a 2-cochain.
fn first_order_cochain(op: &RrbOperator, frak: &LinearMap) -> Cochain {
    let terms = [op.map().clone(), frak.clone()];
    let h = op.h();
    let (n, m) = (h.dim(), op.g().dim());
    let mut coords = Vec::new();
    let pr = pairs(n);
    for &(a, b) in &pr {
        coords.extend(binary_residual_series(op.action(), &terms, 1, &h.e(a), &h.e(b))[1].clone());
    }
    for &(a, b) in &pr {
        for z in 0..n {
            coords.extend(
                ternary_residual_series(op.action(), &terms, 1, &h.e(a), &h.e(b), &h.e(z))[1].clone(),
            );
        }
    }
    Cochain::from_coords(2, n, m, &coords).expect("coordinates sized from the layout")
}

/// `𝔏(X) = ⟨X, ·⟩_g` for `X` in pair coordinates of `∧²g`.
pub fn left_ternary(op: &RrbOperator, x: &[Rational]) -> LinearMap {
    let g = op.g();
    let m = g.dim();
    let mut out = Matrix::zeros(m, m);
    for (k, (a, b)) in pairs(m).into_iter().enumerate() {
        if !x[k].is_zero() {
            let l = Matrix::from_cols(&(0..m).map(|z| g.ternary().at(a, b, z).clone()).collect::<Vec<_>>(), m)
                .expect("g-sized columns");
            out.add_scaled(&x[k], &l);
        }
    }
    LinearMap::new(out)
}

/// `D(X)` on `h` for `X` in pair coordinates of `∧²g`.
pub fn d_of(op: &RrbOperator, x: &[Rational]) -> LinearMap {
    let (m, n) = (op.g().dim(), op.h().dim());
    let mut out = Matrix::zeros(n, n);
    for (k, (a, b)) in pairs(m).into_iter().enumerate() {
        if !x[k].is_zero() {
            out.add_scaled(&x[k], op.action().d_e(a, b));
        }
    }
    LinearMap::new(out)
}

/// Whether `(Id_g + t𝔏(X), Id_h + tD(X))` is a homomorphism from `T + t𝔗₂` to
/// `T + t𝔗₁`, every coefficient of every homomorphism condition reported
/// separately; `equiv.difference_is_boundary` checks `𝔗₂ − 𝔗₁ = ∂(X)`.
pub fn check_equivalence(
    op: &RrbOperator,
    frak1: &LinearMap,
    frak2: &LinearMap,
    x: &[Rational],
    opts: CheckOptions,
) -> Result<Report> {
    op.ensure_verified()?;
    let (g, h, a) = (op.g(), op.h(), op.action());
    let (m, n) = (g.dim(), h.dim());
    dim_check("element of the exterior square", pair_count(m), x.len())?;
    for (i, f) in [frak1, frak2].into_iter().enumerate() {
        let lin = check_linear_deformation(op, f, CheckOptions::first_only())?;
        if !lin.passed() {
            return Err(LyaError::InvalidDeformation(format!(
                "term {} does not generate a linear deformation",
                i + 1
            )));
        }
    }
    let psi_g = [LinearMap::identity(m), left_ternary(op, x)];
    let psi_h = [LinearMap::identity(n), d_of(op, x)];
    let from = [op.map().clone(), frak2.clone()];
    let to = [op.map().clone(), frak1.clone()];
    let mut r = Report::new("equivalence of linear deformations", opts);

    let cg = |i: usize, deg: usize| constant(&g.e(i), deg, m);
    let ch = |i: usize, deg: usize| constant(&h.e(i), deg, n);
    let record = |r: &mut Report, id: &str, ranges: &[usize], deg: usize, f: &dyn Fn(&[usize]) -> Series| {
        let total: usize = ranges.iter().product();
        let mut table = Vec::with_capacity(total);
        let mut idx = vec![0; ranges.len()];
        for flat in 0..total {
            let mut rem = flat;
            for p in (0..ranges.len()).rev() {
                idx[p] = rem % ranges[p];
                rem /= ranges[p];
            }
            table.push(f(&idx));
        }
        for k in 0..=deg {
            r.check_tuples(&tag(id, k), ranges, |t| {
                let flat = t.iter().zip(ranges).fold(0, |acc, (i, r)| acc * r + i);
                table[flat][k].clone()
            });
        }
    };

    record(&mut r, "equiv.psi_g_binary", &[m, m], 2, &|t| {
        let lhs = apply_series(&psi_g, &constant(g.binary().at(t[0], t[1]), 2, m), 2);
        let (x1, y1) = (apply_series(&psi_g, &cg(t[0], 2), 2), apply_series(&psi_g, &cg(t[1], 2), 2));
        combine(&lhs, &bilinear_series(&x1, &y1, 2, m, |p, q| g.br(p, q)), sub_vec)
    });
    record(&mut r, "equiv.psi_g_ternary", &[m, m, m], 3, &|t| {
        let lhs = apply_series(&psi_g, &constant(g.ternary().at(t[0], t[1], t[2]), 3, m), 3);
        let v: Vec<Series> = t.iter().map(|&i| apply_series(&psi_g, &cg(i, 3), 3)).collect();
        combine(&lhs, &trilinear_series(&v[0], &v[1], &v[2], 3, m, |p, q, s| g.tr(p, q, s)), sub_vec)
    });
    record(&mut r, "equiv.psi_h_binary", &[n, n], 2, &|t| {
        let lhs = apply_series(&psi_h, &constant(h.binary().at(t[0], t[1]), 2, n), 2);
        let (x1, y1) = (apply_series(&psi_h, &ch(t[0], 2), 2), apply_series(&psi_h, &ch(t[1], 2), 2));
        combine(&lhs, &bilinear_series(&x1, &y1, 2, n, |p, q| h.br(p, q)), sub_vec)
    });
    record(&mut r, "equiv.psi_h_ternary", &[n, n, n], 3, &|t| {
        let lhs = apply_series(&psi_h, &constant(h.ternary().at(t[0], t[1], t[2]), 3, n), 3);
        let v: Vec<Series> = t.iter().map(|&i| apply_series(&psi_h, &ch(i, 3), 3)).collect();
        combine(&lhs, &trilinear_series(&v[0], &v[1], &v[2], 3, n, |p, q, s| h.tr(p, q, s)), sub_vec)
    });
    record(&mut r, "equiv.intertwines_operator", &[n], 2, &|t| {
        let lhs = apply_series(&psi_g, &apply_series(&from, &ch(t[0], 2), 2), 2);
        let rhs = apply_series(&to, &apply_series(&psi_h, &ch(t[0], 2), 2), 2);
        combine(&lhs, &rhs, sub_vec)
    });
    record(&mut r, "equiv.rho_equivariant", &[m, n], 2, &|t| {
        let lhs = apply_series(&psi_h, &constant(&a.rho_e(t[0]).col(t[1]), 2, n), 2);
        let (x1, u1) = (apply_series(&psi_g, &cg(t[0], 2), 2), apply_series(&psi_h, &ch(t[1], 2), 2));
        combine(&lhs, &bilinear_series(&x1, &u1, 2, n, |p, q| a.rho_apply(p, q)), sub_vec)
    });
    record(&mut r, "equiv.mu_equivariant", &[m, m, n], 3, &|t| {
        let lhs = apply_series(&psi_h, &constant(&a.mu_e(t[0], t[1]).col(t[2]), 3, n), 3);
        let x1 = apply_series(&psi_g, &cg(t[0], 3), 3);
        let y1 = apply_series(&psi_g, &cg(t[1], 3), 3);
        let u1 = apply_series(&psi_h, &ch(t[2], 3), 3);
        let rhs = trilinear_series(&x1, &y1, &u1, 3, n, |p, q, s| a.mu_apply(p, q, s));
        combine(&lhs, &rhs, sub_vec)
    });

    let cx = TComplex::new(op.clone())?;
    let boundary = cx.zero_cochain_map(x)?.to_map()?;
    let diff = frak2.sub(frak1);
    r.check_tuples("equiv.difference_is_boundary", &[n], |t| {
        sub_vec(&diff.image(t[0]), &boundary.image(t[0]))
    });
    Ok(r)
}

/// Outcome of [`difference_class`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum DifferenceClass {
    /// `𝔗₂ − 𝔗₁ = ∂(x)` for the given `x ∈ ∧²g` (pair coordinates).
    Cohomologous { x: Vector },
    /// `yᵀ∂ = 0` while `yᵀ(𝔗₂ − 𝔗₁) ≠ 0`.
    NotCohomologous { certificate: Vector },
}

/// Solves `∂(X) = 𝔗₂ − 𝔗₁` over `∧²g`.
pub fn difference_class(op: &RrbOperator, frak1: &LinearMap, frak2: &LinearMap) -> Result<DifferenceClass> {
    let cx = TComplex::new(op.clone())?;
    let rhs = Cochain::from_map(&frak2.sub(frak1)).coords();
    let del = cx.coboundary_matrix(0)?;
    match del.solve(&rhs) {
        Ok(x) => Ok(DifferenceClass::Cohomologous { x }),
        Err(LyaError::Inconsistent) => Ok(DifferenceClass::NotCohomologous {
            certificate: del.inconsistency_certificate(&rhs).expect("inconsistent system has a certificate"),
        }),
        Err(e) => Err(e),
    }
}

/// `T_t = T + 𝔗₁t + … + 𝔗_n t^n`.
#[derive(Clone, Debug)]
pub struct OrderNDeformation {
    base: RrbOperator,
    terms: Vec<LinearMap>,
}

impl OrderNDeformation {
    /// Requires a verified base; the terms are only shape-checked.
    pub fn new(base: RrbOperator, terms: Vec<LinearMap>) -> Result<Self> {
        base.ensure_verified()?;
        for (i, t) in terms.iter().enumerate() {
            dim_check(&format!("term {} source", i + 1), base.h().dim(), t.source_dim())?;
            dim_check(&format!("term {} target", i + 1), base.g().dim(), t.target_dim())?;
        }
        Ok(OrderNDeformation { base, terms })
    }

    pub fn base(&self) -> &RrbOperator {
        &self.base
    }

    pub fn terms(&self) -> &[LinearMap] {
        &self.terms
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `[T, 𝔗₁, …, 𝔗_n]`
    pub fn all_terms(&self) -> Vec<LinearMap> {
        let mut v = vec![self.base.map().clone()];
        v.extend(self.terms.iter().cloned());
        v
    }

    /// The order-(n+1) deformation with `𝔗_{n+1} = next`.
    pub fn extended(&self, next: LinearMap) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.push(next);
        Self::new(self.base.clone(), terms)
    }

    /// Both identities modulo `t^(n+1)`, coefficients `t¹..tⁿ` on all basis
    /// tuples; order 0 is the operator check itself.
    pub fn check_order_n(&self, opts: CheckOptions) -> Report {
        if self.terms.is_empty() {
            return self.base.check_rrb(opts);
        }
        let n = self.order();
        let mut r = Report::new(format!("order {n} deformation"), opts);
        check_coefficients(&mut r, "order", self.base.action(), &self.all_terms(), 1, (n, n));
        r
    }

    /// `Ob = (Ob_I, Ob_II)`: the `t^(n+1)` coefficients of both identities
    /// restricted to products whose indices all lie in `0..=n`, so that the
    /// full coefficient after adding `𝔗_{n+1}t^(n+1)` is `Ob + δ^T 𝔗_{n+1}`.
    pub fn obstruction_class(&self) -> Result<ObstructionClass> {
        let check = self.check_order_n(CheckOptions::first_only());
        if !check.passed() {
            return Err(LyaError::InvalidDeformation(format!(
                "not an order-{} deformation: {}",
                self.order(),
                check.failing_equations().join(", ")
            )));
        }
        let (a, g, h) = (self.base.action(), self.base.g(), self.base.h());
        let (m, n) = (g.dim(), h.dim());
        let terms = self.all_terms();
        let top = self.order() + 1;
        let img = |i: usize, v: &[Rational]| terms[i].apply(v);
        let idx = 0..terms.len();

        let ob_i = Bilinear::from_fn(n, m, |p, q| {
            let (u, v) = (h.e(p), h.e(q));
            let mut acc = zero_vec(m);
            for i in idx.clone().filter(|&i| i >= 1 && top - i < terms.len() && top - i >= 1) {
                let j = top - i;
                acc = add_vec(&acc, &g.br(&img(i, &u), &img(j, &v)));
                let inner = sub_vec(&a.rho_apply(&img(j, &u), &v), &a.rho_apply(&img(j, &v), &u));
                acc = sub_vec(&acc, &img(i, &inner));
            }
            acc
        });
        let ob_ii = Trilinear::from_fn(n, m, |p, q, s| {
            let (u, v, w) = (h.e(p), h.e(q), h.e(s));
            let mut acc = zero_vec(m);
            for i in idx.clone() {
                for j in idx.clone() {
                    let Some(k) = top.checked_sub(i + j).filter(|&k| k < terms.len()) else {
                        continue;
                    };
                    acc = add_vec(&acc, &g.tr(&img(i, &u), &img(j, &v), &img(k, &w)));
                    // 𝔗_i(D(𝔗_j u, 𝔗_k v)w + μ(𝔗_j v, 𝔗_k w)u − μ(𝔗_j u, 𝔗_k w)v)
                    let mut inner = a.d_apply(&img(j, &u), &img(k, &v), &w);
                    inner = add_vec(&inner, &a.mu_apply(&img(j, &v), &img(k, &w), &u));
                    inner = sub_vec(&inner, &a.mu_apply(&img(j, &u), &img(k, &w), &v));
                    acc = sub_vec(&acc, &img(i, &inner));
                }
            }
            acc
        });

        let mut coords = Vec::new();
        for (p, q) in pairs(n) {
            coords.extend(ob_i.at(p, q).iter().cloned());
        }
        for (p, q) in pairs(n) {
            for s in 0..n {
                coords.extend(ob_ii.at(p, q, s).iter().cloned());
            }
        }
        let as_cochain = Cochain::from_coords(2, n, m, &coords)?;
        let cx = TComplex::new(self.base.clone())?;
        let is_cocycle = cx.coboundary(&as_cochain)?.is_zero();
        Ok(ObstructionClass {
            ob_i,
            ob_ii,
            as_cochain,
            is_cocycle,
        })
    }

    /// Solves `δ^T 𝔗_{n+1} = −Ob`.
    pub fn extend(&self) -> Result<Extension> {
        let ob = self.obstruction_class()?;
        let cx = TComplex::new(self.base.clone())?;
        let d1 = cx.coboundary_matrix(1)?;
        let rhs: Vector = ob.as_cochain.coords().iter().map(|c| -c).collect();
        match d1.solve(&rhs) {
            Ok(x) => {
                let (n, m) = (cx.h_dim(), cx.g_dim());
                let next = Cochain::from_coords(1, n, m, &x)?.to_map()?;
                Ok(Extension::Extended { next })
            }
            Err(LyaError::Inconsistent) => Ok(Extension::NotExtendable {
                certificate: d1.inconsistency_certificate(&rhs).expect("inconsistent system has a certificate"),
                rhs,
            }),
            Err(e) => Err(e),
        }
    }
}

/// `[Ob^T]` together with its cocycle check.
#[derive(Clone, Debug)]
pub struct ObstructionClass {
    pub ob_i: Bilinear,
    pub ob_ii: Trilinear,
    pub as_cochain: Cochain,
    /// `δ^T(Ob) = 0`
    pub is_cocycle: bool,
}

/// Outcome of [`OrderNDeformation::extend`].
#[derive(Clone, Debug)]
pub enum Extension {
    Extended { next: LinearMap },
    /// `certificate` satisfies `certificateᵀ·δ¹ = 0` and `certificateᵀ·rhs ≠ 0`
    /// with `rhs = −Ob`, so `[Ob] ≠ 0` in `H²_T`.
    NotExtendable { certificate: Vector, rhs: Vector },
}

/// Checks an inconsistency certificate `y` for `A·x = b`: `yᵀA = 0`, `yᵀb ≠ 0`.
pub fn certificate_holds(a: &Matrix, b: &[Rational], y: &[Rational]) -> bool {
    y.len() == a.rows()
        && is_zero_vec(&a.transpose().apply(y))
        && !dot(y, b).is_zero()
}
