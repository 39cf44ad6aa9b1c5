//! Representations `(ρ, μ)` of a Lie-Yamaguti algebra, actions, and
//! semidirect products.

use crate::algebra::LyAlgebra;
use crate::error::{dim_check, LyaError, Result};
use crate::linalg::{add_vec, axpy, zero_vec, Matrix, Subspace, Vector};
use crate::rational::Rational;
use crate::report::{CheckOptions, Report};
use crate::tensor::{Bilinear, Trilinear};

/// A representation of `acting` on the vector space underlying `carrier`.
///
/// `mu[i * m + j]` is `μ(e_i, e_j)`; `d` caches the derived map
/// `D(x, y) = μ(y, x) − μ(x, y) + [ρ(x), ρ(y)] − ρ([x, y])`.
#[derive(Clone, Debug)]
pub struct RepAction {
    acting: LyAlgebra,
    carrier: LyAlgebra,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
    d: Vec<Matrix>,
    action_certified: bool,
}

impl RepAction {
    pub fn new(
        acting: LyAlgebra,
        carrier: LyAlgebra,
        rho: Vec<Matrix>,
        mu: Vec<Matrix>,
    ) -> Result<Self> {
        let m = acting.dim();
        let n = carrier.dim();
        dim_check("rho length", m, rho.len())?;
        dim_check("mu length", m * m, mu.len())?;
        for (i, r) in rho.iter().chain(mu.iter()).enumerate() {
            if r.rows() != n || r.cols() != n {
                return Err(LyaError::ShapeMismatch(format!(
                    "operator #{i} is {}x{}, expected {n}x{n}",
                    r.rows(),
                    r.cols()
                )));
            }
        }
        let d = derive_d(&acting, &rho, &mu);
        Ok(RepAction {
            acting,
            carrier,
            rho,
            mu,
            d,
            action_certified: false,
        })
    }

    /// The zero representation.
    pub fn zero(acting: LyAlgebra, carrier: LyAlgebra) -> Self {
        let (m, n) = (acting.dim(), carrier.dim());
        Self::new(
            acting,
            carrier,
            vec![Matrix::zeros(n, n); m],
            vec![Matrix::zeros(n, n); m * m],
        )
        .expect("zero operators have the right shape")
    }

    pub fn acting(&self) -> &LyAlgebra {
        &self.acting
    }

    pub fn carrier(&self) -> &LyAlgebra {
        &self.carrier
    }

    pub fn m(&self) -> usize {
        self.acting.dim()
    }

    pub fn n(&self) -> usize {
        self.carrier.dim()
    }

    pub fn rho_e(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn mu_e(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[i * self.m() + j]
    }

    pub fn d_e(&self, i: usize, j: usize) -> &Matrix {
        &self.d[i * self.m() + j]
    }

    pub fn rho_list(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn mu_list(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn d_list(&self) -> &[Matrix] {
        &self.d
    }

    pub fn is_action_certified(&self) -> bool {
        self.action_certified
    }

    /// `ρ(x)`
    pub fn rho(&self, x: &[Rational]) -> Matrix {
        lin_comb(&self.rho, x, self.n())
    }

    /// `μ(x, y)`
    pub fn mu(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        bilin_comb(&self.mu, x, y, self.m(), self.n())
    }

    /// `D(x, y)`
    pub fn d(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        bilin_comb(&self.d, x, y, self.m(), self.n())
    }

    /// `ρ(x)v` without materializing the matrix.
    pub fn rho_apply(&self, x: &[Rational], v: &[Rational]) -> Vector {
        let mut acc = zero_vec(self.n());
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                axpy(&mut acc, xi, &self.rho[i].apply(v));
            }
        }
        acc
    }

    pub fn mu_apply(&self, x: &[Rational], y: &[Rational], v: &[Rational]) -> Vector {
        bilin_apply(&self.mu, x, y, v, self.m(), self.n())
    }

    pub fn d_apply(&self, x: &[Rational], y: &[Rational], v: &[Rational]) -> Vector {
        bilin_apply(&self.d, x, y, v, self.m(), self.n())
    }

    /// Recomputes `D` from `(ρ, μ)`.
    pub fn derive_d(&self) -> Vec<Matrix> {
        derive_d(&self.acting, &self.rho, &self.mu)
    }

    /// The five representation identities on all basis tuples, plus a
    /// consistency check of the cached `D`.
    pub fn check_representation(&self, opts: CheckOptions) -> Report {
        let m = self.m();
        let g = &self.acting;
        let mut r = Report::new(
            format!("representation of {} on {}", g.name(), self.carrier.name()),
            opts,
        );
        let fresh = self.derive_d();
        r.check_tuples("rep.derived_map_cache", &[m, m], |ix| {
            let k = ix[0] * m + ix[1];
            flat(&self.d[k].sub(&fresh[k]))
        });

        // μ([x,y],z) − μ(x,z)ρ(y) + μ(y,z)ρ(x) = 0
        r.check_tuples("rep.mu_bracket_first", &[m, m, m], |ix| {
            let (x, y, z) = (ix[0], ix[1], ix[2]);
            let ez = g.e(z);
            let mut acc = self.mu(g.binary().at(x, y), &ez);
            acc = acc.sub(&self.mu_e(x, z).mul(&self.rho[y]));
            acc = acc.add(&self.mu_e(y, z).mul(&self.rho[x]));
            flat(&acc)
        });
        // μ(x,[y,z]) − ρ(y)μ(x,z) + ρ(z)μ(x,y) = 0
        r.check_tuples("rep.mu_bracket_second", &[m, m, m], |ix| {
            let (x, y, z) = (ix[0], ix[1], ix[2]);
            let mut acc = self.mu(&g.e(x), g.binary().at(y, z));
            acc = acc.sub(&self.rho[y].mul(self.mu_e(x, z)));
            acc = acc.add(&self.rho[z].mul(self.mu_e(x, y)));
            flat(&acc)
        });
        // ρ(⟨x,y,z⟩) = [D(x,y), ρ(z)]
        r.check_tuples("rep.rho_ternary", &[m, m, m], |ix| {
            let (x, y, z) = (ix[0], ix[1], ix[2]);
            let lhs = self.rho(g.ternary().at(x, y, z));
            flat(&lhs.sub(&self.d_e(x, y).commutator(&self.rho[z])))
        });
        // μ(z,w)μ(x,y) − μ(y,w)μ(x,z) − μ(x,⟨y,z,w⟩) + D(y,z)μ(x,w) = 0
        r.check_tuples("rep.mu_quadratic", &[m, m, m, m], |ix| {
            let (x, y, z, w) = (ix[0], ix[1], ix[2], ix[3]);
            let mut acc = self.mu_e(z, w).mul(self.mu_e(x, y));
            acc = acc.sub(&self.mu_e(y, w).mul(self.mu_e(x, z)));
            acc = acc.sub(&self.mu(&g.e(x), g.ternary().at(y, z, w)));
            acc = acc.add(&self.d_e(y, z).mul(self.mu_e(x, w)));
            flat(&acc)
        });
        // μ(⟨x,y,z⟩,w) + μ(z,⟨x,y,w⟩) = [D(x,y), μ(z,w)]
        r.check_tuples("rep.mu_ternary", &[m, m, m, m], |ix| {
            let (x, y, z, w) = (ix[0], ix[1], ix[2], ix[3]);
            let lhs = self
                .mu(g.ternary().at(x, y, z), &g.e(w))
                .add(&self.mu(&g.e(z), g.ternary().at(x, y, w)));
            flat(&lhs.sub(&self.d_e(x, y).commutator(self.mu_e(z, w))))
        });
        r
    }

    /// Identities that follow from the representation axioms.
    pub fn check_lemma_identities(&self, opts: CheckOptions) -> Report {
        let m = self.m();
        let g = &self.acting;
        let mut r = Report::new("derived representation identities", opts);
        // D([x,y],z) + c.p. = 0
        r.check_tuples("lemma.d_cyclic", &[m, m, m], |ix| {
            let (x, y, z) = (ix[0], ix[1], ix[2]);
            let mut acc = Matrix::zeros(self.n(), self.n());
            for (p, q, s) in [(x, y, z), (y, z, x), (z, x, y)] {
                acc = acc.add(&self.d(g.binary().at(p, q), &g.e(s)));
            }
            flat(&acc)
        });
        // D(⟨x,y,z⟩,w) + D(z,⟨x,y,w⟩) = [D(x,y), D(z,w)]
        r.check_tuples("lemma.d_ternary", &[m, m, m, m], |ix| {
            let (x, y, z, w) = (ix[0], ix[1], ix[2], ix[3]);
            let lhs = self
                .d(g.ternary().at(x, y, z), &g.e(w))
                .add(&self.d(&g.e(z), g.ternary().at(x, y, w)));
            flat(&lhs.sub(&self.d_e(x, y).commutator(self.d_e(z, w))))
        });
        // μ(⟨x,y,z⟩,w) = μ(x,w)μ(z,y) − μ(y,w)μ(z,x) − μ(z,w)D(x,y)
        r.check_tuples("lemma.mu_ternary_expansion", &[m, m, m, m], |ix| {
            let (x, y, z, w) = (ix[0], ix[1], ix[2], ix[3]);
            let lhs = self.mu(g.ternary().at(x, y, z), &g.e(w));
            let rhs = self
                .mu_e(x, w)
                .mul(self.mu_e(z, y))
                .sub(&self.mu_e(y, w).mul(self.mu_e(z, x)))
                .sub(&self.mu_e(z, w).mul(self.d_e(x, y)));
            flat(&lhs.sub(&rhs))
        });
        r
    }

    /// Centrality and annihilation conditions making the representation an
    /// action on the algebra `carrier`, including the consequences for `D`.
    pub fn check_action(&self, opts: CheckOptions) -> Report {
        let (m, n) = (self.m(), self.n());
        let h = &self.carrier;
        let center = h.center();
        let mut r = Report::new(
            format!("action of {} on {}", self.acting.name(), h.name()),
            opts,
        );
        r.set("carrier_center_dim", center.dim());

        for (name, two) in [("rho", false), ("mu", true), ("d", true)] {
            let op = |i: usize, j: usize| -> &Matrix {
                match name {
                    "rho" => &self.rho[i],
                    "mu" => self.mu_e(i, j),
                    _ => self.d_e(i, j),
                }
            };
            let prefix: Vec<usize> = if two { vec![m, m] } else { vec![m] };
            let head = |ix: &[usize]| (ix[0], if two { ix[1] } else { 0 });
            let with = |extra: &[usize]| [prefix.as_slice(), extra].concat();
            r.check_tuples(&format!("action.{name}_central"), &with(&[n]), |ix| {
                let (i, j) = head(ix);
                center.residual(&op(i, j).col(ix[ix.len() - 1]))
            });
            r.check_tuples(&format!("action.{name}_kills_binary"), &with(&[n, n]), |ix| {
                let (i, j) = head(ix);
                let k = ix.len();
                op(i, j).apply(h.binary().at(ix[k - 2], ix[k - 1]))
            });
            r.check_tuples(&format!("action.{name}_kills_ternary"), &with(&[n, n, n]), |ix| {
                let (i, j) = head(ix);
                let k = ix.len();
                op(i, j).apply(h.ternary().at(ix[k - 3], ix[k - 2], ix[k - 1]))
            });
        }
        r
    }

    /// Checks the action conditions and sets the certification flag.
    pub fn certify(mut self, opts: CheckOptions) -> (Self, Report) {
        let mut r = self.check_representation(opts);
        r.absorb("", self.check_action(opts));
        r.subject = format!(
            "action of {} on {}",
            self.acting.name(),
            self.carrier.name()
        );
        self.action_certified = r.passed();
        (self, r)
    }

    /// Algebra on `g ⊕ h` (basis of `g` first):
    /// `[x+u, y+v] = [x,y] + ρ(x)v − ρ(y)u + [u,v]`,
    /// `⟨x+u, y+v, z+w⟩ = ⟨x,y,z⟩ + D(x,y)w + μ(y,z)u − μ(x,z)v + ⟨u,v,w⟩`.
    pub fn semidirect_product(&self) -> Result<LyAlgebra> {
        if !self.action_certified {
            return Err(LyaError::NotAnAction);
        }
        Ok(self.semidirect_unchecked())
    }

    pub(crate) fn semidirect_unchecked(&self) -> LyAlgebra {
        let (m, n) = (self.m(), self.n());
        let d = m + n;
        let g = &self.acting;
        let h = &self.carrier;
        let split = |v: &[Rational]| (v[..m].to_vec(), v[m..].to_vec());
        let join = |a: Vector, b: Vector| {
            let mut v = a;
            v.extend(b);
            v
        };
        let e = |i: usize| crate::linalg::unit_vec(d, i);
        let bin = Bilinear::from_fn(d, d, |i, j| {
            let (x, u) = split(&e(i));
            let (y, v) = split(&e(j));
            let top = g.br(&x, &y);
            let mut bot = self.rho_apply(&x, &v);
            bot = crate::linalg::sub_vec(&bot, &self.rho_apply(&y, &u));
            bot = add_vec(&bot, &h.br(&u, &v));
            join(top, bot)
        });
        let ter = Trilinear::from_fn(d, d, |i, j, k| {
            let (x, u) = split(&e(i));
            let (y, v) = split(&e(j));
            let (z, w) = split(&e(k));
            let top = g.tr(&x, &y, &z);
            let mut bot = self.d_apply(&x, &y, &w);
            bot = add_vec(&bot, &self.mu_apply(&y, &z, &u));
            bot = crate::linalg::sub_vec(&bot, &self.mu_apply(&x, &z, &v));
            bot = add_vec(&bot, &h.tr(&u, &v, &w));
            join(top, bot)
        });
        let alg = LyAlgebra::from_tensors(
            format!("{} x| {}", g.name(), h.name()),
            bin,
            ter,
        )
        .expect("semidirect brackets are antisymmetric");
        let names: Vec<String> = g
            .basis_names()
            .iter()
            .cloned()
            .chain(h.basis_names().iter().map(|s| format!("{s}'")))
            .collect();
        alg.with_basis_names(names).expect("one name per basis vector")
    }

    /// Same maps with a new carrier algebra structure (the vector space is kept).
    pub fn with_carrier(mut self, carrier: LyAlgebra) -> Result<Self> {
        dim_check("carrier dimension", self.n(), carrier.dim())?;
        self.carrier = carrier;
        self.action_certified = false;
        Ok(self)
    }
}

/// The adjoint representation: `ρ(x)z = [x, z]`, `μ(x, y)z = ⟨z, x, y⟩`.
pub fn adjoint_rep(a: &LyAlgebra) -> RepAction {
    let n = a.dim();
    let rho: Vec<Matrix> = (0..n).map(|i| a.binary().left_mult(&a.e(i))).collect();
    let mut mu = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let cols: Vec<Vector> = (0..n).map(|k| a.ternary().at(k, i, j).clone()).collect();
            mu.push(Matrix::from_cols(&cols, n).expect("square"));
        }
    }
    RepAction::new(a.clone(), a.clone(), rho, mu).expect("adjoint maps are square")
}

fn derive_d(g: &LyAlgebra, rho: &[Matrix], mu: &[Matrix]) -> Vec<Matrix> {
    let m = g.dim();
    let n = rho.first().map_or(0, |r| r.rows());
    let mut d = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let mut x = mu[j * m + i].sub(&mu[i * m + j]);
            x = x.add(&rho[i].commutator(&rho[j]));
            x = x.sub(&lin_comb(rho, g.binary().at(i, j), n));
            d.push(x);
        }
    }
    d
}

pub(crate) fn lin_comb(ops: &[Matrix], x: &[Rational], n: usize) -> Matrix {
    let mut acc = Matrix::zeros(n, n);
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            acc.add_scaled(xi, &ops[i]);
        }
    }
    acc
}

pub(crate) fn bilin_comb(ops: &[Matrix], x: &[Rational], y: &[Rational], m: usize, n: usize) -> Matrix {
    let mut acc = Matrix::zeros(n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                acc.add_scaled(&(xi * yj), &ops[i * m + j]);
            }
        }
    }
    acc
}

fn bilin_apply(
    ops: &[Matrix],
    x: &[Rational],
    y: &[Rational],
    v: &[Rational],
    m: usize,
    n: usize,
) -> Vector {
    let mut acc = zero_vec(n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                axpy(&mut acc, &(xi * yj), &ops[i * m + j].apply(v));
            }
        }
    }
    acc
}

pub(crate) fn flat(m: &Matrix) -> Vector {
    m.data().to_vec()
}

/// Subspace of `g ⊕ h` given by `{Tu + u}` for a map `T: h → g`.
pub fn graph_subspace(t: &Matrix) -> Subspace {
    let (n_g, n_h) = (t.rows(), t.cols());
    let vs: Vec<Vector> = (0..n_h)
        .map(|a| {
            let mut v = t.col(a);
            v.extend(crate::linalg::unit_vec(n_h, a));
            v
        })
        .collect();
    Subspace::from_vectors(n_g + n_h, &vs).expect("graph vectors have length dim g + dim h")
}
