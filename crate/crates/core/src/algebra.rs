//! Lie-Yamaguti algebras given by structure constants.

use crate::error::{dim_check, LyaError, Result};
use crate::linalg::{add_vec, sub_vec, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::rational::Rational;
use crate::report::{CheckOptions, Report};
use crate::tensor::{Bilinear, Trilinear};

/// A finite-dimensional algebra with an antisymmetric bracket `[x, y]` and a
/// ternary bracket `⟨x, y, z⟩` antisymmetric in its first two slots.
///
/// Antisymmetry is enforced at construction; the remaining axioms are
/// tracked by the `verified` tag.
#[derive(Clone, Debug)]
pub struct LyAlgebra {
    name: String,
    basis: Vec<String>,
    bin: Bilinear,
    ter: Trilinear,
    verified: bool,
}

impl PartialEq for LyAlgebra {
    /// Structural equality of the structure constants (names are ignored).
    fn eq(&self, other: &Self) -> bool {
        self.bin == other.bin && self.ter == other.ter
    }
}

impl LyAlgebra {
    /// Wraps structure tensors; the result is unverified.
    pub fn from_tensors(name: impl Into<String>, bin: Bilinear, ter: Trilinear) -> Result<Self> {
        let n = bin.n();
        dim_check("binary bracket output", n, bin.out())?;
        dim_check("ternary bracket arity", n, ter.n())?;
        dim_check("ternary bracket output", n, ter.out())?;
        if let Some((i, j)) = bin.is_antisymmetric() {
            return Err(LyaError::AxiomsFailed(format!(
                "binary bracket is not antisymmetric at ({i}, {j})"
            )));
        }
        if let Some((i, j, k)) = ter.is_antisymmetric_12() {
            return Err(LyaError::AxiomsFailed(format!(
                "ternary bracket is not antisymmetric in its first two slots at ({i}, {j}, {k})"
            )));
        }
        Ok(LyAlgebra {
            name: name.into(),
            basis: (1..=n).map(|i| format!("e{i}")).collect(),
            bin,
            ter,
            verified: false,
        })
    }

    /// Builds from sparse structure constants, completing antisymmetrically.
    /// `binary` holds `(i, j, k, c)` meaning `[e_i, e_j]` has `c` at `e_k`;
    /// `ternary` holds `(i, j, k, l, c)` for `⟨e_i, e_j, e_k⟩`.
    pub fn from_entries(
        name: impl Into<String>,
        dim: usize,
        binary: &[(usize, usize, usize, Rational)],
        ternary: &[(usize, usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let mut bin = Bilinear::zero(dim, dim);
        let mut ter = Trilinear::zero(dim, dim);
        for (i, j, k, c) in binary {
            let (i, j, k) = (*i, *j, *k);
            index_check("binary entry", dim, &[i, j, k])?;
            let what = || format!("binary entry ({i}, {j}, {k})");
            if antisym_ok(c, i == j, &bin.at(i, j)[k], &bin.at(j, i)[k], what)? {
                let mut w = bin.at(i, j).clone();
                w[k] = c.clone();
                bin.put(i, j, w);
                let mut w = bin.at(j, i).clone();
                w[k] = -c;
                bin.put(j, i, w);
            }
        }
        for (i, j, k, l, c) in ternary {
            let (i, j, k, l) = (*i, *j, *k, *l);
            index_check("ternary entry", dim, &[i, j, k, l])?;
            let what = || format!("ternary entry ({i}, {j}, {k}, {l})");
            if antisym_ok(c, i == j, &ter.at(i, j, k)[l], &ter.at(j, i, k)[l], what)? {
                let mut w = ter.at(i, j, k).clone();
                w[l] = c.clone();
                ter.put(i, j, k, w);
                let mut w = ter.at(j, i, k).clone();
                w[l] = -c;
                ter.put(j, i, k, w);
            }
        }
        Self::from_tensors(name, bin, ter)
    }

    pub fn abelian(dim: usize) -> Self {
        let mut a = Self::from_tensors(
            format!("abelian{dim}"),
            Bilinear::zero(dim, dim),
            Trilinear::zero(dim, dim),
        )
        .expect("zero tensors are antisymmetric");
        a.verified = true;
        a
    }

    /// The algebra of a Lie algebra with `⟨x, y, z⟩ = [[x, y], z]`.
    pub fn from_lie_algebra(
        name: impl Into<String>,
        dim: usize,
        binary: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let base = Self::from_entries("lie", dim, binary, &[])?;
        let b = &base.bin;
        for x in 0..dim {
            for y in 0..dim {
                for z in 0..dim {
                    let r = add_vec(
                        &add_vec(&b.eval(b.at(x, y), &unit_vec(dim, z)), &b.eval(b.at(y, z), &unit_vec(dim, x))),
                        &b.eval(b.at(z, x), &unit_vec(dim, y)),
                    );
                    if r.iter().any(|c| !c.is_zero()) {
                        return Err(LyaError::NotLieAlgebra {
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        let ter = Trilinear::from_fn(dim, dim, |i, j, k| b.eval(b.at(i, j), &unit_vec(dim, k)));
        let mut a = Self::from_tensors(name, base.bin, ter)?;
        let report = a.check_ly_axioms(CheckOptions::first_only());
        a.verified = report.passed();
        Ok(a)
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        dim_check("basis names", self.dim(), names.len())?;
        self.basis = names;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.bin.n()
    }

    pub fn binary(&self) -> &Bilinear {
        &self.bin
    }

    pub fn ternary(&self) -> &Trilinear {
        &self.ter
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn is_abelian(&self) -> bool {
        self.bin.is_zero() && self.ter.is_zero()
    }

    /// Runs the axiom check and sets the tag accordingly.
    pub fn verify(mut self) -> (Self, Report) {
        let r = self.check_ly_axioms(CheckOptions::default());
        self.verified = r.passed();
        (self, r)
    }

    /// Returns a verified copy or fails with the first violated axiom.
    pub fn ensure_verified(&self) -> Result<Self> {
        if self.verified {
            return Ok(self.clone());
        }
        let (a, r) = self.clone().verify();
        if a.verified {
            Ok(a)
        } else {
            Err(LyaError::AxiomsFailed(format!(
                "{}: {}",
                self.name,
                r.failing_equations().join(", ")
            )))
        }
    }

    pub fn bracket2(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        dim_check("bracket2 first argument", self.dim(), x.len())?;
        dim_check("bracket2 second argument", self.dim(), y.len())?;
        Ok(self.bin.eval(x, y))
    }

    pub fn bracket3(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vector> {
        dim_check("bracket3 first argument", self.dim(), x.len())?;
        dim_check("bracket3 second argument", self.dim(), y.len())?;
        dim_check("bracket3 third argument", self.dim(), z.len())?;
        Ok(self.ter.eval(x, y, z))
    }

    pub(crate) fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bin.eval(x, y)
    }

    pub(crate) fn tr(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.ter.eval(x, y, z)
    }

    pub fn e(&self, i: usize) -> Vector {
        unit_vec(self.dim(), i)
    }

    /// Evaluates the four defining identities on all basis tuples.
    pub fn check_ly_axioms(&self, opts: CheckOptions) -> Report {
        let n = self.dim();
        let mut r = Report::new(format!("Lie-Yamaguti axioms of {}", self.name), opts);
        let e = |i: usize| unit_vec(n, i);
        let b = &self.bin;
        let t = &self.ter;

        r.check_tuples("ly.jacobi", &[n, n, n], |ix| {
            let (x, y, z) = (ix[0], ix[1], ix[2]);
            let mut acc = zero_vec(n);
            for (p, q, s) in [(x, y, z), (y, z, x), (z, x, y)] {
                acc = add_vec(&acc, &b.eval(b.at(p, q), &e(s)));
                acc = add_vec(&acc, t.at(p, q, s));
            }
            acc
        });

        r.check_tuples("ly.ternary_cyclic", &[n, n, n, n], |ix| {
            let (x, y, z, w) = (ix[0], ix[1], ix[2], ix[3]);
            let mut acc = zero_vec(n);
            for (p, q, s) in [(x, y, z), (y, z, x), (z, x, y)] {
                acc = add_vec(&acc, &t.eval(b.at(p, q), &e(s), &e(w)));
            }
            acc
        });

        r.check_tuples("ly.ternary_derivation", &[n, n, n, n], |ix| {
            let (x, y, z, w) = (ix[0], ix[1], ix[2], ix[3]);
            let lhs = t.eval_ee(x, y, b.at(z, w));
            let rhs = add_vec(
                &b.eval(t.at(x, y, z), &e(w)),
                &b.eval(&e(z), t.at(x, y, w)),
            );
            sub_vec(&lhs, &rhs)
        });

        r.check_tuples("ly.fundamental", &[n, n, n, n, n], |ix| {
            let (x, y, z, w, s) = (ix[0], ix[1], ix[2], ix[3], ix[4]);
            let lhs = t.eval_ee(x, y, t.at(z, w, s));
            let mut rhs = t.eval(t.at(x, y, z), &e(w), &e(s));
            rhs = add_vec(&rhs, &t.eval(&e(z), t.at(x, y, w), &e(s)));
            rhs = add_vec(&rhs, &t.eval_ee(z, w, t.at(x, y, s)));
            sub_vec(&lhs, &rhs)
        });
        r
    }

    /// `{x : [x, y] = 0, ⟨x, y, z⟩ = 0, ⟨y, z, x⟩ = 0 for all y, z}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut rows: Vec<Vector> = Vec::new();
        // each row is a linear functional of the unknown x
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.bin.at(i, j)[k].clone()).collect());
            }
        }
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    rows.push((0..n).map(|i| self.ter.at(i, j, k)[l].clone()).collect());
                    rows.push((0..n).map(|i| self.ter.at(j, k, i)[l].clone()).collect());
                }
            }
        }
        Matrix::from_rows(&rows, n)
            .expect("rows have length dim")
            .nullspace()
    }

    pub fn binary_span(&self) -> Subspace {
        let vs: Vec<Vector> = self.bin.entries().map(|(_, _, v)| v.clone()).collect();
        Subspace::from_vectors(self.dim(), &vs).expect("bracket values have length dim")
    }

    pub fn ternary_span(&self) -> Subspace {
        let vs: Vec<Vector> = self.ter.entries().map(|(_, _, _, v)| v.clone()).collect();
        Subspace::from_vectors(self.dim(), &vs).expect("bracket values have length dim")
    }

    /// `[g, g] ∩ ⟨g, g, g⟩`.
    pub fn derived_algebra(&self) -> Subspace {
        self.binary_span()
            .intersect(&self.ternary_span())
            .expect("same ambient space")
    }

    /// Whether both brackets of basis vectors of `s` land back in `s`.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        for x in b {
            for y in b {
                if !s.contains(&self.br(x, y)) {
                    return false;
                }
                for z in b {
                    if !s.contains(&self.tr(x, y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether both brackets vanish identically on `s`.
    pub fn is_abelian_on(&self, s: &Subspace) -> bool {
        let b = s.basis();
        for x in b {
            for y in b {
                if self.br(x, y).iter().any(|c| !c.is_zero()) {
                    return false;
                }
                for z in b {
                    if self.tr(x, y, z).iter().any(|c| !c.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Block-diagonal sum, basis of `self` first.
    pub fn direct_sum(&self, other: &LyAlgebra) -> LyAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let d = n + m;
        let embed = |v: &Vector, off: usize| {
            let mut w = zero_vec(d);
            for (i, c) in v.iter().enumerate() {
                w[off + i] = c.clone();
            }
            w
        };
        let bin = Bilinear::from_fn(d, d, |i, j| match (i < n, j < n) {
            (true, true) => embed(self.bin.at(i, j), 0),
            (false, false) => embed(other.bin.at(i - n, j - n), n),
            _ => zero_vec(d),
        });
        let ter = Trilinear::from_fn(d, d, |i, j, k| match (i < n, j < n, k < n) {
            (true, true, true) => embed(self.ter.at(i, j, k), 0),
            (false, false, false) => embed(other.ter.at(i - n, j - n, k - n), n),
            _ => zero_vec(d),
        });
        let mut s = LyAlgebra::from_tensors(format!("{}+{}", self.name, other.name), bin, ter)
            .expect("blocks are antisymmetric");
        s.basis = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().cloned())
            .collect();
        s.verified = self.verified && other.verified;
        s
    }

    /// Structure constants after the change of basis `x ↦ ψ x` (ψ invertible):
    /// the result is the unique algebra making ψ an isomorphism from `self`.
    pub fn transport(&self, psi: &LinearMap) -> Result<LyAlgebra> {
        let inv = psi.matrix().inverse()?;
        let n = self.dim();
        let m = psi.matrix();
        let bin = Bilinear::from_fn(n, n, |i, j| {
            let x = inv.col(i);
            let y = inv.col(j);
            m.apply(&self.br(&x, &y))
        });
        let ter = Trilinear::from_fn(n, n, |i, j, k| {
            m.apply(&self.tr(&inv.col(i), &inv.col(j), &inv.col(k)))
        });
        let mut a = LyAlgebra::from_tensors(format!("{}'", self.name), bin, ter)?;
        a.verified = self.verified;
        Ok(a)
    }
}

fn index_check(what: &str, dim: usize, idx: &[usize]) -> Result<()> {
    if let Some(&bad) = idx.iter().find(|&&i| i >= dim) {
        return Err(LyaError::DimMismatch {
            context: format!("{what} index {bad}"),
            expected: dim,
            found: bad + 1,
        });
    }
    Ok(())
}

/// Whether an entry should be written (false for a zero diagonal entry);
/// rejects nonzero diagonal entries and contradictions with earlier entries.
fn antisym_ok(
    c: &Rational,
    diagonal: bool,
    cur: &Rational,
    partner: &Rational,
    what: impl Fn() -> String,
) -> Result<bool> {
    if diagonal {
        if c.is_zero() {
            return Ok(false);
        }
        return Err(LyaError::AxiomsFailed(format!(
            "{} lies on the diagonal and must be zero",
            what()
        )));
    }
    let consistent = (cur.is_zero() || cur == c) && (partner.is_zero() || *partner == -c);
    if !consistent {
        return Err(LyaError::AxiomsFailed(format!(
            "{} contradicts an earlier antisymmetric entry",
            what()
        )));
    }
    Ok(true)
}

/// A linear map stored as a `target × source` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap::new(Matrix::identity(n))
    }

    pub fn zero(source: usize, target: usize) -> Self {
        LinearMap::new(Matrix::zeros(target, source))
    }

    /// Map sending `e_i` to `images[i]`.
    pub fn from_images(images: &[Vector], target: usize) -> Result<Self> {
        Ok(LinearMap::new(Matrix::from_cols(images, target)?))
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        self.matrix.apply(v)
    }

    pub fn image(&self, i: usize) -> Vector {
        self.matrix.col(i)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap::new(self.matrix.try_mul(&other.matrix)?))
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.sub(&other.matrix))
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        LinearMap::new(self.matrix.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        Ok(LinearMap::new(self.matrix.inverse()?))
    }
}

/// Checks `φ[x, y] = [φx, φy]` and `φ⟨x, y, z⟩ = ⟨φx, φy, φz⟩` on basis tuples.
pub fn check_homomorphism(
    a: &LyAlgebra,
    b: &LyAlgebra,
    phi: &LinearMap,
    opts: CheckOptions,
) -> Result<Report> {
    dim_check("homomorphism source", a.dim(), phi.source_dim())?;
    dim_check("homomorphism target", b.dim(), phi.target_dim())?;
    let n = a.dim();
    let mut r = Report::new(format!("homomorphism {} -> {}", a.name, b.name), opts);
    let im: Vec<Vector> = (0..n).map(|i| phi.image(i)).collect();
    r.check_tuples("hom.binary", &[n, n], |ix| {
        let lhs = phi.apply(a.bin.at(ix[0], ix[1]));
        sub_vec(&lhs, &b.br(&im[ix[0]], &im[ix[1]]))
    });
    r.check_tuples("hom.ternary", &[n, n, n], |ix| {
        let lhs = phi.apply(a.ter.at(ix[0], ix[1], ix[2]));
        sub_vec(&lhs, &b.tr(&im[ix[0]], &im[ix[1]], &im[ix[2]]))
    });
    Ok(r)
}
