//! Brute-force cohomology oracle, deliberately independent of the library:
//! it reads fixture JSON with serde_json, keeps every structure as dense
//! `BigRational` arrays, evaluates coboundaries by full multilinear expansion
//! and ranks matrices with its own elimination.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

pub type Q = BigRational;
type Vecq = Vec<Q>;

fn q(v: &Value) -> Q {
    match v {
        Value::String(s) => {
            let mut parts = s.trim().splitn(2, '/');
            let num: BigInt = parts.next().unwrap().trim().parse().unwrap();
            let den: BigInt = parts.next().map_or_else(BigInt::one, |d| d.trim().parse().unwrap());
            Q::new(num, den)
        }
        Value::Number(n) => Q::from_integer(BigInt::from(n.as_i64().unwrap())),
        other => panic!("not a rational: {other}"),
    }
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn sub_file(base: &Path, v: &Value) -> Value {
    match v {
        Value::String(rel) => read(&base.parent().unwrap().join(rel)),
        other => other.clone(),
    }
}

fn zeros(n: usize) -> Vecq {
    vec![Q::zero(); n]
}

fn unit(n: usize, i: usize) -> Vecq {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

fn add(a: &mut Vecq, c: &Q, b: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += c * y;
    }
}

/// Dense `n`-dimensional algebra: `bin[i][j]` and `ter[i][j][k]` are vectors.
struct Alg {
    n: usize,
    bin: Vec<Vec<Vecq>>,
    ter: Vec<Vec<Vec<Vecq>>>,
}

impl Alg {
    fn from_json(v: &Value) -> Alg {
        let n = v["dim"].as_u64().unwrap() as usize;
        let mut bin = vec![vec![zeros(n); n]; n];
        let mut ter = vec![vec![vec![zeros(n); n]; n]; n];
        for e in v.get("binary").and_then(Value::as_array).into_iter().flatten() {
            let ix: Vec<usize> = (0..3).map(|p| e[p].as_u64().unwrap() as usize).collect();
            let c = q(&e[3]);
            bin[ix[0]][ix[1]][ix[2]] = c.clone();
            bin[ix[1]][ix[0]][ix[2]] = -c;
        }
        for e in v.get("ternary").and_then(Value::as_array).into_iter().flatten() {
            let ix: Vec<usize> = (0..4).map(|p| e[p].as_u64().unwrap() as usize).collect();
            let c = q(&e[4]);
            ter[ix[0]][ix[1]][ix[2]][ix[3]] = c.clone();
            ter[ix[1]][ix[0]][ix[2]][ix[3]] = -c;
        }
        Alg { n, bin, ter }
    }

    fn br(&self, x: &[Q], y: &[Q]) -> Vecq {
        let mut out = zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let c = &x[i] * &y[j];
                add(&mut out, &c, &self.bin[i][j]);
            }
        }
        out
    }

    fn tr(&self, x: &[Q], y: &[Q], z: &[Q]) -> Vecq {
        let mut out = zeros(self.n);
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                for k in 0..self.n {
                    let c = &x[i] * &y[j] * &z[k];
                    add(&mut out, &c, &self.ter[i][j][k]);
                }
            }
        }
        out
    }
}

/// `rho[i]` and `mu[i][j]` are carrier matrices stored as row lists.
struct Rep {
    acting: Alg,
    carrier_dim: usize,
    rho: Vec<Vec<Vecq>>,
    mu: Vec<Vec<Vec<Vecq>>>,
}

fn mat_vec(a: &[Vecq], v: &[Q]) -> Vecq {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |s, (x, y)| s + x * y))
        .collect()
}

impl Rep {
    fn rho(&self, x: &[Q], v: &[Q]) -> Vecq {
        let mut out = zeros(self.carrier_dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                add(&mut out, xi, &mat_vec(&self.rho[i], v));
            }
        }
        out
    }

    fn mu(&self, x: &[Q], y: &[Q], v: &[Q]) -> Vecq {
        let mut out = zeros(self.carrier_dim);
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let c = xi * yj;
                if !c.is_zero() {
                    add(&mut out, &c, &mat_vec(&self.mu[i][j], v));
                }
            }
        }
        out
    }

    /// `D(x,y) = μ(y,x) − μ(x,y) + [ρ(x),ρ(y)] − ρ([x,y])`.
    fn d(&self, x: &[Q], y: &[Q], v: &[Q]) -> Vecq {
        let mut out = self.mu(y, x, v);
        add(&mut out, &-Q::one(), &self.mu(x, y, v));
        add(&mut out, &Q::one(), &self.rho(x, &self.rho(y, v)));
        add(&mut out, &-Q::one(), &self.rho(y, &self.rho(x, v)));
        add(&mut out, &-Q::one(), &self.rho(&self.acting.br(x, y), v));
        out
    }
}

/// Everything the T-complex needs, evaluated pointwise.
pub struct Setting {
    g: Alg,
    h: Alg,
    action: Rep,
    t: Vec<Vecq>,
    // descent brackets and induced representation, tabulated on basis vectors
    descent: Option<Alg>,
    induced: Option<Rep>,
}

fn matrix(v: &Value) -> Vec<Vecq> {
    let v = v.get("matrix").unwrap_or(v);
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(q).collect())
        .collect()
}

impl Setting {
    pub fn load(op_path: &Path) -> Setting {
        let op = read(op_path);
        let (action_json, action_path) = match &op["action"] {
            Value::String(rel) => {
                let p = op_path.parent().unwrap().join(rel);
                (read(&p), p)
            }
            other => (other.clone(), op_path.to_path_buf()),
        };
        let g = Alg::from_json(&sub_file(&action_path, &action_json["acting"]));
        let h = Alg::from_json(&sub_file(&action_path, &action_json["carrier"]));
        let rho: Vec<_> = action_json["rho"].as_array().unwrap().iter().map(matrix).collect();
        let mu: Vec<Vec<_>> = action_json["mu"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| row.as_array().unwrap().iter().map(matrix).collect())
            .collect();
        let acting = Alg::from_json(&sub_file(&action_path, &action_json["acting"]));
        let action = Rep { acting, carrier_dim: h.n, rho, mu };
        let mut s = Setting { g, h, action, t: matrix(&op["T"]), descent: None, induced: None };
        s.tabulate();
        s
    }

    fn tabulate(&mut self) {
        let (m, n) = (self.g.n, self.h.n);
        let e = |i: usize| unit(n, i);
        let x = |i: usize| unit(m, i);
        let bin = (0..n).map(|i| (0..n).map(|j| self.br_t(&e(i), &e(j))).collect()).collect();
        let ter = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.tr_t(&e(i), &e(j), &e(k))).collect()).collect())
            .collect();
        // matrices stored as row lists: entry [r][c] = component r of the image of x_c
        let as_rows = |f: &dyn Fn(&[Q]) -> Vecq| transpose(&(0..m).map(|c| f(&x(c))).collect::<Vec<_>>(), m);
        let rho = (0..n).map(|u| as_rows(&|v| self.rho_t(&e(u), v))).collect();
        let mu = (0..n)
            .map(|u| (0..n).map(|w| as_rows(&|v| self.mu_t(&e(u), &e(w), v))).collect())
            .collect();
        self.descent = Some(Alg { n, bin, ter });
        let acting = Alg { n, bin: self.descent.as_ref().unwrap().bin.clone(), ter: vec![] };
        self.induced = Some(Rep { acting, carrier_dim: m, rho, mu });
    }

    fn ind(&self) -> &Rep {
        self.induced.as_ref().unwrap()
    }

    fn desc(&self) -> &Alg {
        self.descent.as_ref().unwrap()
    }

    fn t(&self, u: &[Q]) -> Vecq {
        mat_vec(&self.t, u)
    }

    // descent brackets on h
    fn br_t(&self, u: &[Q], v: &[Q]) -> Vecq {
        let mut out = self.action.rho(&self.t(u), v);
        add(&mut out, &-Q::one(), &self.action.rho(&self.t(v), u));
        add(&mut out, &Q::one(), &self.h.br(u, v));
        out
    }

    fn tr_t(&self, u: &[Q], v: &[Q], w: &[Q]) -> Vecq {
        let (tu, tv, tw) = (self.t(u), self.t(v), self.t(w));
        let mut out = self.action.d(&tu, &tv, w);
        add(&mut out, &Q::one(), &self.action.mu(&tv, &tw, u));
        add(&mut out, &-Q::one(), &self.action.mu(&tu, &tw, v));
        add(&mut out, &Q::one(), &self.h.tr(u, v, w));
        out
    }

    // induced representation of h on g
    fn rho_t(&self, u: &[Q], x: &[Q]) -> Vecq {
        let mut out = self.g.br(&self.t(u), x);
        add(&mut out, &Q::one(), &self.t(&self.action.rho(x, u)));
        out
    }

    fn mu_t(&self, u: &[Q], v: &[Q], x: &[Q]) -> Vecq {
        let (tu, tv) = (self.t(u), self.t(v));
        let mut inner = self.action.d(x, &tu, v);
        add(&mut inner, &-Q::one(), &self.action.mu(x, &tv, u));
        let mut out = self.g.tr(x, &tu, &tv);
        add(&mut out, &-Q::one(), &self.t(&inner));
        out
    }
}

type Wedge = (Vecq, Vecq);

/// A cochain given by its values on basis tuples `(a<b)^k` (and a final
/// plain index for the second component); extended multilinearly.
struct Cochain<'a> {
    n: usize,
    m: usize,
    k: usize,
    f: &'a dyn Fn(&[(usize, usize)]) -> Vecq,
    g: &'a dyn Fn(&[(usize, usize)], usize) -> Vecq,
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn wedge_coords(n: usize, w: &Wedge) -> Vec<((usize, usize), Q)> {
    pairs(n)
        .into_iter()
        .filter_map(|(a, b)| {
            let c = &w.0[a] * &w.1[b] - &w.0[b] * &w.1[a];
            (!c.is_zero()).then_some(((a, b), c))
        })
        .collect()
}

impl Cochain<'_> {
    fn expand(&self, ws: &[Wedge], mut leaf: impl FnMut(&[(usize, usize)], &Q)) {
        let coords: Vec<_> = ws.iter().map(|w| wedge_coords(self.n, w)).collect();
        let mut idx = Vec::with_capacity(ws.len());
        fn rec(
            coords: &[Vec<((usize, usize), Q)>],
            idx: &mut Vec<(usize, usize)>,
            c: Q,
            leaf: &mut dyn FnMut(&[(usize, usize)], &Q),
        ) {
            if idx.len() == coords.len() {
                leaf(idx, &c);
                return;
            }
            for (p, x) in &coords[idx.len()] {
                idx.push(*p);
                rec(coords, idx, &c * x, leaf);
                idx.pop();
            }
        }
        rec(&coords, &mut idx, Q::one(), &mut leaf);
    }

    fn eval_f(&self, ws: &[Wedge]) -> Vecq {
        assert_eq!(ws.len(), self.k);
        let mut out = zeros(self.m);
        self.expand(ws, |ix, c| add(&mut out, c, &(self.f)(ix)));
        out
    }

    fn eval_g(&self, ws: &[Wedge], z: &[Q]) -> Vecq {
        assert_eq!(ws.len(), self.k);
        let mut out = zeros(self.m);
        for (zi, zc) in z.iter().enumerate() {
            if zc.is_zero() {
                continue;
            }
            self.expand(ws, |ix, c| add(&mut out, &(c * zc), &(self.g)(ix, zi)));
        }
        out
    }
}

fn without(ws: &[Wedge], k: usize) -> Vec<Wedge> {
    ws.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, w)| w.clone()).collect()
}

fn sign(e: usize) -> Q {
    if e % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

impl Setting {
    /// Column-by-column matrix of `∂ : ∧²g → Hom(h, g)`.
    pub fn zero_map_matrix(&self) -> Vec<Vecq> {
        let (m, n) = (self.g.n, self.h.n);
        let cols: Vec<Vecq> = pairs(m)
            .into_iter()
            .map(|(i, j)| {
                let (x, y) = (unit(m, i), unit(m, j));
                let mut col = Vec::with_capacity(n * m);
                for v in 0..n {
                    let ev = unit(n, v);
                    let mut val = self.t(&self.action.d(&x, &y, &ev));
                    add(&mut val, &-Q::one(), &self.g.tr(&x, &y, &self.t(&ev)));
                    col.extend(val);
                }
                col
            })
            .collect();
        transpose(&cols, n * m)
    }

    fn basis_tuples(&self, k: usize) -> Vec<Vec<(usize, usize)>> {
        let ps = pairs(self.h.n);
        let mut out = vec![vec![]];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|t| {
                    ps.iter().map(move |p| {
                        let mut t = t.clone();
                        t.push(*p);
                        t
                    })
                })
                .collect();
        }
        out
    }

    fn dim(&self, p: usize) -> usize {
        let (n, m) = (self.h.n, self.g.n);
        if p == 1 {
            return n * m;
        }
        let mp = (n * (n - 1) / 2).pow(p as u32 - 1);
        mp * m + mp * n * m
    }

    /// Matrix of the Yamaguti coboundary out of degree `p ≥ 1`.
    pub fn coboundary_matrix(&self, p: usize) -> Vec<Vecq> {
        let cols: Vec<Vecq> = (0..self.dim(p)).map(|c| self.coboundary_of_basis(p, c)).collect();
        transpose(&cols, self.dim(p + 1))
    }

    fn coboundary_of_basis(&self, p: usize, c: usize) -> Vecq {
        let (n, m) = (self.h.n, self.g.n);
        let e = |i: usize| unit(n, i);
        if p == 1 {
            // basis cochain sends e_{c / m} to the (c % m)-th basis vector of g
            let f = |v: &[Q]| -> Vecq {
                let mut out = zeros(m);
                out[c % m] = v[c / m].clone();
                out
            };
            let mut col = Vec::new();
            for (a, b) in pairs(n) {
                let (x, y) = (e(a), e(b));
                let mut val = self.ind().rho(&x, &f(&y));
                add(&mut val, &-Q::one(), &self.ind().rho(&y, &f(&x)));
                add(&mut val, &-Q::one(), &f(&self.desc().br(&x, &y)));
                col.extend(val);
            }
            for (a, b) in pairs(n) {
                for z in 0..n {
                    let (x, y, z) = (e(a), e(b), e(z));
                    let mut val = self.ind().d(&x, &y, &f(&z));
                    add(&mut val, &Q::one(), &self.ind().mu(&y, &z, &f(&x)));
                    add(&mut val, &-Q::one(), &self.ind().mu(&x, &z, &f(&y)));
                    add(&mut val, &-Q::one(), &f(&self.desc().tr(&x, &y, &z)));
                    col.extend(val);
                }
            }
            return col;
        }
        let k = p - 1;
        let tuples = self.basis_tuples(k);
        let f_len = tuples.len() * m;
        let (in_f, slot) = if c < f_len { (true, c) } else { (false, c - f_len) };
        let f = |ix: &[(usize, usize)]| -> Vecq {
            let mut out = zeros(m);
            if in_f && tuples[slot / m] == ix {
                out[slot % m] = Q::one();
            }
            out
        };
        let g = |ix: &[(usize, usize)], z: usize| -> Vecq {
            let mut out = zeros(m);
            if !in_f && tuples[slot / (n * m)] == ix && (slot / m) % n == z {
                out[slot % m] = Q::one();
            }
            out
        };
        let co = Cochain { n, m, k, f: &f, g: &g };
        let mut col = Vec::new();
        let next = self.basis_tuples(k + 1);
        let as_wedges = |t: &[(usize, usize)]| -> Vec<Wedge> { t.iter().map(|&(a, b)| (e(a), e(b))).collect() };
        for t in &next {
            col.extend(self.delta_one(&co, &as_wedges(t)));
        }
        for t in &next {
            for z in 0..n {
                col.extend(self.delta_two(&co, &as_wedges(t), &e(z)));
            }
        }
        col
    }

    fn circ(&self, a: &Wedge, b: &Wedge) -> [Wedge; 2] {
        [
            (self.desc().tr(&a.0, &a.1, &b.0), b.1.clone()),
            (b.0.clone(), self.desc().tr(&a.0, &a.1, &b.1)),
        ]
    }

    /// Arguments with `X_k` removed and `X_l` replaced by each half of `X_k ∘ X_l`.
    fn circ_args(&self, xs: &[Wedge], k: usize, l: usize) -> [Vec<Wedge>; 2] {
        self.circ(&xs[k], &xs[l]).map(|w| {
            let mut args = xs.to_vec();
            args[l] = w;
            without(&args, k)
        })
    }

    fn delta_one(&self, co: &Cochain, xs: &[Wedge]) -> Vecq {
        let nn = co.k;
        let m = co.m;
        let (x, y) = (&xs[nn].0, &xs[nn].1);
        let head = &xs[..nn];
        let mut lead = self.ind().rho(x, &co.eval_g(head, y));
        add(&mut lead, &-Q::one(), &self.ind().rho(y, &co.eval_g(head, x)));
        add(&mut lead, &-Q::one(), &co.eval_g(head, &self.desc().br(x, y)));
        let mut out = zeros(m);
        add(&mut out, &sign(nn), &lead);
        for kk in 0..nn {
            let val = co.eval_f(&without(xs, kk));
            add(&mut out, &sign(kk), &self.ind().d(&xs[kk].0, &xs[kk].1, &val));
        }
        for kk in 0..=nn {
            for l in kk + 1..=nn {
                for args in self.circ_args(xs, kk, l) {
                    add(&mut out, &sign(kk + 1), &co.eval_f(&args));
                }
            }
        }
        out
    }

    fn delta_two(&self, co: &Cochain, xs: &[Wedge], z: &[Q]) -> Vecq {
        let nn = co.k;
        let m = co.m;
        let (x, y) = (&xs[nn].0, &xs[nn].1);
        let head = &xs[..nn];
        let mut lead = self.ind().mu(y, z, &co.eval_g(head, x));
        add(&mut lead, &-Q::one(), &self.ind().mu(x, z, &co.eval_g(head, y)));
        let mut out = zeros(m);
        add(&mut out, &sign(nn), &lead);
        for kk in 0..=nn {
            let val = co.eval_g(&without(xs, kk), z);
            add(&mut out, &sign(kk), &self.ind().d(&xs[kk].0, &xs[kk].1, &val));
        }
        for kk in 0..=nn {
            for l in kk + 1..=nn {
                for args in self.circ_args(xs, kk, l) {
                    add(&mut out, &sign(kk + 1), &co.eval_g(&args, z));
                }
            }
        }
        for kk in 0..=nn {
            let inner = self.desc().tr(&xs[kk].0, &xs[kk].1, z);
            add(&mut out, &sign(kk + 1), &co.eval_g(&without(xs, kk), &inner));
        }
        out
    }

    /// `(dim Z^p, dim B^p, dim H^p)` for `p ∈ {1, 2}`.
    pub fn dims(&self, p: usize) -> [usize; 3] {
        let out = self.coboundary_matrix(p);
        let inc = if p == 1 { self.zero_map_matrix() } else { self.coboundary_matrix(p - 1) };
        let z = self.dim(p) - rank(out);
        let b = rank(inc);
        [z, b, z - b]
    }
}

fn transpose(cols: &[Vecq], rows: usize) -> Vec<Vecq> {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// Plain Gaussian elimination with full pivot search per column.
pub fn rank(mut a: Vec<Vecq>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, piv);
        let inv = Q::one() / &a[r][c];
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `A·B` is exactly zero.
pub fn product_is_zero(a: &[Vecq], b: &[Vecq]) -> bool {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().all(|row| {
        (0..cols).all(|j| (0..inner).fold(Q::zero(), |s, k| s + &row[k] * &b[k][j]).is_zero())
    })
}
