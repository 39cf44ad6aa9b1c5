//! Dense multilinear maps given by structure constants.

use crate::linalg::{axpy, is_zero_vec, zero_vec, Matrix, Vector};
use crate::rational::Rational;

/// A bilinear map `K^n × K^n → K^out`; `at(i, j)` is the image of `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bilinear {
    n: usize,
    out: usize,
    data: Vec<Vector>,
    nonzero: Vec<bool>,
}

impl Bilinear {
    pub fn zero(n: usize, out: usize) -> Self {
        Bilinear {
            n,
            out,
            data: vec![zero_vec(out); n * n],
            nonzero: vec![false; n * n],
        }
    }

    /// Builds from the images of basis pairs.
    pub fn from_fn(n: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut b = Self::zero(n, out);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                debug_assert_eq!(v.len(), out);
                b.put(i, j, v);
            }
        }
        b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn out(&self) -> usize {
        self.out
    }

    pub fn at(&self, i: usize, j: usize) -> &Vector {
        &self.data[i * self.n + j]
    }

    pub fn put(&mut self, i: usize, j: usize, v: Vector) {
        let k = i * self.n + j;
        self.nonzero[k] = !is_zero_vec(&v);
        self.data[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        !self.nonzero.iter().any(|&b| b)
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut acc = zero_vec(self.out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let k = i * self.n + j;
                if yj.is_zero() || !self.nonzero[k] {
                    continue;
                }
                axpy(&mut acc, &(xi * yj), &self.data[k]);
            }
        }
        acc
    }

    /// `(e_i, y) ↦ …` with a basis first argument.
    pub fn eval_e(&self, i: usize, y: &[Rational]) -> Vector {
        let mut acc = zero_vec(self.out);
        for (j, yj) in y.iter().enumerate() {
            let k = i * self.n + j;
            if !yj.is_zero() && self.nonzero[k] {
                axpy(&mut acc, yj, &self.data[k]);
            }
        }
        acc
    }

    /// Matrix of `y ↦ B(x, y)`.
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.n)
            .map(|j| {
                let mut acc = zero_vec(self.out);
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() {
                        axpy(&mut acc, xi, self.at(i, j));
                    }
                }
                acc
            })
            .collect();
        Matrix::from_cols(&cols, self.out).expect("consistent shape")
    }

    pub fn is_antisymmetric(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i..self.n {
                let s: Vector = self
                    .at(i, j)
                    .iter()
                    .zip(self.at(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if !is_zero_vec(&s) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Raw structure constants in `[i][j] → vector` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / n, k % n, v))
    }
}

/// A trilinear map `K^n × K^n × K^n → K^out`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trilinear {
    n: usize,
    out: usize,
    data: Vec<Vector>,
    nonzero: Vec<bool>,
}

impl Trilinear {
    pub fn zero(n: usize, out: usize) -> Self {
        Trilinear {
            n,
            out,
            data: vec![zero_vec(out); n * n * n],
            nonzero: vec![false; n * n * n],
        }
    }

    pub fn from_fn(
        n: usize,
        out: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vector,
    ) -> Self {
        let mut t = Self::zero(n, out);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.put(i, j, k, f(i, j, k));
                }
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn out(&self) -> usize {
        self.out
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.data[self.idx(i, j, k)]
    }

    pub fn put(&mut self, i: usize, j: usize, k: usize, v: Vector) {
        let p = self.idx(i, j, k);
        self.nonzero[p] = !is_zero_vec(&v);
        self.data[p] = v;
    }

    pub fn is_zero(&self) -> bool {
        !self.nonzero.iter().any(|&b| b)
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let mut acc = zero_vec(self.out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    let p = self.idx(i, j, k);
                    if zk.is_zero() || !self.nonzero[p] {
                        continue;
                    }
                    axpy(&mut acc, &(&xy * zk), &self.data[p]);
                }
            }
        }
        acc
    }

    /// `(e_i, e_j, z) ↦ …`
    pub fn eval_ee(&self, i: usize, j: usize, z: &[Rational]) -> Vector {
        let mut acc = zero_vec(self.out);
        for (k, zk) in z.iter().enumerate() {
            let p = self.idx(i, j, k);
            if !zk.is_zero() && self.nonzero[p] {
                axpy(&mut acc, zk, &self.data[p]);
            }
        }
        acc
    }

    pub fn is_antisymmetric_12(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for j in i..self.n {
                for k in 0..self.n {
                    let s: Vector = self
                        .at(i, j, k)
                        .iter()
                        .zip(self.at(j, i, k))
                        .map(|(a, b)| a + b)
                        .collect();
                    if !is_zero_vec(&s) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Vector)> {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .map(move |(p, v)| (p / (n * n), (p / n) % n, p % n, v))
    }
}
