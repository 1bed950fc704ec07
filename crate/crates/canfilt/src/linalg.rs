//! Dense exact linear algebra over ℚ.
//!
//! Everything here is plain Gaussian elimination with exact pivots. The
//! matrices in this crate are tiny (dimension ≤ a few dozen), so no effort
//! is spent on fraction-free or sparse variants.

use num_traits::{One, Zero};

use crate::rational::Rat;
use crate::{Error, Result};

/// Dense row-major matrix over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: Vec<Vec<Rat>>,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Rat>>) -> Self {
        if let Some(w) = rows.first().map(Vec::len) {
            assert!(rows.iter().all(|r| r.len() == w), "ragged matrix");
        }
        Matrix { rows }
    }

    pub fn zero(n: usize, m: usize) -> Self {
        Matrix {
            rows: vec![vec![Rat::zero(); m]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = Rat::one();
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Reduce in place to reduced row echelon form; returns the pivot
    /// columns. Zero rows are kept (trailing) so shapes are preserved.
    pub fn rref(&mut self) -> Vec<usize> {
        let (n, m) = (self.n_rows(), self.n_cols());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m {
            if r == n {
                break;
            }
            let Some(p) = (r..n).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].recip();
            for x in &mut self.rows[r] {
                *x *= &inv;
            }
            for i in 0..n {
                if i != r && !self.rows[i][c].is_zero() {
                    let f = self.rows[i][c].clone();
                    for j in 0..m {
                        if !self.rows[r][j].is_zero() {
                            let t = &self.rows[r][j] * &f;
                            self.rows[i][j] -= t;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel `{x : Ax = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let m = self.n_cols();
        let mut red = self.clone();
        let pivots = red.rref();
        let mut is_pivot = vec![false; m];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..m {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); m];
            v[free] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -red.rows[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `Ax = b` with free variables set to zero, or `None`
    /// when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.n_rows());
        let m = self.n_cols();
        let mut aug = self.clone();
        for (row, bi) in aug.rows.iter_mut().zip(b) {
            row.push(bi.clone());
        }
        let pivots = aug.rref();
        // A pivot in the augmented column means inconsistency.
        if pivots.last() == Some(&m) {
            return None;
        }
        let mut x = vec![Rat::zero(); m];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.rows[r][m].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n_rows();
        if n != self.n_cols() {
            return Err(Error::SingularMatrix);
        }
        let mut aug = self.clone();
        for (i, row) in aug.rows.iter_mut().enumerate() {
            for j in 0..n {
                row.push(if i == j { Rat::one() } else { Rat::zero() });
            }
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::new(
            aug.rows.into_iter().map(|r| r[n..].to_vec()).collect(),
        ))
    }

    pub fn mat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.n_cols());
        self.rows
            .iter()
            .map(|row| dot(row, v))
            .collect()
    }

    /// Column `j` as a vector.
    pub fn col(&self, j: usize) -> Vec<Rat> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let (n, m) = (self.n_rows(), self.n_cols());
        let mut t = Matrix::zero(m, n);
        for i in 0..n {
            for j in 0..m {
                t.rows[j][i] = self.rows[i][j].clone();
            }
        }
        t
    }

    pub fn mat_mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n_cols(), other.n_rows());
        let (n, k, m) = (self.n_rows(), self.n_cols(), other.n_cols());
        let mut out = Matrix::zero(n, m);
        for i in 0..n {
            for t in 0..k {
                if self.rows[i][t].is_zero() {
                    continue;
                }
                for j in 0..m {
                    let p = &self.rows[i][t] * &other.rows[t][j];
                    out.rows[i][j] += p;
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        (0..self.n_rows().min(self.n_cols()))
            .map(|i| self.rows[i][i].clone())
            .sum()
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
