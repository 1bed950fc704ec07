//! Subspaces of ℚ^d with canonical representatives.
//!
//! A subspace is stored as the reduced row echelon form of any spanning
//! set, so two equal subspaces have identical matrices and `==` decides
//! subspace equality. Filtration steps, ideals, and radicals all live here.

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::linalg::Matrix;
use crate::rational::Rat;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows, no zero rows. Pivot columns are strictly increasing.
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_spanning(ambient, Matrix::identity(ambient).rows)
    }

    /// Span of the given vectors, canonicalized. Zero vectors are dropped
    /// before elimination.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<Rat>>) -> Self {
        let vectors: Vec<Vec<Rat>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "spanning vector of wrong length"))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let mut m = Matrix::new(vectors);
        let pivots = m.rref();
        let basis = m.rows.into_iter().take(pivots.len()).collect();
        Subspace { ambient, basis, pivots }
    }

    /// Span of a set of standard basis vectors.
    pub fn from_coordinates(ambient: usize, coords: &[usize]) -> Self {
        let mut rows = Vec::new();
        for &c in coords {
            let mut v = vec![Rat::zero(); ambient];
            v[c] = Rat::one();
            rows.push(v);
        }
        Self::from_spanning(ambient, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Residual of `v` after subtracting its projection onto the pivot
    /// coordinates; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r
    }

    /// Coordinates of `v` in the RREF basis. `None` when `v` is outside.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, rows)
    }

    /// Intersection via the kernel of `[Uᵀ | -Vᵀ]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let (k, l) = (self.dim(), other.dim());
        let mut stacked = Matrix::zero(self.ambient, k + l);
        for (c, row) in self.basis.iter().enumerate() {
            for (r, x) in row.iter().enumerate() {
                stacked.rows[r][c] = x.clone();
            }
        }
        for (c, row) in other.basis.iter().enumerate() {
            for (r, x) in row.iter().enumerate() {
                stacked.rows[r][k + c] = -x.clone();
            }
        }
        let mut vectors = Vec::new();
        for ker in stacked.kernel_basis() {
            let mut v = vec![Rat::zero(); self.ambient];
            for (c, row) in self.basis.iter().enumerate() {
                if ker[c].is_zero() {
                    continue;
                }
                for (x, b) in v.iter_mut().zip(row) {
                    *x += &ker[c] * b;
                }
            }
            vectors.push(v);
        }
        Subspace::from_spanning(self.ambient, vectors)
    }

    /// Standard coordinates not hit by a pivot; they span a complement.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Span of all products `μ(u, v)` with `u` here and `v` in `other`.
    pub fn product(&self, a: &Algebra, other: &Subspace) -> Result<Subspace> {
        let mut rows = Vec::new();
        for u in &self.basis {
            for v in &other.basis {
                rows.push(a.multiply(u, v)?);
            }
        }
        Ok(Subspace::from_spanning(self.ambient, rows))
    }

    /// Closure under multiplication by arbitrary algebra elements on both
    /// sides (for Lie algebras one side suffices by antisymmetry).
    pub fn is_ideal(&self, a: &Algebra) -> Result<bool> {
        let full = Subspace::full(self.ambient);
        let left = full.product(a, self)?;
        let right = self.product(a, &full)?;
        Ok(self.contains_subspace(&left) && self.contains_subspace(&right))
    }

    pub fn is_subalgebra(&self, a: &Algebra) -> Result<bool> {
        let sq = self.product(a, self)?;
        Ok(self.contains_subspace(&sq))
    }

    /// The induced algebra on this subspace, in its RREF basis. Fails when
    /// the subspace is not closed under the product.
    pub fn subalgebra(&self, a: &Algebra) -> Result<Algebra> {
        let n = self.dim();
        let mut entries = Vec::new();
        for (i, u) in self.basis.iter().enumerate() {
            for (j, v) in self.basis.iter().enumerate() {
                let w = a.multiply(u, v)?;
                let coords = self.coords_of(&w).ok_or(Error::NotClosed)?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        let labels = (0..n).map(|i| format!("r{i}")).collect();
        Algebra::new(n, a.kind(), entries, Some(labels), None)
    }

    /// The quotient algebra `A / I` on the complement coordinates. The
    /// caller must pass an ideal; closure is verified.
    pub fn quotient(&self, a: &Algebra) -> Result<Algebra> {
        if !self.is_ideal(a)? {
            return Err(Error::NotIdeal);
        }
        self.quotient_unchecked(a)
    }

    /// [`Subspace::quotient`] without re-verifying the ideal property, for
    /// callers that have just established it.
    pub fn quotient_unchecked(&self, a: &Algebra) -> Result<Algebra> {
        let comp = self.complement_coordinates();
        let n = comp.len();
        let mut entries = Vec::new();
        for (i, &ci) in comp.iter().enumerate() {
            for (j, &cj) in comp.iter().enumerate() {
                let w = a.multiply(
                    &crate::algebra::unit_vec(a.dim(), ci),
                    &crate::algebra::unit_vec(a.dim(), cj),
                )?;
                let reduced = self.reduce(&w);
                for (k, &ck) in comp.iter().enumerate() {
                    if !reduced[ck].is_zero() {
                        entries.push((i, j, k, reduced[ck].clone()));
                    }
                }
            }
        }
        let labels = comp.iter().map(|&c| format!("q{c}")).collect();
        Algebra::new(n, a.kind(), entries, Some(labels), None)
    }

    /// Image `p(U)` under the linear map whose columns are images of basis
    /// vectors.
    pub fn image(&self, p: &Matrix) -> Subspace {
        let rows = self.basis.iter().map(|v| p.mat_vec(v)).collect();
        Subspace::from_spanning(self.ambient, rows)
    }
}
