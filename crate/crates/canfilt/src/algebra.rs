//! Algebras presented by structure constants over ℚ.
//!
//! A bilinear product on a based vector space is determined by the scalars
//! `c_ij^k` with `μ(e_i, e_j) = Σ_k c_ij^k e_k`. The table is stored
//! sparsely, keyed by `(i, j)`; dense d³ tables are wasteful for the
//! monomial and triangular families this crate cares about.
//!
//! Axioms (associativity, or alternating + Jacobi, plus grading
//! compatibility) are *checked*, not assumed: [`Algebra::validate`] returns
//! the violations as data. The unit of a unital algebra is an ordinary basis
//! element, never special-cased.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::rational::{format_rat, parse_rat, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Associative,
    Lie,
}

/// Sparse product table: `(i, j)` maps to the sorted nonzero support of
/// `μ(e_i, e_j)`.
pub type Table = BTreeMap<(usize, usize), Vec<(usize, Rat)>>;

/// A finite-dimensional algebra over ℚ given by structure constants, with
/// optional ℤʳ-grading. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    kind: Kind,
    table: Table,
    labels: Vec<String>,
    grading: Option<Vec<Vec<i64>>>,
}

/// A failed axiom at a specific basis pair or triple, with the residual
/// vector witnessing the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `c_ii^k ≠ 0` or `c_ij^k ≠ -c_ji^k` for a Lie table.
    Alternating { i: usize, j: usize, residual: Vec<Rat> },
    /// `(e_i e_j) e_k - e_i (e_j e_k) ≠ 0`.
    Associator { i: usize, j: usize, k: usize, residual: Vec<Rat> },
    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] ≠ 0`.
    Jacobi { i: usize, j: usize, k: usize, residual: Vec<Rat> },
    /// A nonzero `c_ij^k` with `deg(e_k) ≠ deg(e_i) + deg(e_j)`.
    Grading { i: usize, j: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Alternating { i, j, .. } => {
                write!(f, "alternating fails at ({i},{j})")
            }
            Violation::Associator { i, j, k, .. } => {
                write!(f, "associativity fails at ({i},{j},{k})")
            }
            Violation::Jacobi { i, j, k, .. } => {
                write!(f, "Jacobi identity fails at ({i},{j},{k})")
            }
            Violation::Grading { i, j, k } => {
                write!(f, "grading incompatibility at ({i},{j})->{k}")
            }
        }
    }
}

impl Algebra {
    /// Build an algebra from raw `(i, j, k, c)` entries. Entries with equal
    /// `(i, j, k)` are summed; zero sums are dropped. For Lie kind, a pair
    /// `(j, i)` missing from the input is completed to `-c_ij` so only
    /// `i < j` entries need be supplied. Out-of-range indices are rejected;
    /// axioms are not checked here (see [`Algebra::validate`]).
    pub fn new(
        dim: usize,
        kind: Kind,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rat)>,
        labels: Option<Vec<String>>,
        grading: Option<Vec<Vec<i64>>>,
    ) -> Result<Algebra> {
        let mut cells: BTreeMap<(usize, usize), BTreeMap<usize, Rat>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfBounds { index: idx, dim });
                }
            }
            let slot = cells.entry((i, j)).or_default().entry(k).or_insert_with(Rat::zero);
            *slot += c;
        }
        if kind == Kind::Lie {
            let keys: Vec<(usize, usize)> = cells.keys().copied().collect();
            for (i, j) in keys {
                if i != j && !cells.contains_key(&(j, i)) {
                    let mirror: BTreeMap<usize, Rat> = cells[&(i, j)]
                        .iter()
                        .map(|(&k, c)| (k, -c.clone()))
                        .collect();
                    cells.insert((j, i), mirror);
                }
            }
        }
        let mut table: Table = BTreeMap::new();
        for ((i, j), supp) in cells {
            let entries: Vec<(usize, Rat)> =
                supp.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !entries.is_empty() {
                table.insert((i, j), entries);
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: l.len() });
                }
                l
            }
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        if let Some(g) = &grading {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.len() });
            }
            let rank = g.first().map_or(0, Vec::len);
            if g.iter().any(|v| v.len() != rank) {
                return Err(Error::BadFile("ragged grading vectors".into()));
            }
        }
        Ok(Algebra { dim, kind, table, labels, grading })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn grading(&self) -> Option<&Vec<Vec<i64>>> {
        self.grading.as_ref()
    }

    /// Replace the grading (used by builders and `Gr`).
    pub fn with_grading(mut self, grading: Option<Vec<Vec<i64>>>) -> Self {
        self.grading = grading;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// `μ(e_i, e_j)` as a sparse support vector.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        self.table.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// Bilinear extension of the table: `μ(u, v)`, exact.
    pub fn multiply(&self, u: &[Rat], v: &[Rat]) -> Result<Vec<Rat>> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: u.len() });
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let mut out = vec![Rat::zero(); self.dim];
        for ((i, j), entries) in &self.table {
            if u[*i].is_zero() || v[*j].is_zero() {
                continue;
            }
            let f = &u[*i] * &v[*j];
            for (k, c) in entries {
                out[*k] += &f * c;
            }
        }
        Ok(out)
    }

    fn product_basis_vec(&self, i: usize, j: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (k, c) in self.product_of_basis(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// `μ(μ(e_i, e_j), e_k)` through two table lookups.
    fn assoc_left(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (m, c) in self.product_of_basis(i, j) {
            for (t, c2) in self.product_of_basis(*m, k) {
                out[*t] += c * c2;
            }
        }
        out
    }

    /// `μ(e_i, μ(e_j, e_k))` through two table lookups.
    fn assoc_right(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (m, c) in self.product_of_basis(j, k) {
            for (t, c2) in self.product_of_basis(i, *m) {
                out[*t] += c * c2;
            }
        }
        out
    }

    /// Check every axiom of the declared kind on all basis pairs/triples,
    /// plus grading compatibility when a grading is present. Violations are
    /// data, not errors; an empty list means the table is a genuine algebra.
    ///
    /// Only triples with some pair in the table can violate the cubic
    /// axioms, so the scan is proportional to the table, not to d³.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let d = self.dim;
        let mut triples: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
        match self.kind {
            Kind::Lie => {
                for i in 0..d {
                    let diag = self.product_basis_vec(i, i);
                    if diag.iter().any(|c| !c.is_zero()) {
                        out.push(Violation::Alternating { i, j: i, residual: diag });
                    }
                }
                for i in 0..d {
                    for j in (i + 1)..d {
                        let mut res = self.product_basis_vec(i, j);
                        for (k, c) in self.product_of_basis(j, i) {
                            res[*k] += c;
                        }
                        if res.iter().any(|c| !c.is_zero()) {
                            out.push(Violation::Alternating { i, j, residual: res });
                        }
                    }
                }
                // The Jacobi sum vanishes outright unless one of its three
                // inner products is a table entry.
                for &(a, b) in self.table.keys() {
                    for c in 0..d {
                        triples.insert((a, b, c));
                        triples.insert((c, a, b));
                        triples.insert((b, c, a));
                    }
                }
                for (i, j, k) in triples {
                    let mut res = self.assoc_left(i, j, k);
                    for (t, c) in self.assoc_left(j, k, i).iter().enumerate() {
                        res[t] += c;
                    }
                    for (t, c) in self.assoc_left(k, i, j).iter().enumerate() {
                        res[t] += c;
                    }
                    if res.iter().any(|x| !x.is_zero()) {
                        out.push(Violation::Jacobi { i, j, k, residual: res });
                    }
                }
            }
            Kind::Associative => {
                // The associator vanishes outright unless (i,j) or (j,k)
                // is a table entry.
                for &(a, b) in self.table.keys() {
                    for c in 0..d {
                        triples.insert((a, b, c));
                        triples.insert((c, a, b));
                    }
                }
                for (i, j, k) in triples {
                    let left = self.assoc_left(i, j, k);
                    let right = self.assoc_right(i, j, k);
                    let res: Vec<Rat> =
                        left.iter().zip(&right).map(|(x, y)| x - y).collect();
                    if res.iter().any(|x| !x.is_zero()) {
                        out.push(Violation::Associator { i, j, k, residual: res });
                    }
                }
            }
        }
        if let Some(g) = &self.grading {
            for ((i, j), entries) in &self.table {
                for (k, _) in entries {
                    let sum: Vec<i64> = g[*i].iter().zip(&g[*j]).map(|(a, b)| a + b).collect();
                    if g[*k] != sum {
                        out.push(Violation::Grading { i: *i, j: *j, k: *k });
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal direct sum. Both summands must have the same kind;
    /// gradings concatenate into ℤ^{r₁+r₂} when both are present.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch { expected: self.kind });
        }
        let d1 = self.dim;
        let mut entries = Vec::new();
        for ((i, j), supp) in &self.table {
            for (k, c) in supp {
                entries.push((*i, *j, *k, c.clone()));
            }
        }
        for ((i, j), supp) in &other.table {
            for (k, c) in supp {
                entries.push((i + d1, j + d1, k + d1, c.clone()));
            }
        }
        let labels = self
            .labels
            .iter()
            .cloned()
            .chain(other.labels.iter().cloned())
            .collect();
        let grading = match (&self.grading, &other.grading) {
            (Some(g1), Some(g2)) => {
                let r1 = g1.first().map_or(0, Vec::len);
                let r2 = g2.first().map_or(0, Vec::len);
                let mut g = Vec::with_capacity(d1 + other.dim);
                for v in g1 {
                    let mut x = v.clone();
                    x.extend(std::iter::repeat_n(0, r2));
                    g.push(x);
                }
                for v in g2 {
                    let mut x = vec![0; r1];
                    x.extend(v.iter().copied());
                    g.push(x);
                }
                Some(g)
            }
            _ => None,
        };
        Algebra::new(d1 + other.dim, self.kind, entries, Some(labels), grading)
    }

    /// The isomorphic algebra `g·μ` with `μ_g(x, y) = g μ(g⁻¹x, g⁻¹y)`,
    /// where the columns of `p` are the images of the basis vectors.
    /// Gradings are dropped: a general base change does not preserve them.
    pub fn change_of_basis(&self, p: &Matrix) -> Result<Algebra> {
        if p.n_rows() != self.dim || p.n_cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: p.n_rows() });
        }
        let p_inv = p.inverse()?;
        let mut entries = Vec::new();
        for i in 0..self.dim {
            let u = p_inv.col(i);
            for j in 0..self.dim {
                let v = p_inv.col(j);
                let w = self.multiply(&u, &v)?;
                let image = p.mat_vec(&w);
                for (k, c) in image.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        Algebra::new(self.dim, self.kind, entries, Some(self.labels.clone()), None)
    }

    /// Whether `p` fixes the table: `change_of_basis(self, p) == self` up to
    /// labels and grading.
    pub fn is_automorphism(&self, p: &Matrix) -> Result<bool> {
        let moved = self.change_of_basis(p)?;
        Ok(moved.table == self.table)
    }

    /// The table of the same algebra expressed in the basis whose vectors
    /// are `rows` (in the current coordinates).
    pub fn express_in_basis(&self, rows: &[Vec<Rat>]) -> Result<Algebra> {
        let g = Matrix::new(rows.to_vec()).transpose().inverse()?;
        self.change_of_basis(&g)
    }

    /// The Lie algebra on the same space with bracket `[a,b] = ab - ba`.
    pub fn commutator_lie(&self) -> Result<Algebra> {
        if self.kind != Kind::Associative {
            return Err(Error::KindMismatch { expected: Kind::Associative });
        }
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut v = self.product_basis_vec(i, j);
                for (k, c) in self.product_of_basis(j, i) {
                    v[*k] -= c;
                }
                for (k, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        Algebra::new(
            self.dim,
            Kind::Lie,
            entries,
            Some(self.labels.clone()),
            self.grading.clone(),
        )
    }
}

pub(crate) fn unit_vec(d: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); d];
    v[i] = num_traits::One::one();
    v
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

/// On-disk form: rationals are strings `"p/q"` or `"p"`, indices 0-based.
/// For Lie kind only pairs `i < j` need be listed; loading completes
/// antisymmetry.
#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    dim: usize,
    kind: Kind,
    labels: Vec<String>,
    table: Vec<(usize, usize, usize, String)>,
    grading: Option<Vec<Vec<i64>>>,
}

impl Algebra {
    pub fn to_json(&self) -> String {
        let mut table = Vec::new();
        for ((i, j), supp) in &self.table {
            // Suppress entries that are exact mirrors of an i < j entry.
            if self.kind == Kind::Lie && i > j {
                let mirror: Vec<(usize, Rat)> = self
                    .product_of_basis(*j, *i)
                    .iter()
                    .map(|(k, c)| (*k, -c.clone()))
                    .collect();
                if mirror == *supp {
                    continue;
                }
            }
            for (k, c) in supp {
                table.push((*i, *j, *k, format_rat(c)));
            }
        }
        let file = AlgebraFile {
            dim: self.dim,
            kind: self.kind,
            labels: self.labels.clone(),
            table,
            grading: self.grading.clone(),
        };
        serde_json::to_string_pretty(&file).expect("algebra serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Algebra> {
        let file: AlgebraFile =
            serde_json::from_str(s).map_err(|e| Error::BadFile(e.to_string()))?;
        let mut entries = Vec::with_capacity(file.table.len());
        for (i, j, k, c) in file.table {
            entries.push((i, j, k, parse_rat(&c)?));
        }
        Algebra::new(file.dim, file.kind, entries, Some(file.labels), file.grading)
    }
}
