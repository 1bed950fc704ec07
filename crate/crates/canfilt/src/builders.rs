//! Generators for the example families: truncated polynomial rings,
//! monomial quotients, block upper triangular matrix algebras, model
//! filiform Lie algebras, nilpotent parts of sl, trivial extensions and
//! triangular algebras, plus the small standards (Heisenberg, abelian,
//! full matrix algebras, direct sums).
//!
//! Each builder returns the algebra *with* its grading and a default
//! variable grouping carrying the symmetry justification the grouping
//! relies on. Basis orders are deterministic and part of the file-format
//! contract: monomial bases are degree-lexicographic, matrix-unit bases
//! are sorted by `(row, column)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind, Table};
use crate::qp::Grouping;
use crate::rational::{parse_rat, Rat};
use crate::{Error, Result};

/// An algebra together with the default grouping for its canonical
/// filtration computation.
#[derive(Debug, Clone)]
pub struct Built {
    pub algebra: Algebra,
    pub grouping: Grouping,
}

fn variable_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

fn monomial_label(names: &[String], exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (name, &e) in names.iter().zip(exps) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn divides(gen: &[u32], mono: &[u32]) -> bool {
    gen.iter().zip(mono).all(|(g, m)| g <= m)
}

/// `𝕜[x_1..x_n] / I` for a monomial ideal `I`. The basis is the staircase
/// of standard monomials in degree-lexicographic order, graded by exponent
/// vectors. Errors when some variable has no pure power in the ideal
/// (infinite-dimensional quotient).
pub fn monomial_quotient(n_vars: usize, generators: &[Vec<u32>]) -> Result<Built> {
    if n_vars == 0 {
        return Err(Error::BuilderBounds("need at least one variable".into()));
    }
    for g in generators {
        if g.len() != n_vars {
            return Err(Error::BuilderBounds(format!(
                "generator exponent vector of length {} for {n_vars} variables",
                g.len()
            )));
        }
        if g.iter().all(|&e| e == 0) {
            return Err(Error::BuilderBounds("the unit generates the whole ideal".into()));
        }
    }
    for v in 0..n_vars {
        let pure = generators
            .iter()
            .any(|g| g.iter().enumerate().all(|(i, &e)| i == v || e == 0));
        if !pure {
            return Err(Error::InfiniteDimensional(v));
        }
    }
    // Standard monomials are downward closed; walk the staircase.
    let mut seen: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
    let mut queue = vec![vec![0u32; n_vars]];
    while let Some(m) = queue.pop() {
        if seen.contains_key(&m) || generators.iter().any(|g| divides(g, &m)) {
            continue;
        }
        seen.insert(m.clone(), ());
        for v in 0..n_vars {
            let mut next = m.clone();
            next[v] += 1;
            queue.push(next);
        }
    }
    let mut basis: Vec<Vec<u32>> = seen.into_keys().collect();
    basis.sort_by(|a, b| {
        let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let index: BTreeMap<&Vec<u32>, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let mut entries = Vec::new();
    for (i, mi) in basis.iter().enumerate() {
        for (j, mj) in basis.iter().enumerate() {
            let sum: Vec<u32> = mi.iter().zip(mj).map(|(a, b)| a + b).collect();
            if let Some(&k) = index.get(&sum) {
                entries.push((i, j, k, Rat::one()));
            }
        }
    }
    let names = variable_names(n_vars);
    let labels = basis.iter().map(|m| monomial_label(&names, m)).collect();
    let grading = basis
        .iter()
        .map(|m| m.iter().map(|&e| e as i64).collect())
        .collect();
    let dim = basis.len();
    let algebra = Algebra::new(dim, Kind::Associative, entries, Some(labels), Some(grading))?;
    let mut grouping = Grouping::identity(dim);
    // The unit has weight 0 in any monomial canonical filtration.
    grouping.pinned.insert(0);
    Ok(Built { algebra, grouping })
}

/// `S_{n,r} = 𝕜[x_1..x_n]/𝔪^r` with the total-degree grouping: one weight
/// variable per degree `0..r`, degree 0 pinned, group sizes the binomial
/// counts of monomials.
pub fn truncated_poly(n_vars: usize, order: u32) -> Result<Built> {
    if n_vars < 1 || order < 2 {
        return Err(Error::BuilderBounds(format!(
            "truncated polynomial ring needs n >= 1, r >= 2, got ({n_vars}, {order})"
        )));
    }
    let generators: Vec<Vec<u32>> = compositions(n_vars, order);
    let built = monomial_quotient(n_vars, &generators)?;
    let grouping = Grouping::by_total_degree(&built.algebra)?;
    Ok(Built { algebra: built.algebra, grouping })
}

/// All exponent vectors of total degree exactly `d`.
fn compositions(n_vars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(v: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v + 1 == cur.len() {
            cur[v] = rest;
            out.push(cur.clone());
            return;
        }
        for e in 0..=rest {
            cur[v] = e;
            rec(v + 1, rest - e, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n_vars];
    rec(0, d, &mut cur, &mut out);
    out
}

/// Block upper triangular matrices for block sizes `n_list`. Basis: matrix
/// units `E(p,q)` with `block(p) <= block(q)`, sorted by `(p, q)`; graded
/// over Z^s by `e_{block(q)} - e_{block(p)}`; grouped one variable per
/// block with the diagonal blocks pinned to weight 0.
pub fn block_triangular(n_list: &[usize]) -> Result<Built> {
    if n_list.is_empty() || n_list.contains(&0) {
        return Err(Error::BuilderBounds("block sizes must be positive".into()));
    }
    let s = n_list.len();
    let total: usize = n_list.iter().sum();
    let block_of = {
        let mut b = Vec::with_capacity(total);
        for (bi, &sz) in n_list.iter().enumerate() {
            b.extend(std::iter::repeat_n(bi, sz));
        }
        b
    };
    let mut basis: Vec<(usize, usize)> = Vec::new();
    for p in 0..total {
        for q in 0..total {
            if block_of[p] <= block_of[q] {
                basis.push((p, q));
            }
        }
    }
    basis.sort_unstable();
    let index: BTreeMap<(usize, usize), usize> =
        basis.iter().enumerate().map(|(i, &pq)| (pq, i)).collect();
    let mut entries = Vec::new();
    for (i, &(p, q)) in basis.iter().enumerate() {
        for (j, &(r, t)) in basis.iter().enumerate() {
            if q == r {
                if let Some(&k) = index.get(&(p, t)) {
                    entries.push((i, j, k, Rat::one()));
                }
            }
        }
    }
    let labels = basis
        .iter()
        .map(|&(p, q)| format!("E({},{})", p + 1, q + 1))
        .collect();
    let grading = basis
        .iter()
        .map(|&(p, q)| {
            let mut v = vec![0i64; s];
            v[block_of[q]] += 1;
            v[block_of[p]] -= 1;
            v
        })
        .collect();
    let algebra = Algebra::new(
        basis.len(),
        Kind::Associative,
        entries,
        Some(labels),
        Some(grading),
    )?;
    let grouping = Grouping::by_degree_vector(&algebra)?;
    Ok(Built { algebra, grouping })
}

/// The full matrix algebra `Mat_n(Q)`: a single diagonal block.
pub fn full_matrix(n: usize) -> Result<Built> {
    block_triangular(&[n])
}

/// The model filiform Lie algebra `M_n` on a Vergne basis `x_0, ..., x_n`:
/// the only nonzero brackets are `[x_0, x_i] = x_{i+1}` for
/// `1 <= i <= n-1`. Graded by `deg(x_0) = 1`, `deg(x_i) = i`; a Vergne
/// basis is adapted to the canonical filtration thanks to the
/// automorphisms `x_0 -> x_0 + c x_1`.
pub fn model_filiform(n: usize) -> Result<Built> {
    if n < 2 {
        return Err(Error::BuilderBounds(format!("model filiform needs n >= 2, got {n}")));
    }
    let dim = n + 1;
    let entries = (1..n).map(|i| (0, i, i + 1, Rat::one()));
    let labels = (0..dim).map(|i| format!("x{i}")).collect();
    let grading = (0..dim)
        .map(|i| vec![if i == 0 { 1 } else { i as i64 }])
        .collect();
    let algebra = Algebra::new(dim, Kind::Lie, entries, Some(labels), Some(grading))?;
    let mut grouping = Grouping::identity(dim);
    grouping.symmetry = Some("vergne basis automorphisms".to_string());
    Ok(Built { algebra, grouping })
}

/// The automorphism `x_0 -> x_0 + c x_1` of `M_n`, fixing the other Vergne
/// basis vectors; columns are images of basis vectors.
pub fn filiform_automorphism(n: usize, c: &Rat) -> crate::linalg::Matrix {
    let mut p = crate::linalg::Matrix::identity(n + 1);
    p.rows[1][0] = c.clone();
    p
}

/// The nilpotent part of `sl_{n+1}`: strictly upper triangular
/// `(n+1)x(n+1)` matrices under the commutator, with the root grading
/// `deg E(i,j) = e_i - e_j` in Z^{n+1} (all root spaces one-dimensional).
pub fn sl_nilpotent(n: usize) -> Result<Built> {
    if n < 1 {
        return Err(Error::BuilderBounds(format!("sl nilpotent part needs n >= 1, got {n}")));
    }
    let size = n + 1;
    let mut basis: Vec<(usize, usize)> = Vec::new();
    for i in 0..size {
        for j in (i + 1)..size {
            basis.push((i, j));
        }
    }
    let index: BTreeMap<(usize, usize), usize> =
        basis.iter().enumerate().map(|(x, &ij)| (ij, x)).collect();
    let mut entries = Vec::new();
    for (a, &(i, j)) in basis.iter().enumerate() {
        for (b, &(k, l)) in basis.iter().enumerate() {
            if a == b {
                continue;
            }
            // [E_ij, E_kl] = d_jk E_il - d_li E_kj
            if j == k {
                entries.push((a, b, index[&(i, l)], Rat::one()));
            }
            if l == i {
                entries.push((a, b, index[&(k, j)], -Rat::one()));
            }
        }
    }
    let labels = basis
        .iter()
        .map(|&(i, j)| format!("E({},{})", i + 1, j + 1))
        .collect();
    let grading = basis
        .iter()
        .map(|&(i, j)| {
            let mut v = vec![0i64; size];
            v[i] += 1;
            v[j] -= 1;
            v
        })
        .collect();
    let algebra = Algebra::new(
        basis.len(),
        Kind::Lie,
        entries,
        Some(labels),
        Some(grading),
    )?;
    Ok(Built { algebra, grouping: Grouping::identity(basis.len()) })
}

/// The 3-dimensional Heisenberg Lie algebra `[x, y] = z`.
pub fn heisenberg() -> Built {
    let algebra = Algebra::new(
        3,
        Kind::Lie,
        vec![(0, 1, 2, Rat::one())],
        Some(vec!["x".into(), "y".into(), "z".into()]),
        Some(vec![vec![1], vec![1], vec![2]]),
    )
    .expect("fixed table");
    Built { algebra, grouping: Grouping::identity(3) }
}

/// The abelian Lie algebra of dimension `n`.
pub fn abelian(n: usize) -> Result<Built> {
    if n == 0 {
        return Err(Error::BuilderBounds("abelian algebra needs dim >= 1".into()));
    }
    let algebra = Algebra::new(n, Kind::Lie, Vec::new(), None, Some(vec![vec![0]; n]))?;
    Ok(Built { algebra, grouping: Grouping::identity(n) })
}

/// A bimodule over one or two associative algebras, given by sparse action
/// tables. Axioms are verified by validating the assembled extension
/// algebra, whose associator conditions on mixed triples are exactly the
/// bimodule axioms.
#[derive(Debug, Clone, Default)]
pub struct Bimodule {
    pub dim: usize,
    /// `(algebra index, module index) -> action`, for the left action.
    pub left: Table,
    /// `(module index, algebra index) -> action`, for the right action.
    pub right: Table,
}

impl Bimodule {
    /// The regular bimodule: the algebra acting on itself.
    pub fn regular(a: &Algebra) -> Bimodule {
        Bimodule { dim: a.dim(), left: a.table().clone(), right: a.table().clone() }
    }
}

/// The trivial extension `A x0 M` with `(a, m)(a', m') = (aa', am' + ma')`,
/// laid out `[A | M]`, graded with `A` in degree 0 and `M` in degree 1.
pub fn trivial_extension(a: &Algebra, m: &Bimodule) -> Result<Built> {
    if a.kind() != Kind::Associative {
        return Err(Error::KindMismatch { expected: Kind::Associative });
    }
    let da = a.dim();
    let mut entries = Vec::new();
    for ((i, j), supp) in a.table() {
        for (k, c) in supp {
            entries.push((*i, *j, *k, c.clone()));
        }
    }
    for ((i, j), supp) in &m.left {
        for (k, c) in supp {
            entries.push((*i, da + j, da + k, c.clone()));
        }
    }
    for ((j, i), supp) in &m.right {
        for (k, c) in supp {
            entries.push((da + j, *i, da + k, c.clone()));
        }
    }
    let mut labels = a.labels().to_vec();
    labels.extend((0..m.dim).map(|i| format!("m{i}")));
    let mut grading = vec![vec![0i64]; da];
    grading.extend(vec![vec![1i64]; m.dim]);
    let algebra =
        Algebra::new(da + m.dim, Kind::Associative, entries, Some(labels), Some(grading))?;
    let violations = algebra.validate();
    if !violations.is_empty() {
        return Err(Error::BimoduleAxiom(violations[0].to_string()));
    }
    let mut classes = vec![0usize; da];
    classes.extend(vec![1usize; m.dim]);
    let grouping = Grouping {
        classes,
        pinned: [0].into_iter().collect(),
        symmetry: Some("trivial extension derivation".to_string()),
    };
    Ok(Built { algebra, grouping })
}

/// The triangular algebra `T(A, M, B)` of matrices `[a m; 0 b]`, laid out
/// `[A | M | B]`, graded with `A, B` in degree 0 and `M` in degree 1.
pub fn triangular_algebra(a: &Algebra, b: &Algebra, m: &Bimodule) -> Result<Built> {
    if a.kind() != Kind::Associative || b.kind() != Kind::Associative {
        return Err(Error::KindMismatch { expected: Kind::Associative });
    }
    let (da, dm) = (a.dim(), m.dim);
    let mut entries = Vec::new();
    for ((i, j), supp) in a.table() {
        for (k, c) in supp {
            entries.push((*i, *j, *k, c.clone()));
        }
    }
    for ((i, j), supp) in b.table() {
        for (k, c) in supp {
            entries.push((da + dm + i, da + dm + j, da + dm + k, c.clone()));
        }
    }
    for ((i, j), supp) in &m.left {
        for (k, c) in supp {
            entries.push((*i, da + j, da + k, c.clone()));
        }
    }
    for ((j, i), supp) in &m.right {
        for (k, c) in supp {
            entries.push((da + j, da + dm + i, da + k, c.clone()));
        }
    }
    let mut labels = a.labels().to_vec();
    labels.extend((0..dm).map(|i| format!("m{i}")));
    labels.extend(b.labels().iter().map(|l| format!("{l}'")));
    let mut grading = vec![vec![0i64]; da];
    grading.extend(vec![vec![1i64]; dm]);
    grading.extend(vec![vec![0i64]; b.dim()]);
    let algebra = Algebra::new(
        da + dm + b.dim(),
        Kind::Associative,
        entries,
        Some(labels),
        Some(grading),
    )?;
    let violations = algebra.validate();
    if !violations.is_empty() {
        return Err(Error::BimoduleAxiom(violations[0].to_string()));
    }
    let mut classes = vec![0usize; da];
    classes.extend(vec![1usize; dm]);
    classes.extend(vec![2usize; b.dim()]);
    let grouping = Grouping {
        classes,
        pinned: [0, 2].into_iter().collect(),
        symmetry: Some("triangular algebra derivation".to_string()),
    };
    Ok(Built { algebra, grouping })
}

// ---------------------------------------------------------------------------
// Declarative builder specs
// ---------------------------------------------------------------------------

/// Serializable description of a builder invocation; nested specs cover
/// extensions and direct sums.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum BuilderSpec {
    TruncatedPoly { n_vars: usize, order: u32 },
    MonomialQuotient { n_vars: usize, generators: Vec<Vec<u32>> },
    BlockTriangular { blocks: Vec<usize> },
    FullMatrix { size: usize },
    ModelFiliform { n: usize },
    SlNilpotent { n: usize },
    TrivialExtension { base: Box<BuilderSpec>, bimodule: BimoduleSpec },
    TriangularAlgebra {
        left: Box<BuilderSpec>,
        right: Box<BuilderSpec>,
        bimodule: BimoduleSpec,
    },
    Heisenberg,
    Abelian { dim: usize },
    DirectSum { parts: Vec<BuilderSpec> },
}

/// Bimodule description inside a [`BuilderSpec`]: the regular bimodule, or
/// explicit sparse action tables with rational string coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BimoduleSpec {
    Regular,
    Tables {
        dim: usize,
        left: Vec<(usize, usize, usize, String)>,
        right: Vec<(usize, usize, usize, String)>,
    },
}

impl BimoduleSpec {
    fn realize(&self, a: &Algebra, b: Option<&Algebra>) -> Result<Bimodule> {
        match self {
            BimoduleSpec::Regular => {
                if let Some(b) = b {
                    if b != a {
                        return Err(Error::BuilderBounds(
                            "a regular bimodule needs equal side algebras".into(),
                        ));
                    }
                }
                Ok(Bimodule::regular(a))
            }
            BimoduleSpec::Tables { dim, left, right } => {
                let parse = |raw: &Vec<(usize, usize, usize, String)>| -> Result<Table> {
                    let mut t: Table = BTreeMap::new();
                    for (i, j, k, c) in raw {
                        let c = parse_rat(c)?;
                        if !c.is_zero() {
                            t.entry((*i, *j)).or_default().push((*k, c));
                        }
                    }
                    Ok(t)
                };
                Ok(Bimodule { dim: *dim, left: parse(left)?, right: parse(right)? })
            }
        }
    }
}

impl BuilderSpec {
    pub fn build(&self) -> Result<Built> {
        match self {
            BuilderSpec::TruncatedPoly { n_vars, order } => truncated_poly(*n_vars, *order),
            BuilderSpec::MonomialQuotient { n_vars, generators } => {
                monomial_quotient(*n_vars, generators)
            }
            BuilderSpec::BlockTriangular { blocks } => block_triangular(blocks),
            BuilderSpec::FullMatrix { size } => full_matrix(*size),
            BuilderSpec::ModelFiliform { n } => model_filiform(*n),
            BuilderSpec::SlNilpotent { n } => sl_nilpotent(*n),
            BuilderSpec::TrivialExtension { base, bimodule } => {
                let inner = base.build()?;
                let m = bimodule.realize(&inner.algebra, None)?;
                trivial_extension(&inner.algebra, &m)
            }
            BuilderSpec::TriangularAlgebra { left, right, bimodule } => {
                let l = left.build()?;
                let r = right.build()?;
                let m = bimodule.realize(&l.algebra, Some(&r.algebra))?;
                triangular_algebra(&l.algebra, &r.algebra, &m)
            }
            BuilderSpec::Heisenberg => Ok(heisenberg()),
            BuilderSpec::Abelian { dim } => abelian(*dim),
            BuilderSpec::DirectSum { parts } => {
                let mut parts = parts.iter();
                let first = parts
                    .next()
                    .ok_or_else(|| Error::BuilderBounds("empty direct sum".into()))?
                    .build()?;
                let mut acc = first;
                for p in parts {
                    let next = p.build()?;
                    acc = Built {
                        algebra: acc.algebra.direct_sum(&next.algebra)?,
                        grouping: acc.grouping.direct_sum(&next.grouping),
                    };
                }
                Ok(acc)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut r = 1usize;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn monomial_quotient_examples() {
        let chain = monomial_quotient(1, &[vec![5]]).unwrap();
        assert_eq!(chain.algebra.dim(), 5);
        assert!(chain.algebra.validate().is_empty());
        assert_eq!(chain.algebra.labels()[2], "x^2");

        let small =
            monomial_quotient(2, &[vec![4, 0], vec![2, 1], vec![1, 2], vec![0, 4]]).unwrap();
        assert_eq!(small.algebra.dim(), 8);
        assert!(small.algebra.validate().is_empty());
        // Degree-lex basis: 1, x, y, x^2, xy, y^2, x^3, y^3.
        let labels: Vec<&str> = small.algebra.labels().iter().map(String::as_str).collect();
        assert_eq!(labels, vec!["1", "x", "y", "x^2", "x*y", "y^2", "x^3", "y^3"]);

        let point = monomial_quotient(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(point.algebra.dim(), 1);

        assert!(matches!(
            monomial_quotient(2, &[vec![1, 1]]),
            Err(Error::InfiniteDimensional(_))
        ));
    }

    #[test]
    fn truncated_poly_dimensions_and_groups() {
        let s24 = truncated_poly(2, 4).unwrap();
        assert_eq!(s24.algebra.dim(), 10); // 1 + 2 + 3 + 4
        let s64 = truncated_poly(6, 4).unwrap();
        let sizes = s64.grouping.group_sizes();
        assert_eq!(sizes, vec![1, 6, 21, 56]);
        assert_eq!(
            s64.algebra.dim(),
            (0..4).map(|i| binom(5 + i, i)).sum::<usize>()
        );
        assert_eq!(s64.grouping.pinned.iter().copied().collect::<Vec<_>>(), vec![0]);
        // (1, r) degenerates to the chain.
        let chain = truncated_poly(1, 5).unwrap();
        assert_eq!(chain.algebra.dim(), 5);
        assert!(truncated_poly(0, 4).is_err());
        assert!(truncated_poly(2, 1).is_err());
    }

    #[test]
    fn block_triangular_examples() {
        let ut3 = block_triangular(&[1, 1, 1]).unwrap();
        assert_eq!(ut3.algebra.dim(), 6);
        assert!(ut3.algebra.validate().is_empty());
        // One pinned group for the diagonal, one per off-diagonal block.
        assert_eq!(ut3.grouping.n_groups(), 4);
        assert_eq!(ut3.grouping.pinned.len(), 1);

        let m2 = full_matrix(2).unwrap();
        assert_eq!(m2.algebra.dim(), 4);
        assert!(m2.algebra.validate().is_empty());
        assert_eq!(m2.grouping.n_groups(), 1);
        assert_eq!(m2.grouping.pinned.len(), 1);

        let b21 = block_triangular(&[2, 1]).unwrap();
        assert_eq!(b21.algebra.dim(), 2 * 2 + 2 + 1);
        let sizes = b21.grouping.group_sizes();
        // Diagonal group (merged): 5 units; off-diagonal block: 2.
        assert_eq!(sizes.iter().sum::<usize>(), 7);
        assert!(sizes.contains(&2));
    }

    #[test]
    fn filiform_and_sl_examples() {
        let m3 = model_filiform(3).unwrap();
        assert_eq!(m3.algebra.dim(), 4);
        assert!(m3.algebra.validate().is_empty());
        assert_eq!(
            crate::radical::lower_central_series(&m3.algebra).unwrap().dims(),
            vec![4, 2, 1, 0]
        );

        let n2 = sl_nilpotent(2).unwrap();
        assert_eq!(n2.algebra.dim(), 3);
        assert!(n2.algebra.validate().is_empty());
        let n5 = sl_nilpotent(5).unwrap();
        assert_eq!(n5.algebra.dim(), 15);
        assert!(n5.algebra.validate().is_empty());

        // M_2 is isomorphic to the nilpotent part of sl_3 by permuting
        // (x0, x1, x2) onto (E12, E23, E13).
        let m2 = model_filiform(2).unwrap();
        let mut p = Matrix::zero(3, 3);
        p.rows[0][0] = Rat::one(); // x0 -> E(1,2) at index 0
        p.rows[2][1] = Rat::one(); // x1 -> E(2,3) at index 2
        p.rows[1][2] = Rat::one(); // x2 -> E(1,3) at index 1
        let moved = m2.algebra.change_of_basis(&p).unwrap();
        assert_eq!(moved.table(), n2.algebra.table());
    }

    #[test]
    fn filiform_automorphism_is_automorphism() {
        for n in [2usize, 4, 6] {
            let m = model_filiform(n).unwrap();
            let phi = filiform_automorphism(n, &crate::rational::rat(3, 2));
            assert!(m.algebra.is_automorphism(&phi).unwrap());
        }
    }

    #[test]
    fn extension_builders() {
        // A = k, M = k regular: the dual numbers.
        let k = full_matrix(1).unwrap().algebra;
        let dual = trivial_extension(&k, &Bimodule::regular(&k)).unwrap();
        assert_eq!(dual.algebra.dim(), 2);
        assert!(dual.algebra.validate().is_empty());
        assert!(dual.algebra.product_of_basis(1, 1).is_empty());

        // T(k, k, k) has the upper triangular 2x2 table in the layout
        // [A | M | B] = (E11, E12, E22).
        let t = triangular_algebra(&k, &k, &Bimodule::regular(&k)).unwrap();
        assert_eq!(t.algebra.dim(), 3);
        assert!(t.algebra.validate().is_empty());
        let ut2 = block_triangular(&[1, 1]).unwrap().algebra;
        assert_eq!(t.algebra.table(), ut2.table());

        // A = Mat_2, M = Mat_2 regular: dimension 8, radical M.
        let m2 = full_matrix(2).unwrap().algebra;
        let ext = trivial_extension(&m2, &Bimodule::regular(&m2)).unwrap();
        assert_eq!(ext.algebra.dim(), 8);
        assert!(ext.algebra.validate().is_empty());
        let rad = crate::radical::jacobson_radical(&ext.algebra).unwrap();
        assert_eq!(
            rad,
            crate::subspace::Subspace::from_coordinates(8, &[4, 5, 6, 7])
        );

        // A broken bimodule is rejected: a left action that is not
        // associative over the algebra product.
        let bad = Bimodule {
            dim: 1,
            left: [((0usize, 0usize), vec![(0usize, crate::rational::rat_int(2))])]
                .into_iter()
                .collect(),
            right: [((0usize, 0usize), vec![(0usize, Rat::one())])]
                .into_iter()
                .collect(),
        };
        assert!(matches!(
            trivial_extension(&k, &bad),
            Err(Error::BimoduleAxiom(_))
        ));
    }

    #[test]
    fn builder_spec_round_trip_and_direct_sum() {
        let spec = BuilderSpec::DirectSum {
            parts: vec![
                BuilderSpec::TruncatedPoly { n_vars: 1, order: 2 },
                BuilderSpec::FullMatrix { size: 2 },
            ],
        };
        let json = serde_json::to_string(&spec).unwrap();
        let back: BuilderSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
        let built = spec.build().unwrap();
        assert_eq!(built.algebra.dim(), 6);
        assert!(built.algebra.validate().is_empty());
        assert_eq!(built.grouping.classes.len(), 6);
        // Both the chain unit pin and the matrix block pin survive shifting.
        assert_eq!(built.grouping.pinned.len(), 2);
    }

    #[test]
    fn every_builder_output_validates() {
        let specs = vec![
            BuilderSpec::TruncatedPoly { n_vars: 2, order: 4 },
            BuilderSpec::MonomialQuotient {
                n_vars: 2,
                generators: vec![vec![4, 0], vec![2, 1], vec![1, 2], vec![0, 4]],
            },
            BuilderSpec::BlockTriangular { blocks: vec![2, 1] },
            BuilderSpec::FullMatrix { size: 3 },
            BuilderSpec::ModelFiliform { n: 5 },
            BuilderSpec::SlNilpotent { n: 3 },
            BuilderSpec::Heisenberg,
            BuilderSpec::Abelian { dim: 3 },
            BuilderSpec::TrivialExtension {
                base: Box::new(BuilderSpec::FullMatrix { size: 2 }),
                bimodule: BimoduleSpec::Regular,
            },
        ];
        for spec in specs {
            let built = spec.build().unwrap();
            assert!(
                built.algebra.validate().is_empty(),
                "builder output fails validation: {spec:?}"
            );
            built.grouping.check(built.algebra.dim()).unwrap();
        }
    }
}
