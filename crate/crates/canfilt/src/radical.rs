//! Radicals, series, centers, and annihilators over ℚ.
//!
//! Semistability of an algebra is equivalent to semisimplicity, so these
//! computations are the closed-form side of the canonical-filtration
//! problem. Over ℚ both radicals reduce to exact linear algebra:
//!
//! * Jacobson radical of an associative algebra: adjoin a unit, take the
//!   kernel of the trace form `τ(x, y) = Tr(L_x L_y)` of the regular
//!   representation, and intersect back. (`τ(x, xᵐ) = Tr(L_x^{m+1}) = 0`
//!   forces `L_x` nilpotent by Newton's identities, so the kernel is a nil
//!   ideal; conversely nil ideals are `τ`-isotropic.)
//! * Solvable radical of a Lie algebra: the orthogonal complement of
//!   `[L, L]` under the Killing form, by Cartan's criterion.
//!
//! Quasi-regularity, the defining property of the Jacobson radical, is not
//! directly computable; it is used here only through the a-posteriori
//! verification that the result is a nilpotent (resp. solvable) ideal with
//! semisimple quotient.

use num_traits::Zero;

use crate::algebra::{Algebra, Kind};
use crate::filtration::FlagFiltration;
use crate::linalg::Matrix;
use crate::rational::{rat_int, Rat};
use crate::subspace::Subspace;
use crate::{Error, Result};

/// A descending chain of ideals (derived or lower central series).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealChain {
    pub steps: Vec<Subspace>,
}

impl IdealChain {
    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(Subspace::dim).collect()
    }

    /// Whether the chain ends at the zero subspace.
    pub fn terminates(&self) -> bool {
        self.steps.last().is_some_and(Subspace::is_zero)
    }
}

/// The unitization `A# = ℚ ⋉ A`, with the adjoined unit as the *last*
/// basis vector so `A` keeps coordinates `0..d`.
pub fn unitize(a: &Algebra) -> Result<Algebra> {
    if a.kind() != Kind::Associative {
        return Err(Error::KindMismatch { expected: Kind::Associative });
    }
    let d = a.dim();
    let mut entries: Vec<(usize, usize, usize, Rat)> = Vec::new();
    for ((i, j), supp) in a.table() {
        for (k, c) in supp {
            entries.push((*i, *j, *k, c.clone()));
        }
    }
    entries.push((d, d, d, rat_int(1)));
    for i in 0..d {
        entries.push((d, i, i, rat_int(1)));
        entries.push((i, d, i, rat_int(1)));
    }
    let mut labels = a.labels().to_vec();
    labels.push("1#".to_string());
    Algebra::new(d + 1, Kind::Associative, entries, Some(labels), None)
}

/// Gram matrix of the trace form `τ(e_i, e_j) = Tr(L_i L_j)`, assembled
/// sparsely: `Tr(L_i L_j) = Σ_{l,k} c_{i,l}^k c_{j,k}^l`, so each pair of
/// table entries `(i,l)→k` and `(j,k)→l` contributes one product.
fn trace_form_gram(a: &Algebra) -> Matrix {
    let d = a.dim();
    // (second argument, output) -> [(first argument, coefficient)]
    let mut by_second_output: std::collections::BTreeMap<(usize, usize), Vec<(usize, Rat)>> =
        std::collections::BTreeMap::new();
    for ((j, k), supp) in a.table() {
        for (l, c) in supp {
            by_second_output.entry((*k, *l)).or_default().push((*j, c.clone()));
        }
    }
    let mut g = Matrix::zero(d, d);
    for ((i, l), supp) in a.table() {
        for (k, c) in supp {
            if let Some(matches) = by_second_output.get(&(*k, *l)) {
                for (j, c2) in matches {
                    let t = c * c2;
                    g.rows[*i][*j] += t;
                }
            }
        }
    }
    g
}

/// `J(A)` for an associative algebra over ℚ, via the trace form of the
/// unitization. The result is verified to be a nilpotent ideal whose
/// quotient has zero radical.
pub fn jacobson_radical(a: &Algebra) -> Result<Subspace> {
    jacobson_inner(a, true)
}

fn jacobson_inner(a: &Algebra, verify: bool) -> Result<Subspace> {
    if a.kind() != Kind::Associative {
        return Err(Error::KindMismatch { expected: Kind::Associative });
    }
    let sharp = unitize(a)?;
    let gram = trace_form_gram(&sharp);
    let kernel = Subspace::from_spanning(sharp.dim(), gram.kernel_basis());
    let inside = kernel.intersect(&Subspace::from_coordinates(
        sharp.dim(),
        &(0..a.dim()).collect::<Vec<_>>(),
    ));
    let rows: Vec<Vec<Rat>> = inside
        .basis()
        .iter()
        .map(|v| v[..a.dim()].to_vec())
        .collect();
    let rad = Subspace::from_spanning(a.dim(), rows);
    if verify {
        verify_nilpotent_ideal(a, &rad)?;
        let quotient = rad.quotient_unchecked(a)?;
        if !jacobson_inner(&quotient, false)?.is_zero() {
            return Err(Error::RadicalVerification("quotient has nonzero radical"));
        }
    }
    Ok(rad)
}

fn verify_nilpotent_ideal(a: &Algebra, rad: &Subspace) -> Result<()> {
    if !rad.is_ideal(a)? {
        return Err(Error::RadicalVerification("radical is not an ideal"));
    }
    let mut power = rad.clone();
    for _ in 0..=a.dim() {
        if power.is_zero() {
            return Ok(());
        }
        power = power.product(a, rad)?;
    }
    Err(Error::RadicalVerification("radical is not nilpotent"))
}

/// Gram matrix of the Killing form `κ(e_i, e_j) = Tr(ad_i ad_j)`.
pub fn killing_gram(l: &Algebra) -> Result<Matrix> {
    if l.kind() != Kind::Lie {
        return Err(Error::KindMismatch { expected: Kind::Lie });
    }
    Ok(trace_form_gram(l))
}

/// The solvable radical of a Lie algebra over ℚ: `[L, L]^⊥` under the
/// Killing form (Cartan's criterion). Verified to be a solvable ideal with
/// semisimple quotient.
pub fn lie_radical(l: &Algebra) -> Result<Subspace> {
    lie_radical_inner(l, true)
}

fn lie_radical_inner(l: &Algebra, verify: bool) -> Result<Subspace> {
    let gram = killing_gram(l)?;
    let full = Subspace::full(l.dim());
    let derived = full.product(l, &full)?;
    // x ∈ rad  ⟺  κ(x, v) = 0 for every v spanning [L, L].
    let rad = if derived.is_zero() {
        full
    } else {
        let rows: Vec<Vec<Rat>> = derived.basis().iter().map(|v| gram.mat_vec(v)).collect();
        Subspace::from_spanning(l.dim(), Matrix::new(rows).kernel_basis())
    };
    if verify {
        if !rad.is_ideal(l)? {
            return Err(Error::RadicalVerification("radical is not an ideal"));
        }
        if !rad.is_zero() {
            let sub = rad.subalgebra(l)?;
            if !derived_series(&sub)?.terminates() {
                return Err(Error::RadicalVerification("radical is not solvable"));
            }
        }
        let quotient = rad.quotient_unchecked(l)?;
        if !lie_radical_inner(&quotient, false)?.is_zero() {
            return Err(Error::RadicalVerification("quotient has nonzero radical"));
        }
    }
    Ok(rad)
}

/// The radical appropriate to the kind.
pub fn radical(a: &Algebra) -> Result<Subspace> {
    match a.kind() {
        Kind::Associative => jacobson_radical(a),
        Kind::Lie => lie_radical(a),
    }
}

/// `S_0 = A ⊇ S_1 = μ(S_0, S_0) ⊇ ...` until the chain stabilizes.
pub fn derived_series(a: &Algebra) -> Result<IdealChain> {
    let mut steps = vec![Subspace::full(a.dim())];
    loop {
        let last = steps.last().unwrap();
        let next = last.product(a, last)?;
        if &next == last {
            break;
        }
        steps.push(next);
        if steps.last().unwrap().is_zero() {
            break;
        }
    }
    Ok(IdealChain { steps })
}

/// `C_0 = A ⊇ C_1 = μ(A, C_0) + μ(C_0, A) ⊇ ...` until stable.
pub fn lower_central_series(a: &Algebra) -> Result<IdealChain> {
    let full = Subspace::full(a.dim());
    let mut steps = vec![full.clone()];
    loop {
        let last = steps.last().unwrap();
        let next = full.product(a, last)?.sum(&last.product(a, &full)?);
        if &next == last {
            break;
        }
        steps.push(next);
        if steps.last().unwrap().is_zero() {
            break;
        }
    }
    Ok(IdealChain { steps })
}

/// Rows of the maps `x ↦ μ(e_j, x)` indexed by `(j, output)`, built from
/// the table so only nonzero rows materialize.
fn left_action_rows(a: &Algebra) -> std::collections::BTreeMap<(usize, usize), Vec<Rat>> {
    let mut rows: std::collections::BTreeMap<(usize, usize), Vec<Rat>> =
        std::collections::BTreeMap::new();
    for ((j, i), supp) in a.table() {
        for (k, c) in supp {
            rows.entry((*j, *k)).or_insert_with(|| vec![Rat::zero(); a.dim()])[*i] +=
                c.clone();
        }
    }
    rows
}

/// Rows of the maps `x ↦ μ(x, e_j)` indexed by `(j, output)`.
fn right_action_rows(a: &Algebra) -> std::collections::BTreeMap<(usize, usize), Vec<Rat>> {
    let mut rows: std::collections::BTreeMap<(usize, usize), Vec<Rat>> =
        std::collections::BTreeMap::new();
    for ((i, j), supp) in a.table() {
        for (k, c) in supp {
            rows.entry((*j, *k)).or_insert_with(|| vec![Rat::zero(); a.dim()])[*i] +=
                c.clone();
        }
    }
    rows
}

fn kernel_of_rows(dim: usize, rows: Vec<Vec<Rat>>) -> Subspace {
    let rows: Vec<Vec<Rat>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    if rows.is_empty() {
        return Subspace::full(dim);
    }
    Subspace::from_spanning(dim, Matrix::new(rows).kernel_basis())
}

/// `{x : μ(x, y) = μ(y, x) for all y}`.
pub fn center(a: &Algebra) -> Result<Subspace> {
    let d = a.dim();
    let left = left_action_rows(a);
    let mut diff = right_action_rows(a);
    for (key, row) in left {
        let slot = diff.entry(key).or_insert_with(|| vec![Rat::zero(); d]);
        for (x, y) in slot.iter_mut().zip(&row) {
            *x -= y;
        }
    }
    Ok(kernel_of_rows(d, diff.into_values().collect()))
}

/// `{x : μ(x, y) = μ(y, x) = 0 for all y}`.
pub fn annihilator(a: &Algebra) -> Result<Subspace> {
    let mut rows: Vec<Vec<Rat>> = left_action_rows(a).into_values().collect();
    rows.extend(right_action_rows(a).into_values());
    Ok(kernel_of_rows(a.dim(), rows))
}

/// Semistable ⟺ semisimple ⟺ zero radical.
pub fn is_semistable(a: &Algebra) -> Result<bool> {
    Ok(radical(a)?.is_zero())
}

/// The weighted radical-adic flag `A ⊇ J ⊇ J² ⊇ ...` with weights
/// `0, 1, 2, ...`; a destabilizing witness for any unstable algebra.
/// `None` when the algebra is semistable.
pub fn destabilizing_witness(a: &Algebra) -> Result<Option<FlagFiltration>> {
    let rad = radical(a)?;
    if rad.is_zero() {
        return Ok(None);
    }
    let mut steps = vec![(Subspace::full(a.dim()), rat_int(0))];
    let mut power = rad.clone();
    let mut weight = 1i64;
    while !power.is_zero() {
        steps.push((power.clone(), rat_int(weight)));
        power = power.product(a, &rad)?;
        weight += 1;
    }
    Ok(Some(FlagFiltration { steps }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;
    use crate::rational::rat_int;
    use num_traits::One;

    fn truncated(n: usize) -> Algebra {
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    entries.push((i, j, i + j, Rat::one()));
                }
            }
        }
        Algebra::new(n, Kind::Associative, entries, None, None).unwrap()
    }

    /// Mat_n on the basis E_{pq}, row-major.
    fn matrix_algebra(n: usize) -> Algebra {
        let idx = |p: usize, q: usize| p * n + q;
        let mut entries = Vec::new();
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    entries.push((idx(p, q), idx(q, r), idx(p, r), Rat::one()));
                }
            }
        }
        Algebra::new(n * n, Kind::Associative, entries, None, None).unwrap()
    }

    /// Upper-triangular 2x2 on (E11, E12, E22).
    fn upper_triangular_2() -> Algebra {
        let e = vec![
            (0, 0, 0, Rat::one()), // E11 E11 = E11
            (0, 1, 1, Rat::one()), // E11 E12 = E12
            (1, 2, 1, Rat::one()), // E12 E22 = E12
            (2, 2, 2, Rat::one()), // E22 E22 = E22
        ];
        Algebra::new(3, Kind::Associative, e, None, None).unwrap()
    }

    fn sl2() -> Algebra {
        // Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
        let e = vec![
            (0, 1, 2, rat_int(1)),
            (2, 0, 0, rat_int(2)),
            (2, 1, 1, rat_int(-2)),
        ];
        Algebra::new(3, Kind::Lie, e, None, None).unwrap()
    }

    fn heisenberg() -> Algebra {
        Algebra::new(3, Kind::Lie, vec![(0, 1, 2, Rat::one())], None, None).unwrap()
    }

    fn abelian(n: usize) -> Algebra {
        Algebra::new(n, Kind::Lie, Vec::new(), None, None).unwrap()
    }

    #[test]
    fn jacobson_examples() {
        assert!(jacobson_radical(&matrix_algebra(2)).unwrap().is_zero());
        assert!(jacobson_radical(&matrix_algebra(3)).unwrap().is_zero());

        let rad = jacobson_radical(&truncated(3)).unwrap();
        assert_eq!(rad, Subspace::from_coordinates(3, &[1, 2]));

        let rad = jacobson_radical(&upper_triangular_2()).unwrap();
        assert_eq!(rad, Subspace::from_coordinates(3, &[1]));

        assert!(jacobson_radical(&sl2()).is_err());
    }

    #[test]
    fn lie_radical_examples() {
        assert!(lie_radical(&sl2()).unwrap().is_zero());
        assert_eq!(lie_radical(&abelian(4)).unwrap().dim(), 4);
        // 2-dim non-abelian [x,y] = y is solvable: radical is everything.
        let solv =
            Algebra::new(2, Kind::Lie, vec![(0, 1, 1, Rat::one())], None, None).unwrap();
        assert_eq!(lie_radical(&solv).unwrap().dim(), 2);
        assert!(derived_series(&solv).unwrap().terminates());
        assert!(lie_radical(&truncated(2)).is_err());
    }

    #[test]
    fn series_examples() {
        let ab = abelian(3);
        assert_eq!(derived_series(&ab).unwrap().dims(), vec![3, 0]);

        // Model filiform M_3: lower central dims (4, 2, 1, 0).
        let m3 = Algebra::new(
            4,
            Kind::Lie,
            vec![(0, 1, 2, Rat::one()), (0, 2, 3, Rat::one())],
            None,
            None,
        )
        .unwrap();
        assert_eq!(lower_central_series(&m3).unwrap().dims(), vec![4, 2, 1, 0]);

        // Heisenberg derived series (L, span z, 0).
        assert_eq!(derived_series(&heisenberg()).unwrap().dims(), vec![3, 1, 0]);

        // Semisimple: the series stabilizes at the whole algebra.
        assert_eq!(derived_series(&sl2()).unwrap().dims(), vec![3]);
    }

    #[test]
    fn center_and_annihilator_examples() {
        let z = center(&matrix_algebra(2)).unwrap();
        assert_eq!(z.dim(), 1);
        // Scalar matrices: E11 + E22 at indices 0 and 3.
        assert!(z.contains(&[rat_int(1), rat_int(0), rat_int(0), rat_int(1)]));

        // span(x, x²) inside k[x]/(x³) as a standalone non-unital algebra.
        let nil = Subspace::from_coordinates(3, &[1, 2])
            .subalgebra(&truncated(3))
            .unwrap();
        let ann = annihilator(&nil).unwrap();
        assert_eq!(ann, Subspace::from_coordinates(2, &[1]));

        // Unital algebras annihilate nothing.
        assert!(annihilator(&truncated(3)).unwrap().is_zero());
        assert!(annihilator(&matrix_algebra(2)).unwrap().is_zero());
    }

    #[test]
    fn semistability_examples() {
        assert!(is_semistable(&matrix_algebra(3)).unwrap());
        assert!(is_semistable(&sl2()).unwrap());
        assert!(!is_semistable(&truncated(3)).unwrap());
        assert!(!is_semistable(&abelian(2)).unwrap());
        assert!(!is_semistable(&heisenberg()).unwrap());

        // The destabilizing witness is the weighted radical-adic flag.
        let flag = destabilizing_witness(&truncated(3)).unwrap().unwrap();
        assert_eq!(flag.steps.len(), 3);
        assert!(crate::filtration::flag_is_compatible(&truncated(3), &flag).unwrap());
        assert!(destabilizing_witness(&matrix_algebra(2)).unwrap().is_none());
    }

    #[test]
    fn quotient_by_radical_is_semisimple() {
        let a = upper_triangular_2();
        let rad = jacobson_radical(&a).unwrap();
        let q = rad.quotient(&a).unwrap();
        assert!(q.validate().is_empty());
        assert!(jacobson_radical(&q).unwrap().is_zero());
    }
}
