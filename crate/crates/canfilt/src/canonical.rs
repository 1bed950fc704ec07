//! Canonical destabilizing filtrations.
//!
//! The canonical filtration of an unstable algebra is the unique (up to
//! positive scaling) minimizer of `ν = -wt/‖F‖`; for a semistable algebra
//! it is trivial. This module computes it by the applicable route:
//!
//! * graded algebras: a single cone optimization on an adapted basis,
//!   valid when the diagonal grading lattice separates basis vectors or a
//!   declared symmetry justifies the grouping;
//! * semisimple algebras: trivial, cross-checked against the cone optimum;
//! * direct sums: compose the parts, scaling by `b₂ℓ₁` and `b₁ℓ₂`
//!   (`ℓ = wt`, `b = ‖·‖²` of each part's canonical filtration);
//! * Lie algebras: weight 0 on a complement of the solvable radical and
//!   the radical's own canonical weights inside it;
//! * trivial extensions `A ⋉₀ M` and triangular algebras `T(A, M, B)` of
//!   semisimple parts: weight 1 on `M`, weight 0 elsewhere.
//!
//! Every unstable result carries a KKT certificate for its weights on the
//! constraint cone of its adapted basis. `certify_canonical` checks an
//! externally proposed filtration, either through the one-dimensional
//! strict-flag criterion plus cone KKT, or through graded-semistability of
//! the associated graded algebra (the recognition route).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{Algebra, Kind};
use crate::filtration::{self, AdaptedFiltration, NuValue};
use crate::linalg::Matrix;
use crate::qp::{self, build_constraints, certify_weights, Grouping, QpCertificate};
use crate::radical;
use crate::rational::Rat;
use crate::subspace::Subspace;
use crate::{Error, Result};

/// Which route produced a canonical filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Semistable,
    GradedQp,
    DirectSum,
    ClosedForm,
    RadicalReduction,
}

/// A computed canonical filtration: primitive integer weights on an
/// adapted basis (the standard basis unless `adapted_basis` is set), the
/// exact ν key, and the KKT certificate for the weights on that basis's
/// constraint cone.
#[derive(Debug, Clone)]
pub struct CanonicalResult {
    pub weights: Vec<BigInt>,
    /// Rows of the adapted basis in the original coordinates; `None`
    /// means the standard basis.
    pub adapted_basis: Option<Vec<Vec<Rat>>>,
    /// `None` exactly for the trivial filtration of a semistable algebra.
    pub nu: Option<NuValue>,
    pub certificate: QpCertificate,
    pub method: Method,
}

impl CanonicalResult {
    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(Zero::is_zero)
    }

    pub fn filtration(&self) -> AdaptedFiltration {
        AdaptedFiltration::from_integers(&self.weights)
    }
}

fn finish_result(
    algebra_in_basis: &Algebra,
    weights: &[Rat],
    certificate: QpCertificate,
    method: Method,
    adapted_basis: Option<Vec<Vec<Rat>>>,
) -> Result<CanonicalResult> {
    let f = AdaptedFiltration::new(weights.to_vec());
    let prim = f.primitive();
    if prim.iter().all(Zero::is_zero) {
        return Ok(CanonicalResult {
            weights: prim,
            adapted_basis,
            nu: None,
            certificate,
            method: Method::Semistable,
        });
    }
    let prim_f = AdaptedFiltration::from_integers(&prim);
    let nu = filtration::nu(algebra_in_basis, &prim_f)?;
    assert!(
        nu.wt.is_positive(),
        "nontrivial canonical filtration must be destabilizing"
    );
    Ok(CanonicalResult { weights: prim, adapted_basis, nu: Some(nu), certificate, method })
}

/// Gate for computing the canonical filtration from a single basis cone.
/// With no declared symmetry, every class must be a singleton and the
/// diagonal grading lattice must separate all basis vectors; a declared
/// symmetry waives both (the builders declare block permutations, Vergne
/// automorphisms, and degree derivations where the reduction is valid).
fn validate_grouping(a: &Algebra, grouping: &Grouping) -> Result<()> {
    grouping.check(a.dim())?;
    if a.grading().is_none() {
        return Err(Error::MissingGrading);
    }
    if grouping.symmetry.is_some() {
        return Ok(());
    }
    if grouping.group_sizes().iter().any(|&s| s > 1) {
        return Err(Error::InvalidGrouping(
            "classes merging basis vectors need a declared symmetry".into(),
        ));
    }
    if !crate::grade::lattice_separates_basis(a) {
        return Err(Error::InvalidGrouping(
            "basis vectors not separated by any diagonal grading; \
             declare a symmetry or choose a coarser grouping"
                .into(),
        ));
    }
    Ok(())
}

/// Canonical filtration of a graded algebra by one exact cone
/// optimization. Returns the trivial filtration (method `Semistable`)
/// when the optimum is zero.
pub fn canonical_graded(a: &Algebra, grouping: &Grouping) -> Result<CanonicalResult> {
    validate_grouping(a, grouping)?;
    let cs = build_constraints(a, grouping)?;
    let cert = qp::solve(&cs);
    let weights: Vec<Rat> = grouping
        .classes
        .iter()
        .map(|&g| cert.w_star[g].clone())
        .collect();
    let mut result = finish_result(a, &weights, cert, Method::GradedQp, None)?;
    if result.is_trivial() {
        result.method = Method::Semistable;
    }
    Ok(result)
}

/// The trivial canonical filtration of a semisimple algebra. The radical
/// is checked to vanish, and the cone optimum of the identity grouping is
/// computed as a cross-check: semistability forces it to zero.
pub fn canonical_semisimple(a: &Algebra) -> Result<CanonicalResult> {
    let rad = radical::radical(a)?;
    if !rad.is_zero() {
        return Err(Error::NonzeroRadical("radical"));
    }
    let cs = build_constraints(a, &Grouping::identity(a.dim()))?;
    let cert = qp::solve(&cs);
    assert!(
        cert.w_star.iter().all(Rat::is_zero),
        "semisimple algebra produced a destabilizing cone optimum"
    );
    finish_result(a, &vec![Rat::zero(); a.dim()], cert, Method::Semistable, None)
}

fn weights_per_group(grouping: &Grouping, weights: &[Rat]) -> Result<Vec<Rat>> {
    let mut out = vec![None::<Rat>; grouping.n_groups()];
    for (i, &g) in grouping.classes.iter().enumerate() {
        match &out[g] {
            None => out[g] = Some(weights[i].clone()),
            Some(w) if *w == weights[i] => {}
            Some(_) => {
                return Err(Error::InvalidGrouping(
                    "weights are not constant on variable groups".into(),
                ))
            }
        }
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}

/// Compose the canonical filtrations of two summands into the canonical
/// filtration of the direct sum: trivial parts contribute zero weights
/// unscaled; two unstable parts are rescaled by `b₂ℓ₁` and `b₁ℓ₂`. The
/// result carries a certificate on the joint constraint cone.
pub fn canonical_direct_sum(
    a1: &Algebra,
    g1: &Grouping,
    r1: &CanonicalResult,
    a2: &Algebra,
    g2: &Grouping,
    r2: &CanonicalResult,
) -> Result<CanonicalResult> {
    if r1.adapted_basis.is_some() || r2.adapted_basis.is_some() {
        return Err(Error::InvalidGrouping(
            "direct-sum composition requires summand results in the standard basis".into(),
        ));
    }
    let combined: Vec<BigInt> = match (r1.is_trivial(), r2.is_trivial()) {
        (true, true) => vec![BigInt::zero(); a1.dim() + a2.dim()],
        (true, false) => {
            let mut w = vec![BigInt::zero(); a1.dim()];
            w.extend(r2.weights.iter().cloned());
            w
        }
        (false, true) => {
            let mut w = r1.weights.clone();
            w.extend(vec![BigInt::zero(); a2.dim()]);
            w
        }
        (false, false) => {
            let l1: BigInt = r1.weights.iter().sum();
            let b1: BigInt = r1.weights.iter().map(|w| w * w).sum();
            let l2: BigInt = r2.weights.iter().sum();
            let b2: BigInt = r2.weights.iter().map(|w| w * w).sum();
            let s1 = &b2 * &l1;
            let s2 = &b1 * &l2;
            let mut w: Vec<BigInt> = r1.weights.iter().map(|x| x * &s1).collect();
            w.extend(r2.weights.iter().map(|x| x * &s2));
            w
        }
    };
    let sum = a1.direct_sum(a2)?;
    let grouping = g1.direct_sum(g2);
    let cs = build_constraints(&sum, &grouping)?;
    let weights: Vec<Rat> = combined.iter().map(|w| Rat::from_integer(w.clone())).collect();
    if weights.iter().all(Rat::is_zero) {
        let cert = qp::solve(&cs);
        assert!(cert.w_star.iter().all(Rat::is_zero));
        return finish_result(&sum, &weights, cert, Method::Semistable, None);
    }
    let per_group = weights_per_group(&grouping, &weights)?;
    let cert = certify_weights(&cs, &per_group)?
        .expect("direct-sum composition must certify on the joint cone");
    finish_result(&sum, &weights, cert, Method::DirectSum, None)
}

/// The solvable radical of a Lie algebra as a standalone algebra in its
/// echelon basis, together with the subspace.
pub fn radical_subalgebra(l: &Algebra) -> Result<(Subspace, Algebra)> {
    let rad = radical::lie_radical(l)?;
    let sub = rad.subalgebra(l)?;
    Ok((rad, sub))
}

/// Canonical filtration of a Lie algebra from the canonical filtration of
/// its solvable radical: the whole algebra in degrees ≤ 0 and the
/// radical's filtration in positive degrees. The result is expressed on
/// the adapted basis (complement coordinates, then the radical's rows).
pub fn canonical_lie_via_radical(
    l: &Algebra,
    radical_result: &CanonicalResult,
) -> Result<CanonicalResult> {
    if l.kind() != Kind::Lie {
        return Err(Error::KindMismatch { expected: Kind::Lie });
    }
    let rad = radical::lie_radical(l)?;
    if rad.is_zero() {
        return canonical_semisimple(l);
    }
    if radical_result.weights.len() != rad.dim() {
        return Err(Error::DimensionMismatch {
            expected: rad.dim(),
            got: radical_result.weights.len(),
        });
    }
    // Express the radical result's adapted vectors in the ambient space.
    let rad_rows: Vec<Vec<Rat>> = match &radical_result.adapted_basis {
        None => rad.basis().to_vec(),
        Some(rows) => rows
            .iter()
            .map(|coeffs| {
                let mut v = vec![Rat::zero(); l.dim()];
                for (c, row) in coeffs.iter().zip(rad.basis()) {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x += c * y;
                    }
                }
                v
            })
            .collect(),
    };
    let comp = rad.complement_coordinates();
    let mut rows: Vec<Vec<Rat>> =
        comp.iter().map(|&c| crate::algebra::unit_vec(l.dim(), c)).collect();
    rows.extend(rad_rows);
    let mut weights = vec![Rat::zero(); comp.len()];
    weights.extend(
        radical_result
            .weights
            .iter()
            .map(|w| Rat::from_integer(w.clone())),
    );
    let basis = Matrix::new(rows.clone());
    let moved = l.express_in_basis(&rows)?;
    if !filtration::is_compatible(&moved, &weights) {
        return Err(Error::IncompatibleFiltration);
    }
    if weights.iter().all(Rat::is_zero) {
        return canonical_semisimple(l);
    }
    let cs = build_constraints(&moved, &Grouping::identity(l.dim()))?;
    let cert = certify_weights(&cs, &weights)?
        .expect("radical reduction must certify on its adapted cone");
    let standard = basis == Matrix::identity(l.dim());
    finish_result(
        &moved,
        &weights,
        cert,
        Method::RadicalReduction,
        if standard { None } else { Some(rows) },
    )
}

/// Canonical filtration of a trivial extension `A ⋉₀ M` laid out
/// `[A | M]` with `A` semisimple: weight 0 on `A`, weight 1 on `M`.
pub fn canonical_trivial_extension(ext: &Algebra, a_dim: usize) -> Result<CanonicalResult> {
    closed_form_extension(ext, a_dim, ext.dim() - a_dim, 0)
}

/// Canonical filtration of a triangular algebra `T(A, M, B)` laid out
/// `[A | M | B]` with `A`, `B` semisimple and `M ≠ 0`: weight 1 on `M`,
/// weight 0 elsewhere.
pub fn canonical_triangular(
    ext: &Algebra,
    a_dim: usize,
    m_dim: usize,
) -> Result<CanonicalResult> {
    if m_dim == 0 {
        return Err(Error::BuilderBounds("triangular algebra needs M ≠ 0".into()));
    }
    closed_form_extension(ext, a_dim, m_dim, ext.dim() - a_dim - m_dim)
}

fn closed_form_extension(
    ext: &Algebra,
    a_dim: usize,
    m_dim: usize,
    b_dim: usize,
) -> Result<CanonicalResult> {
    if ext.kind() != Kind::Associative {
        return Err(Error::KindMismatch { expected: Kind::Associative });
    }
    let d = ext.dim();
    assert_eq!(a_dim + m_dim + b_dim, d, "block layout must cover the algebra");
    let a_coords: Vec<usize> = (0..a_dim).collect();
    let b_coords: Vec<usize> = (a_dim + m_dim..d).collect();
    for (coords, name) in [(&a_coords, "left part"), (&b_coords, "right part")] {
        if coords.is_empty() {
            continue;
        }
        let sub = Subspace::from_coordinates(d, coords).subalgebra(ext)?;
        if !radical::jacobson_radical(&sub)?.is_zero() {
            return Err(Error::NotSemisimple(name));
        }
    }
    let m_span = Subspace::from_coordinates(d, &(a_dim..a_dim + m_dim).collect::<Vec<_>>());
    if !m_span.product(ext, &m_span)?.is_zero() {
        return Err(Error::BimoduleAxiom("module block must square to zero".into()));
    }
    if m_dim == 0 {
        return canonical_semisimple(ext);
    }
    let mut weights = vec![Rat::zero(); a_dim];
    weights.extend(vec![Rat::from_integer(BigInt::from(1)); m_dim]);
    weights.extend(vec![Rat::zero(); b_dim]);
    if !filtration::is_compatible(ext, &weights) {
        return Err(Error::IncompatibleFiltration);
    }
    let cs = build_constraints(ext, &Grouping::identity(d))?;
    let cert = certify_weights(&cs, &weights)?
        .expect("the extension closed form must certify on the standard cone");
    finish_result(ext, &weights, cert, Method::ClosedForm, None)
}

/// How a candidate filtration was certified canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertifyPath {
    /// All weights distinct (one-dimensional strict flag pieces) and the
    /// normalized weights pass KKT on the basis cone.
    ConeKkt,
    /// The associated graded algebra is graded-semistable.
    Recognition,
}

/// Certify a destabilizing filtration as canonical. `None` means "not
/// certified": either refuted (the cone optimum differs, or the associated
/// graded algebra is graded-unstable) or inconclusive (no route applies).
pub fn certify_canonical(
    a: &Algebra,
    f: &AdaptedFiltration,
    grouping: Option<&Grouping>,
) -> Result<Option<CertifyPath>> {
    if !filtration::is_compatible(a, &f.weights) {
        return Err(Error::IncompatibleFiltration);
    }
    let wt: Rat = f.weights.iter().sum();
    if !wt.is_positive() {
        return Err(Error::NotDestabilizing);
    }
    // One-dimensional strict flag pieces: KKT on the filtration's own
    // basis cone decides optimality outright.
    let mut sorted = f.weights.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() == f.weights.len() {
        let cs = build_constraints(a, &Grouping::identity(a.dim()))?;
        return Ok(if certify_weights(&cs, &f.weights)?.is_some() {
            Some(CertifyPath::ConeKkt)
        } else {
            // The basis is adapted to f, so a canonical f would have been
            // the cone optimum: refuted.
            None
        });
    }
    // Recognition: Gr(f) must be graded-semistable.
    let prim = AdaptedFiltration::from_integers(&f.primitive());
    let gr = filtration::associated_graded(a, &prim)?;
    let identity = Grouping::identity(a.dim());
    let grp = grouping.unwrap_or(&identity);
    match canonical_graded(&gr, grp) {
        Ok(result) => Ok(if result.weights == prim.primitive() {
            Some(CertifyPath::Recognition)
        } else {
            None
        }),
        Err(Error::InvalidGrouping(_)) | Err(Error::MissingGrading) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Boolean form of [`certify_canonical`].
pub fn verify_canonical(
    a: &Algebra,
    f: &AdaptedFiltration,
    grouping: Option<&Grouping>,
) -> Result<bool> {
    Ok(certify_canonical(a, f, grouping)?.is_some())
}

/// Check that an automorphism `p` of `a` maps every step of the filtration
/// flag onto itself.
pub fn automorphism_invariance_check(
    a: &Algebra,
    f: &AdaptedFiltration,
    p: &Matrix,
) -> Result<bool> {
    if !a.is_automorphism(p)? {
        return Err(Error::NotAutomorphism);
    }
    let flag = filtration::to_flag(a, f);
    for (sub, _) in &flag.steps {
        if sub.image(p) != *sub {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::rational::{rat, rat_int};

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn chains_have_staircase_weights() {
        for n in 2..=6 {
            let built = builders::monomial_quotient(1, &[vec![n as u32]]).unwrap();
            let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
            let expected: Vec<BigInt> = (0..n as i64).map(BigInt::from).collect();
            assert_eq!(res.weights, expected, "n = {n}");
            assert!(res.certificate.kkt_ok);
            assert_eq!(res.method, Method::GradedQp);
        }
    }

    #[test]
    fn small_monomial_weights_do_not_come_from_a_grading() {
        let built = builders::monomial_quotient(
            2,
            &[vec![4, 0], vec![2, 1], vec![1, 2], vec![0, 4]],
        )
        .unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        // Degree-lex basis (1, x, y, x², xy, y², x³, y³).
        assert_eq!(res.weights, ints(&[0, 3, 3, 6, 7, 6, 9, 9]));
        // w(x) + w(y) < w(xy): the filtration is not split by any grading.
        assert!(&res.weights[1] + &res.weights[2] < res.weights[4]);
    }

    #[test]
    fn truncated_poly_threshold() {
        // Degree weights for n ≤ 4; the closed form beyond.
        for n in 2..=4 {
            let built = builders::truncated_poly(n, 4).unwrap();
            let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
            let groups = &built.grouping.classes;
            let per_group: Vec<&BigInt> = (0..4)
                .map(|g| &res.weights[groups.iter().position(|&c| c == g).unwrap()])
                .collect();
            assert_eq!(
                per_group,
                [&BigInt::from(0), &BigInt::from(1), &BigInt::from(2), &BigInt::from(3)],
                "n = {n}"
            );
        }
        let built = builders::truncated_poly(6, 4).unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        let groups = &built.grouping.classes;
        let pick = |g: usize| {
            res.weights[groups.iter().position(|&c| c == g).unwrap()].clone()
        };
        assert_eq!(
            [pick(1), pick(2), pick(3)],
            [BigInt::from(11), BigInt::from(31), BigInt::from(42)]
        );
    }

    #[test]
    fn upper_triangular_weights() {
        let built = builders::block_triangular(&[1, 1, 1]).unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        // Basis (E11, E12, E13, E22, E23, E33): weights j - i.
        assert_eq!(res.weights, ints(&[0, 1, 2, 0, 1, 0]));
    }

    #[test]
    fn filiform_weights_match_closed_form() {
        for n in 3..=5usize {
            let built = builders::model_filiform(n).unwrap();
            let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
            let n3 = (n * n * n) as i64;
            let mut expected: Vec<i64> = vec![12];
            for i in 1..=n as i64 {
                expected.push(n3 - 7 * (n as i64) + 18 + 12 * (i - 1));
            }
            let expected = crate::rational::primitive_integer_form(
                &expected.iter().map(|&x| rat_int(x)).collect::<Vec<_>>(),
            );
            assert_eq!(res.weights, expected, "n = {n}");
        }
    }

    #[test]
    fn sl_nilpotent_weights() {
        let built = builders::sl_nilpotent(3).unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        // Basis sorted (i,j): weight j - i on each root vector.
        let expected: Vec<BigInt> = {
            let mut v = Vec::new();
            for i in 0..4 {
                for j in (i + 1)..4 {
                    v.push(BigInt::from((j - i) as i64));
                }
            }
            v
        };
        assert_eq!(res.weights, expected);
    }

    #[test]
    fn heisenberg_weights() {
        let built = builders::heisenberg();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        assert_eq!(res.weights, ints(&[1, 1, 2]));
    }

    #[test]
    fn semisimple_trivial() {
        for m in 1..=3usize {
            let built = builders::full_matrix(m).unwrap();
            let res = canonical_semisimple(&built.algebra).unwrap();
            assert!(res.is_trivial());
            assert!(res.nu.is_none());
            assert_eq!(res.method, Method::Semistable);
        }
        // Unstable input is rejected.
        let chain = builders::monomial_quotient(1, &[vec![3]]).unwrap();
        assert!(matches!(
            canonical_semisimple(&chain.algebra),
            Err(Error::NonzeroRadical(_))
        ));
    }

    #[test]
    fn direct_sum_rule_cases() {
        // k[x]/(x²) ⊕ k[x]/(x³): scaled (0,5 | 0,3,6).
        let c2 = builders::monomial_quotient(1, &[vec![2]]).unwrap();
        let c3 = builders::monomial_quotient(1, &[vec![3]]).unwrap();
        let r2 = canonical_graded(&c2.algebra, &c2.grouping).unwrap();
        let r3 = canonical_graded(&c3.algebra, &c3.grouping).unwrap();
        let sum = canonical_direct_sum(
            &c2.algebra, &c2.grouping, &r2,
            &c3.algebra, &c3.grouping, &r3,
        )
        .unwrap();
        assert_eq!(sum.weights, ints(&[0, 5, 0, 3, 6]));
        assert_eq!(sum.method, Method::DirectSum);
        assert!(sum.certificate.kkt_ok);

        // The joint cone optimum gives the same primitive vector.
        let joint = c2.algebra.direct_sum(&c3.algebra).unwrap();
        let joint_grouping = c2.grouping.direct_sum(&c3.grouping);
        let direct = canonical_graded(&joint, &joint_grouping).unwrap();
        assert_eq!(direct.weights, sum.weights);
        assert_eq!(direct.nu.as_ref().unwrap(), sum.nu.as_ref().unwrap());

        // Symmetric sum: (0,1,0,1).
        let rr = canonical_direct_sum(
            &c2.algebra, &c2.grouping, &r2,
            &c2.algebra, &c2.grouping, &r2,
        )
        .unwrap();
        assert_eq!(rr.weights, ints(&[0, 1, 0, 1]));

        // Semistable block contributes zeros.
        let m2 = builders::full_matrix(2).unwrap();
        let rm = canonical_semisimple(&m2.algebra).unwrap();
        let mixed = canonical_direct_sum(
            &m2.algebra, &m2.grouping, &rm,
            &c2.algebra, &c2.grouping, &r2,
        )
        .unwrap();
        assert_eq!(mixed.weights, ints(&[0, 0, 0, 0, 0, 1]));

        // Two semistable blocks stay semistable.
        let both = canonical_direct_sum(
            &m2.algebra, &m2.grouping, &rm,
            &m2.algebra, &m2.grouping, &rm,
        )
        .unwrap();
        assert!(both.is_trivial());
        assert_eq!(both.method, Method::Semistable);
    }

    #[test]
    fn lie_via_radical_examples() {
        // Reductive gl_2 = Mat_2 under the commutator: radical is the
        // scalars, weights 0 on a complement and 1 on the center.
        let gl2 = builders::full_matrix(2).unwrap().algebra.commutator_lie().unwrap();
        let rad = radical::lie_radical(&gl2).unwrap();
        assert_eq!(rad.dim(), 1);
        let rad_alg = rad.subalgebra(&gl2).unwrap();
        let rad_res = canonical_graded(
            &rad_alg.with_grading(Some(vec![vec![0]])),
            &Grouping::identity(1),
        )
        .unwrap();
        assert_eq!(rad_res.weights, ints(&[1]));
        let res = canonical_lie_via_radical(&gl2, &rad_res).unwrap();
        assert_eq!(res.method, Method::RadicalReduction);
        let zeros = res.weights.iter().filter(|w| w.is_zero()).count();
        assert_eq!(zeros, 3);
        assert_eq!(res.weights.iter().sum::<BigInt>(), BigInt::from(1));

        // Semisimple Lie algebra: trivial.
        let sl2 = Algebra::new(
            3,
            Kind::Lie,
            vec![
                (0, 1, 2, rat_int(1)),
                (2, 0, 0, rat_int(2)),
                (2, 1, 1, rat_int(-2)),
            ],
            None,
            None,
        )
        .unwrap();
        let dummy = canonical_semisimple(&sl2).unwrap();
        let res = canonical_lie_via_radical(&sl2, &dummy).unwrap();
        assert!(res.is_trivial());
    }

    #[test]
    fn trivial_extension_closed_form() {
        let m2 = builders::full_matrix(2).unwrap().algebra;
        let ext = builders::trivial_extension(&m2, &builders::Bimodule::regular(&m2))
            .unwrap()
            .algebra;
        let res = canonical_trivial_extension(&ext, 4).unwrap();
        assert_eq!(res.weights, ints(&[0, 0, 0, 0, 1, 1, 1, 1]));
        assert_eq!(res.method, Method::ClosedForm);

        // T(k, k, k): weights (0, 1, 0) in the [A | M | B] layout.
        let k = builders::full_matrix(1).unwrap().algebra;
        let t = builders::triangular_algebra(&k, &k, &builders::Bimodule::regular(&k))
            .unwrap()
            .algebra;
        let res = canonical_triangular(&t, 1, 1).unwrap();
        assert_eq!(res.weights, ints(&[0, 1, 0]));

        // Non-semisimple base is rejected.
        let chain = builders::monomial_quotient(1, &[vec![2]]).unwrap().algebra;
        let bad = builders::trivial_extension(&chain, &builders::Bimodule::regular(&chain))
            .unwrap()
            .algebra;
        assert!(matches!(
            canonical_trivial_extension(&bad, 2),
            Err(Error::NotSemisimple(_))
        ));
    }

    #[test]
    fn certify_canonical_paths() {
        // Chain: distinct weights, cone KKT path.
        let chain = builders::monomial_quotient(1, &[vec![3]]).unwrap();
        let good = AdaptedFiltration::new(vec![rat_int(0), rat_int(1), rat_int(2)]);
        assert_eq!(
            certify_canonical(&chain.algebra, &good, None).unwrap(),
            Some(CertifyPath::ConeKkt)
        );
        // A compatible non-optimum is refuted.
        let off = AdaptedFiltration::new(vec![rat_int(0), rat_int(1), rat_int(3)]);
        assert_eq!(certify_canonical(&chain.algebra, &off, None).unwrap(), None);
        // Incompatible weights and trivial filtrations are errors.
        let bad = AdaptedFiltration::new(vec![rat_int(0), rat_int(1), rat_int(1)]);
        assert!(matches!(
            certify_canonical(&chain.algebra, &bad, None),
            Err(Error::IncompatibleFiltration)
        ));
        assert!(matches!(
            certify_canonical(&chain.algebra, &AdaptedFiltration::trivial(3), None),
            Err(Error::NotDestabilizing)
        ));

        // The small monomial algebra has repeated weights: recognition path.
        let built = builders::monomial_quotient(
            2,
            &[vec![4, 0], vec![2, 1], vec![1, 2], vec![0, 4]],
        )
        .unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        let f = res.filtration();
        assert_eq!(
            certify_canonical(&built.algebra, &f, Some(&built.grouping)).unwrap(),
            Some(CertifyPath::Recognition)
        );
        // A compatible destabilizing non-optimum with repeats is refuted
        // (its associated graded is not graded-semistable).
        let wrong = AdaptedFiltration::new(vec![
            rat_int(0),
            rat_int(3),
            rat_int(3),
            rat_int(6),
            rat_int(8),
            rat_int(6),
            rat_int(9),
            rat_int(9),
        ]);
        assert_eq!(
            certify_canonical(&built.algebra, &wrong, Some(&built.grouping)).unwrap(),
            None
        );
    }

    #[test]
    fn automorphism_invariance_examples() {
        // Diagonal torus element diag(1, 2, 3, 4, 6, 9, 8, 27, 6) on the
        // small monomial algebra fixes the canonical flag.
        let built = builders::monomial_quotient(
            2,
            &[vec![4, 0], vec![2, 1], vec![1, 2], vec![0, 4]],
        )
        .unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        let f = res.filtration();
        let mut p = Matrix::identity(8);
        for (i, g) in built.algebra.grading().unwrap().iter().enumerate() {
            let val = 2i64.pow(g[0] as u32) * 3i64.pow(g[1] as u32);
            p.rows[i][i] = rat_int(val);
        }
        assert!(automorphism_invariance_check(&built.algebra, &f, &p).unwrap());

        // The filiform automorphism x0 -> x0 + c x1 fixes the flag.
        let m4 = builders::model_filiform(4).unwrap();
        let res = canonical_graded(&m4.algebra, &m4.grouping).unwrap();
        let phi = builders::filiform_automorphism(4, &rat(5, 3));
        assert!(automorphism_invariance_check(&m4.algebra, &res.filtration(), &phi).unwrap());

        // A non-automorphism is rejected.
        let mut notauto = Matrix::identity(5);
        notauto.rows[1][1] = rat_int(2);
        assert!(matches!(
            automorphism_invariance_check(&m4.algebra, &res.filtration(), &notauto),
            Err(Error::NotAutomorphism)
        ));

        // The swap automorphism of k[x]/(x²) ⊕ k[x]/(x²) fixes the flag.
        let c2 = builders::monomial_quotient(1, &[vec![2]]).unwrap();
        let sum = c2.algebra.direct_sum(&c2.algebra).unwrap();
        let sum_grouping = c2.grouping.direct_sum(&c2.grouping);
        let res = canonical_graded(&sum, &sum_grouping).unwrap();
        let mut swap = Matrix::zero(4, 4);
        swap.rows[0][2] = rat_int(1);
        swap.rows[1][3] = rat_int(1);
        swap.rows[2][0] = rat_int(1);
        swap.rows[3][1] = rat_int(1);
        assert!(automorphism_invariance_check(&sum, &res.filtration(), &swap).unwrap());
    }

    #[test]
    fn scrambled_filiform_certifies_through_flags() {
        // Apply a unimodular change of basis to M_3, transport the flag,
        // rebuild an adapted presentation from it, and certify: ν agrees.
        let m3 = builders::model_filiform(3).unwrap();
        let res = canonical_graded(&m3.algebra, &m3.grouping).unwrap();
        assert_eq!(res.weights, ints(&[1, 2, 3, 4]));
        let f = res.filtration();
        let nu0 = res.nu.clone().unwrap();

        // A fixed unimodular matrix (elementary row operations).
        let mut p = Matrix::identity(4);
        p.rows[0][1] = rat_int(2);
        p.rows[2][3] = rat_int(-1);
        p.rows[1][0] = rat_int(3);
        p.rows[0][0] = rat_int(7); // keep it unimodular: 7 - 6 = 1 block
        let moved = m3.algebra.change_of_basis(&p).unwrap();
        assert!(moved.validate().is_empty());

        // Transport the flag and refine it into an adapted presentation.
        let flag = filtration::to_flag(&m3.algebra, &f);
        let transported = filtration::FlagFiltration {
            steps: flag
                .steps
                .iter()
                .map(|(s, w)| (s.image(&p), w.clone()))
                .collect(),
        };
        assert!(filtration::flag_is_compatible(&moved, &transported).unwrap());
        let (rows, adapted) = filtration::from_flag(&transported);
        let represented = moved.express_in_basis(&rows).unwrap();
        assert_eq!(
            certify_canonical(&represented, &adapted, None).unwrap(),
            Some(CertifyPath::ConeKkt)
        );
        let nu1 = filtration::nu(&represented, &adapted).unwrap();
        assert_eq!(nu0.cmp(&nu1), std::cmp::Ordering::Equal);
    }
}
