//! Grading operators, graded-semistability, and the structure of
//! graded-semistable associative algebras.
//!
//! A grading operator is a ℤ-grading diagonal in the fixed basis, stored
//! as its degree vector. The grading trace is `GTrace(φ) = Σ m_j` and the
//! bilinear form is `B(ψ₁, ψ₂) = Σ m_{1,j} m_{2,j}`; for a
//! graded-semistable algebra the canonical grading operator is `B`-dual to
//! `GTrace` up to the scalar `‖φ‖²_B / GTrace(φ)`, an exact rational
//! identity checked here with no tolerance.
//!
//! The lattice of all grading operators diagonal in the basis is exactly
//! the integer kernel of the weight-equality system `{m_i + m_j = m_k}`
//! over the nonzero structure constants; its rational span is computed by
//! exact elimination. Separating basis vectors with this lattice is what
//! justifies treating a basis as adapted to the canonical filtration.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Algebra, Kind};
use crate::canonical::canonical_graded;
use crate::filtration::split_filtration;
use crate::linalg::Matrix;
use crate::qp::Grouping;
use crate::radical::{annihilator, center, jacobson_radical};
use crate::rational::{primitive_integer_form, Rat};
use crate::subspace::Subspace;
use crate::{Error, Result};

/// A ℤ-grading diagonal in the algebra's basis: one integer degree per
/// basis vector, additive on every nonzero structure constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingOperator {
    pub degrees: Vec<BigInt>,
}

impl GradingOperator {
    /// Validates additivity against the table.
    pub fn new(a: &Algebra, degrees: Vec<BigInt>) -> Result<GradingOperator> {
        if degrees.len() != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), got: degrees.len() });
        }
        for ((i, j), entries) in a.table() {
            let sum = &degrees[*i] + &degrees[*j];
            for (k, _) in entries {
                if degrees[*k] != sum {
                    return Err(Error::NotAGrading);
                }
            }
        }
        Ok(GradingOperator { degrees })
    }

    pub fn trivial(dim: usize) -> GradingOperator {
        GradingOperator { degrees: vec![BigInt::zero(); dim] }
    }

    pub fn is_trivial(&self) -> bool {
        self.degrees.iter().all(Zero::is_zero)
    }
}

/// `GTrace(φ) = Σ_j m_j`.
pub fn grading_trace(g: &GradingOperator) -> BigInt {
    g.degrees.iter().sum()
}

/// `B(ψ₁, ψ₂) = Σ_j m_{1,j} m_{2,j}`.
pub fn grading_form(g1: &GradingOperator, g2: &GradingOperator) -> BigInt {
    assert_eq!(g1.degrees.len(), g2.degrees.len());
    g1.degrees.iter().zip(&g2.degrees).map(|(a, b)| a * b).sum()
}

/// A spanning set of the lattice of gradings diagonal in the basis:
/// primitive integer forms of a rational kernel basis of the rows
/// `e_i + e_j - e_k` over nonzero structure constants.
pub fn grading_lattice_basis(a: &Algebra) -> Vec<GradingOperator> {
    let d = a.dim();
    let mut rows = Vec::new();
    for ((i, j), entries) in a.table() {
        for (k, _) in entries {
            let mut row = vec![Rat::zero(); d];
            row[*i] += Rat::from_integer(BigInt::from(1));
            row[*j] += Rat::from_integer(BigInt::from(1));
            row[*k] -= Rat::from_integer(BigInt::from(1));
            rows.push(row);
        }
    }
    if rows.is_empty() {
        // No products: every degree vector is a grading.
        return (0..d)
            .map(|i| {
                let mut v = vec![BigInt::zero(); d];
                v[i] = BigInt::from(1);
                GradingOperator { degrees: v }
            })
            .collect();
    }
    Matrix::new(rows)
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let degrees = primitive_integer_form(&v);
            GradingOperator::new(a, degrees).expect("kernel vectors are gradings")
        })
        .collect()
}

/// Whether the diagonal grading lattice assigns different degrees to every
/// pair of basis vectors. When it does, the maximal diagonal torus of
/// automorphisms has one-dimensional eigenspaces, so the basis is adapted
/// to the canonical filtration and a single cone optimization computes it.
pub fn lattice_separates_basis(a: &Algebra) -> bool {
    let lattice = grading_lattice_basis(a);
    let d = a.dim();
    for i in 0..d {
        for j in (i + 1)..d {
            if lattice.iter().all(|g| g.degrees[i] == g.degrees[j]) {
                return false;
            }
        }
    }
    true
}

/// The finest diagonal grading of the table: one ℤʳ degree vector per
/// basis element, assembled from a lattice basis. `None` when the table
/// admits no grading beyond degree zero (or a degree exceeds i64).
pub fn lattice_grading(a: &Algebra) -> Option<Vec<Vec<i64>>> {
    let lattice = grading_lattice_basis(a);
    if lattice.is_empty() {
        return None;
    }
    let mut grading = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let mut v = Vec::with_capacity(lattice.len());
        for g in &lattice {
            v.push(i64::try_from(&g.degrees[i]).ok()?);
        }
        grading.push(v);
    }
    Some(grading)
}

/// Def: a graded algebra is graded-semistable when its split filtration is
/// its canonical filtration (compared in primitive integer form).
pub fn is_graded_semistable(a: &Algebra, grouping: &Grouping) -> Result<bool> {
    let split = split_filtration(a)?;
    let canonical = canonical_graded(a, grouping)?;
    Ok(canonical.weights == split.primitive())
}

/// The exact duality `B(φ_can, ψ) · GTrace(φ_can) = ‖φ_can‖²_B · GTrace(ψ)`
/// satisfied by the canonical grading operator of a graded-semistable
/// algebra against every commuting grading operator ψ.
pub fn check_gtrace_duality(phi_can: &GradingOperator, psi: &GradingOperator) -> Result<bool> {
    let trace_phi = grading_trace(phi_can);
    if trace_phi.is_zero() && !phi_can.is_trivial() {
        return Err(Error::DegenerateGradingTrace);
    }
    let lhs = grading_form(phi_can, psi) * &trace_phi;
    let rhs = grading_form(phi_can, phi_can) * grading_trace(psi);
    Ok(lhs == rhs)
}

/// Structure report for a graded-semistable associative algebra: the
/// negative part sits inside `J(A) ∩ Z(A)`, the positive part inside
/// `J(A)`, and the annihilator has no negative component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub negative_in_radical_and_center: bool,
    pub positive_in_radical: bool,
    pub negative_annihilator_zero: bool,
}

impl StructureReport {
    pub fn all(&self) -> bool {
        self.negative_in_radical_and_center
            && self.positive_in_radical
            && self.negative_annihilator_zero
    }
}

pub fn structural_checks(a: &Algebra) -> Result<StructureReport> {
    if a.kind() != Kind::Associative {
        return Err(Error::KindMismatch { expected: Kind::Associative });
    }
    let g = a.grading().ok_or(Error::MissingGrading)?;
    let rank = g.first().map_or(0, Vec::len);
    if rank != 1 {
        return Err(Error::GradingRankNot1 { got: rank });
    }
    let d = a.dim();
    let neg: Vec<usize> = (0..d).filter(|&i| g[i][0] < 0).collect();
    let pos: Vec<usize> = (0..d).filter(|&i| g[i][0] > 0).collect();
    let negative = Subspace::from_coordinates(d, &neg);
    let positive = Subspace::from_coordinates(d, &pos);
    let rad = jacobson_radical(a)?;
    let z = center(a)?;
    let ann = annihilator(a)?;
    Ok(StructureReport {
        negative_in_radical_and_center: rad.contains_subspace(&negative)
            && z.contains_subspace(&negative),
        positive_in_radical: rad.contains_subspace(&positive),
        negative_annihilator_zero: ann.intersect(&negative).is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::rational::rat_int;

    fn op(xs: &[i64]) -> GradingOperator {
        GradingOperator { degrees: xs.iter().map(|&x| BigInt::from(x)).collect() }
    }

    #[test]
    fn trace_and_form_examples() {
        assert_eq!(grading_trace(&GradingOperator::trivial(4)), BigInt::zero());
        // deg(x^i) = i on k[x]/(x³): trace 3, self-form 5.
        let g = op(&[0, 1, 2]);
        assert_eq!(grading_trace(&g), BigInt::from(3));
        assert_eq!(grading_form(&g, &g), BigInt::from(5));
        assert_eq!(grading_form(&g, &GradingOperator::trivial(3)), BigInt::zero());
        // Upper triangular 3x3 degrees j - i sum to 4.
        let ut = op(&[0, 1, 2, 0, 1, 0]);
        assert_eq!(grading_trace(&ut), BigInt::from(4));
    }

    #[test]
    fn grading_operator_validation() {
        let chain = builders::monomial_quotient(1, &[vec![3]]).unwrap().algebra;
        assert!(GradingOperator::new(&chain, op(&[0, 1, 2]).degrees).is_ok());
        assert!(matches!(
            GradingOperator::new(&chain, op(&[0, 1, 3]).degrees),
            Err(Error::NotAGrading)
        ));
    }

    #[test]
    fn lattice_and_separation() {
        // k[x]/(x⁴): rank-1 lattice spanned by the exponent grading.
        let chain = builders::monomial_quotient(1, &[vec![4]]).unwrap().algebra;
        let lat = grading_lattice_basis(&chain);
        assert_eq!(lat.len(), 1);
        assert!(lattice_separates_basis(&chain));

        // Model filiform: rank-2 lattice separating x0 from x1.
        let m4 = builders::model_filiform(4).unwrap().algebra;
        let lat = grading_lattice_basis(&m4);
        assert_eq!(lat.len(), 2);
        assert!(lattice_separates_basis(&m4));

        // Heisenberg and abelian are separated as well.
        assert!(lattice_separates_basis(&builders::heisenberg().algebra));
        assert!(lattice_separates_basis(&builders::abelian(3).unwrap().algebra));

        // Upper triangular: the two diagonal idempotents are forced to
        // degree zero, so they are never separated.
        let ut2 = builders::block_triangular(&[1, 1]).unwrap().algebra;
        assert!(!lattice_separates_basis(&ut2));
    }

    #[test]
    fn duality_identity_small_cases() {
        // a = Gr(k[x]/(x⁵) canonical): φ = (0,1,2,3,4), ψ = φ reads
        // 30·10 = 30·10.
        let phi = op(&[0, 1, 2, 3, 4]);
        assert!(check_gtrace_duality(&phi, &phi).unwrap());
        assert!(check_gtrace_duality(&phi, &GradingOperator::trivial(5)).unwrap());
        // Upper triangular 3x3 with basis (E11,E12,E13,E22,E23,E33):
        // φ_can = j - i, lattice generated by u_j - u_i vectors.
        let phi = op(&[0, 1, 2, 0, 1, 0]);
        for psi in [
            op(&[0, -1, -1, 0, 0, 0]),
            op(&[0, 1, 0, 0, -1, 0]),
            op(&[0, 0, 1, 0, 1, 0]),
        ] {
            assert!(check_gtrace_duality(&phi, &psi).unwrap());
        }
        // A non-dual pair fails.
        let skew = op(&[0, 5, 2, 0, 1, 0]);
        assert!(!check_gtrace_duality(&phi, &skew).unwrap());
        // Degenerate trace with a nontrivial operator is flagged.
        assert!(matches!(
            check_gtrace_duality(&op(&[1, -1]), &op(&[1, -1])),
            Err(Error::DegenerateGradingTrace)
        ));
    }

    #[test]
    fn structural_checks_on_nonnegative_gradings() {
        // The chain k[x]/(x⁴) with its split grading: positive part is
        // exactly the radical, no negative part.
        let chain = builders::monomial_quotient(1, &[vec![4]])
            .unwrap()
            .algebra
            .with_grading(Some(vec![vec![0], vec![1], vec![2], vec![3]]));
        let report = structural_checks(&chain).unwrap();
        assert!(report.all());

        let lie = builders::heisenberg().algebra;
        assert!(matches!(
            structural_checks(&lie),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn graded_semistability_examples() {
        // Gr of the chain canonical filtration is the chain itself with
        // weights (0,1,...,n-1): graded-semistable.
        let built = builders::monomial_quotient(1, &[vec![5]]).unwrap();
        let a = built
            .algebra
            .clone()
            .with_grading(Some((0..5).map(|i| vec![i as i64]).collect()));
        assert!(is_graded_semistable(&a, &built.grouping).unwrap());

        // Regrade so x·x lands two degrees short: x² at degree 3 kills the
        // product in Gr, and the canonical filtration of that Gr is
        // (0,1,1), not (0,1,3).
        let chain3 = builders::monomial_quotient(1, &[vec![3]]).unwrap();
        let f = crate::filtration::AdaptedFiltration::new(vec![
            rat_int(0),
            rat_int(1),
            rat_int(3),
        ]);
        let gr = crate::filtration::associated_graded(&chain3.algebra, &f).unwrap();
        assert!(!is_graded_semistable(&gr, &chain3.grouping).unwrap());

        // A semisimple algebra with the trivial grading: degenerately true.
        let m2 = builders::full_matrix(2).unwrap();
        let a = m2.algebra.clone().with_grading(Some(vec![vec![0]; 4]));
        assert!(is_graded_semistable(&a, &m2.grouping).unwrap());
    }
}

#[cfg(test)]
mod negative_grading_tests {
    use super::*;
    use crate::builders;
    use crate::qp::Grouping;

    #[test]
    fn negatively_graded_split_is_not_mistaken_for_canonical() {
        // Dual numbers graded with deg(ε) = -1: the split filtration
        // (0, -1) is a genuinely different filtration from the canonical
        // (0, 1) and must not compare equal through any sign flip.
        let k = builders::full_matrix(1).unwrap().algebra;
        let dual = builders::trivial_extension(&k, &builders::Bimodule::regular(&k))
            .unwrap()
            .algebra
            .with_grading(Some(vec![vec![0], vec![-1]]));
        assert!(dual.validate().is_empty());
        let mut grouping = Grouping::identity(2);
        grouping.pinned.insert(0);
        assert!(!is_graded_semistable(&dual, &grouping).unwrap());
    }

    #[test]
    fn negative_annihilator_component_fails_the_structure_report() {
        // A zero-product algebra in degree -1 annihilates itself, so the
        // negative-annihilator clause must come back false while the
        // radical and center clauses hold.
        let a = crate::algebra::Algebra::new(
            2,
            crate::algebra::Kind::Associative,
            Vec::new(),
            None,
            Some(vec![vec![-1], vec![0]]),
        )
        .unwrap();
        let report = structural_checks(&a).unwrap();
        assert!(report.negative_in_radical_and_center);
        assert!(report.positive_in_radical);
        assert!(!report.negative_annihilator_zero);
        assert!(!report.all());
    }
}

#[cfg(test)]
mod scaling_tests {
    use super::*;
    use crate::builders;

    #[test]
    fn graded_semistability_is_scale_invariant() {
        // Doubling every degree leaves the split ray unchanged.
        let built = builders::monomial_quotient(1, &[vec![4]]).unwrap();
        let doubled = built
            .algebra
            .clone()
            .with_grading(Some((0..4).map(|i| vec![2 * i as i64]).collect()));
        assert!(is_graded_semistable(&doubled, &built.grouping).unwrap());
    }
}
