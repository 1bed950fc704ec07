//! Algebra filtrations in three equivalent forms.
//!
//! A filtration of an algebra can be given as weights on an adapted basis
//! (one rational per basis vector, subject to the weight inequalities
//! `c_ij^k ≠ 0 ⟹ w_i + w_j ≤ w_k`), as a weight function on elements
//! (`w(x)` = min weight over the nonzero coordinates of `x`, `w(0) = ∞`),
//! or as a weighted flag of subspaces. This module converts between the
//! forms and computes
//!
//! ```text
//! wt(A, F) = Σ m·dim(F_m/F_{m+1})     ‖F‖² = Σ m²·dim(F_m/F_{m+1})
//! ν(A, F)  = -wt / ‖F‖
//! ```
//!
//! ν is never materialized as a float: [`NuValue`] keeps `(wt, ‖F‖²)` and
//! compares exactly. The associated graded algebra truncates the table to
//! the weight-additive part.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::Algebra;
use crate::rational::{primitive_integer_form, Rat};
use crate::subspace::Subspace;
use crate::{Error, Result};

/// The weight of an element: finite, or ∞ exactly for the zero vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    Finite(Rat),
    Infinite,
}

/// A filtration stored as one weight per basis vector of an adapted basis.
/// The trivial filtration is the all-zero vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedFiltration {
    pub weights: Vec<Rat>,
}

/// A strictly decreasing flag of subspaces with strictly increasing
/// weights; the first subspace is the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagFiltration {
    pub steps: Vec<(Subspace, Rat)>,
}

/// Exact ordering key for `ν = -wt/√norm_sq`. Only defined for nontrivial
/// filtrations (`norm_sq > 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuValue {
    pub wt: Rat,
    pub norm_sq: Rat,
}

impl NuValue {
    pub fn new(wt: Rat, norm_sq: Rat) -> Result<NuValue> {
        if !norm_sq.is_positive() {
            return Err(Error::TrivialFiltration);
        }
        Ok(NuValue { wt, norm_sq })
    }

    /// ν as a float, for display only.
    pub fn approx(&self) -> f64 {
        let to_f = |r: &Rat| {
            let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        };
        -to_f(&self.wt) / to_f(&self.norm_sq).sqrt()
    }
}

impl PartialOrd for NuValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NuValue {
    /// Exact comparison of `-wt/√norm_sq`: first by the sign of `wt`
    /// (reversed), then by cross-multiplied squares.
    fn cmp(&self, other: &Self) -> Ordering {
        let s1 = sign(&self.wt);
        let s2 = sign(&other.wt);
        // ν = -wt/√b, so larger wt means smaller ν.
        if s1 != s2 {
            return s2.cmp(&s1);
        }
        if s1 == 0 {
            return Ordering::Equal;
        }
        // Same nonzero sign: compare wt²/b exactly.
        let lhs = &self.wt * &self.wt * &other.norm_sq;
        let rhs = &other.wt * &other.wt * &self.norm_sq;
        // For positive wt, larger wt²/b means more negative ν.
        if s1 > 0 {
            rhs.cmp(&lhs)
        } else {
            lhs.cmp(&rhs)
        }
    }
}

fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl AdaptedFiltration {
    pub fn new(weights: Vec<Rat>) -> Self {
        AdaptedFiltration { weights }
    }

    pub fn trivial(dim: usize) -> Self {
        AdaptedFiltration { weights: vec![Rat::zero(); dim] }
    }

    pub fn from_integers(weights: &[BigInt]) -> Self {
        AdaptedFiltration {
            weights: weights.iter().map(|w| Rat::from_integer(w.clone())).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        AdaptedFiltration { weights: self.weights.iter().map(|w| w * c).collect() }
    }

    /// Weight of a general element: the minimum weight over its nonzero
    /// coordinates, and ∞ exactly for the zero vector.
    pub fn weight_of_vector(&self, v: &[Rat]) -> Weight {
        let mut best: Option<Rat> = None;
        for (w, c) in self.weights.iter().zip(v) {
            if c.is_zero() {
                continue;
            }
            best = Some(match best {
                None => w.clone(),
                Some(b) => b.min(w.clone()),
            });
        }
        match best {
            Some(w) => Weight::Finite(w),
            None => Weight::Infinite,
        }
    }

    /// Primitive integer representative of the same projective weight class.
    pub fn primitive(&self) -> Vec<BigInt> {
        primitive_integer_form(&self.weights)
    }

    pub fn all_integer(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer())
    }
}

/// True iff every nonzero structure constant satisfies the weight
/// inequality `w_i + w_j ≤ w_k`.
pub fn is_compatible(a: &Algebra, weights: &[Rat]) -> bool {
    if weights.len() != a.dim() {
        return false;
    }
    for ((i, j), entries) in a.table() {
        let lhs = &weights[*i] + &weights[*j];
        for (k, _) in entries {
            if lhs > weights[*k] {
                return false;
            }
        }
    }
    true
}

fn require_compatible(a: &Algebra, f: &AdaptedFiltration) -> Result<()> {
    if is_compatible(a, &f.weights) {
        Ok(())
    } else {
        Err(Error::IncompatibleFiltration)
    }
}

/// `wt(A, F) = Σ_i w_i` over an adapted basis.
pub fn weight_of(a: &Algebra, f: &AdaptedFiltration) -> Result<Rat> {
    require_compatible(a, f)?;
    Ok(f.weights.iter().sum())
}

/// `‖F‖² = Σ_i w_i²` over an adapted basis.
pub fn norm_sq_of(a: &Algebra, f: &AdaptedFiltration) -> Result<Rat> {
    require_compatible(a, f)?;
    Ok(f.weights.iter().map(|w| w * w).sum())
}

/// The exact ordering key of `ν(A, F)`. Errors on the trivial filtration,
/// where ν is undefined.
pub fn nu(a: &Algebra, f: &AdaptedFiltration) -> Result<NuValue> {
    let wt = weight_of(a, f)?;
    let norm_sq = norm_sq_of(a, f)?;
    NuValue::new(wt, norm_sq)
}

/// Flag-side weight: `Σ w_i (dim G_i - dim G_{i+1})`.
pub fn flag_weight(flag: &FlagFiltration) -> Rat {
    let mut total = Rat::zero();
    for (idx, (sub, w)) in flag.steps.iter().enumerate() {
        let next = flag.steps.get(idx + 1).map_or(0, |(s, _)| s.dim());
        total += w * Rat::from_integer(BigInt::from(sub.dim() - next));
    }
    total
}

pub fn flag_norm_sq(flag: &FlagFiltration) -> Rat {
    let mut total = Rat::zero();
    for (idx, (sub, w)) in flag.steps.iter().enumerate() {
        let next = flag.steps.get(idx + 1).map_or(0, |(s, _)| s.dim());
        total += w * w * Rat::from_integer(BigInt::from(sub.dim() - next));
    }
    total
}

/// Check the flag form of the compatibility condition: when `p` is the
/// minimal index with `w_i + w_j ≤ w_p`, then `μ(G_i, G_j) ⊆ G_p` (and the
/// product vanishes when no such step exists).
pub fn flag_is_compatible(a: &Algebra, flag: &FlagFiltration) -> Result<bool> {
    let n = flag.steps.len();
    for i in 0..n {
        for j in 0..n {
            let target = &flag.steps[i].1 + &flag.steps[j].1;
            let p = (0..n).find(|&p| flag.steps[p].1 >= target);
            let prod = flag.steps[i].0.product(a, &flag.steps[j].0)?;
            let ok = match p {
                Some(p) => flag.steps[p].0.contains_subspace(&prod),
                None => prod.is_zero(),
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Adapted weights to a weighted flag: equal-weight basis vectors group
/// into one step, steps ordered by strictly increasing weight, first step
/// the whole space.
pub fn to_flag(a: &Algebra, f: &AdaptedFiltration) -> FlagFiltration {
    let d = a.dim();
    let mut distinct: Vec<Rat> = f.weights.clone();
    distinct.sort();
    distinct.dedup();
    let mut steps = Vec::new();
    for w in distinct {
        let coords: Vec<usize> = (0..d).filter(|&i| f.weights[i] >= w).collect();
        steps.push((Subspace::from_coordinates(d, &coords), w));
    }
    FlagFiltration { steps }
}

/// A flag to an adapted filtration: picks an echelon basis refining the
/// flag and returns it (rows, in the original coordinates) along with the
/// weight of each row. `wt` and `‖·‖²` are preserved exactly.
pub fn from_flag(flag: &FlagFiltration) -> (Vec<Vec<Rat>>, AdaptedFiltration) {
    let ambient = flag.steps.first().map_or(0, |(s, _)| s.ambient_dim());
    let mut chosen: Vec<Vec<Rat>> = Vec::new();
    let mut weights: Vec<Rat> = Vec::new();
    // Deepest step first so inner vectors keep their (higher) weights.
    for (sub, w) in flag.steps.iter().rev() {
        for v in sub.basis() {
            let span = Subspace::from_spanning(ambient, chosen.clone());
            if !span.contains(v) {
                chosen.push(v.clone());
                weights.push(w.clone());
            }
        }
    }
    // Reorder rows by ascending weight, ties by pivot position.
    let mut order: Vec<usize> = (0..chosen.len()).collect();
    order.sort_by(|&x, &y| {
        weights[x]
            .cmp(&weights[y])
            .then_with(|| leading_col(&chosen[x]).cmp(&leading_col(&chosen[y])))
    });
    let basis: Vec<Vec<Rat>> = order.iter().map(|&i| chosen[i].clone()).collect();
    let weights: Vec<Rat> = order.iter().map(|&i| weights[i].clone()).collect();
    (basis, AdaptedFiltration::new(weights))
}

fn leading_col(v: &[Rat]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(v.len())
}

/// The associated graded algebra of a compatible integer-weight filtration:
/// the table keeps exactly the weight-additive entries, and the output is
/// ℤ-graded by the weights.
pub fn associated_graded(a: &Algebra, f: &AdaptedFiltration) -> Result<Algebra> {
    require_compatible(a, f)?;
    if !f.all_integer() {
        return Err(Error::NonIntegerWeights);
    }
    let mut entries = Vec::new();
    for ((i, j), supp) in a.table() {
        let target = &f.weights[*i] + &f.weights[*j];
        for (k, c) in supp {
            if f.weights[*k] == target {
                entries.push((*i, *j, *k, c.clone()));
            }
        }
    }
    let grading: Vec<Vec<i64>> = f
        .weights
        .iter()
        .map(|w| vec![i64::try_from(w.to_integer()).expect("graded weight exceeds i64")])
        .collect();
    Algebra::new(
        a.dim(),
        a.kind(),
        entries,
        Some(a.labels().to_vec()),
        Some(grading),
    )
}

/// The split filtration of a ℤ-graded algebra: weights equal degrees.
pub fn split_filtration(a: &Algebra) -> Result<AdaptedFiltration> {
    let g = a.grading().ok_or(Error::MissingGrading)?;
    let rank = g.first().map_or(0, Vec::len);
    if rank != 1 {
        return Err(Error::GradingRankNot1 { got: rank });
    }
    Ok(AdaptedFiltration::new(
        g.iter().map(|v| Rat::from_integer(BigInt::from(v[0]))).collect(),
    ))
}
