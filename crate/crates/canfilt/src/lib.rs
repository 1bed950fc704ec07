//! Exact-arithmetic computation and certification of canonical destabilizing
//! filtrations of finite-dimensional associative and Lie algebras.
//!
//! An algebra is given by structure constants over ℚ. A filtration is scored
//! by `wt = Σ m·dim(F_m/F_{m+1})` and `‖F‖² = Σ m²·dim(F_m/F_{m+1})`, and the
//! numerical invariant is `ν = -wt/‖F‖`. Semistable algebras (ν ≥ 0 for every
//! filtration) are exactly the semisimple ones; an unstable algebra has a
//! unique ν-minimizing filtration, its canonical filtration. For a fixed
//! adapted basis the compatible weight vectors form a polyhedral cone
//! `{Cw ≤ 0}`, and the optimal weights are the minimizer of
//! `½‖w - 1‖²_d` over that cone, a convex QP solved here over exact
//! rationals with machine-checkable KKT and Farkas certificates.
//!
//! Everything is pure and immutable; no floating point appears anywhere in a
//! decision path.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `canfilt` binary exposes the same operations as batch subcommands.

pub mod algebra;
pub mod builders;
pub mod canonical;
pub mod filtration;
pub mod grade;
pub mod linalg;
pub mod qp;
pub mod radical;
pub mod rational;
pub mod subspace;

pub use algebra::{Algebra, Kind, Violation};
pub use canonical::{CanonicalResult, Method};
pub use filtration::{AdaptedFiltration, FlagFiltration, NuValue, Weight};
pub use qp::{ConstraintSystem, FarkasCertificate, Grouping, QpCertificate};
pub use rational::Rat;
pub use subspace::Subspace;

use thiserror::Error;

/// Errors for operations whose preconditions can fail.
///
/// Axiom violations in an algebra table are *not* errors: `Algebra::validate`
/// reports them as data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of bounds for dimension {dim}")]
    IndexOutOfBounds { index: usize, dim: usize },
    #[error("kind mismatch: expected {expected:?} algebra")]
    KindMismatch { expected: Kind },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("filtration is incompatible with the algebra table")]
    IncompatibleFiltration,
    #[error("trivial filtration: the numerical invariant is undefined")]
    TrivialFiltration,
    #[error("filtration weights must be integers here; clear denominators first")]
    NonIntegerWeights,
    #[error("algebra has no grading")]
    MissingGrading,
    #[error("grading has rank {got}, expected rank 1")]
    GradingRankNot1 { got: usize },
    #[error("invalid grouping: {0}")]
    InvalidGrouping(String),
    #[error("constraint system has {rows} rows, above the oracle bound {max}")]
    OracleTooLarge { rows: usize, max: usize },
    #[error("the {0} must be the zero subspace here")]
    NonzeroRadical(&'static str),
    #[error("radical verification failed: {0}")]
    RadicalVerification(&'static str),
    #[error("expected a semisimple algebra: {0}")]
    NotSemisimple(&'static str),
    #[error("filtration is not destabilizing (wt must be positive)")]
    NotDestabilizing,
    #[error("matrix is not an automorphism of the algebra")]
    NotAutomorphism,
    #[error("weight vector is zero")]
    ZeroVector,
    #[error("negative weighted sum: the projection scaling is undefined")]
    NegativeWeightSum,
    #[error("not all constraints are tight at the given point")]
    NotAllTight,
    #[error("grading operator is incompatible with the table")]
    NotAGrading,
    #[error("degenerate grading trace for a nontrivial operator")]
    DegenerateGradingTrace,
    #[error("builder parameters out of bounds: {0}")]
    BuilderBounds(String),
    #[error("monomial quotient is infinite-dimensional: variable {0} has no pure power in the ideal")]
    InfiniteDimensional(usize),
    #[error("bimodule axioms fail: {0}")]
    BimoduleAxiom(String),
    #[error("subspace is not closed under the product")]
    NotClosed,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("invalid algebra file: {0}")]
    BadFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
