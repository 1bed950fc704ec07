//! The recognition round trip: the associated graded algebra of a
//! canonical filtration is graded-semistable, its negative part sits in
//! the radical and center, its positive part in the radical, and the
//! canonical grading operator is trace-dual on the whole lattice of
//! commuting gradings.
//!
//! Run with `cargo run --example recognition`.

use canfilt::builders;
use canfilt::canonical::canonical_graded;
use canfilt::filtration::associated_graded;
use canfilt::grade::{
    check_gtrace_duality, grading_lattice_basis, is_graded_semistable, structural_checks,
    GradingOperator,
};

fn main() {
    let built = builders::block_triangular(&[1, 1, 1, 1]).unwrap();
    let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
    let gr = associated_graded(&built.algebra, &res.filtration()).unwrap();
    println!(
        "upper triangular 4x4: canonical weights {:?}",
        res.weights
    );
    println!(
        "Gr is graded-semistable: {}",
        is_graded_semistable(&gr, &built.grouping).unwrap()
    );
    let report = structural_checks(&gr).unwrap();
    println!(
        "structure: positive part in J = {}, negative annihilator zero = {}",
        report.positive_in_radical, report.negative_annihilator_zero
    );

    let phi = GradingOperator::new(&gr, res.weights.clone()).unwrap();
    let lattice = grading_lattice_basis(&gr);
    println!("commuting grading lattice rank: {}", lattice.len());
    for psi in &lattice {
        assert!(check_gtrace_duality(&phi, psi).unwrap());
    }
    println!("grading-trace duality holds on every generator, exactly");
}
