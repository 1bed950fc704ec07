//! Radicals over exact rationals: the Jacobson radical through the trace
//! form of the unitization, the solvable radical through the Killing form,
//! and the equivalence semistable ⟺ semisimple with a destabilizing
//! witness in the unstable case.
//!
//! Run with `cargo run --example radicals`.

use canfilt::builders;
use canfilt::filtration::from_flag;
use canfilt::radical::{
    destabilizing_witness, is_semistable, jacobson_radical, lie_radical,
};

fn main() {
    let m3 = builders::full_matrix(3).unwrap().algebra;
    println!(
        "Mat_3: J(A) has dimension {}, semistable = {}",
        jacobson_radical(&m3).unwrap().dim(),
        is_semistable(&m3).unwrap()
    );

    let ut3 = builders::block_triangular(&[1, 1, 1]).unwrap().algebra;
    let rad = jacobson_radical(&ut3).unwrap();
    println!(
        "upper triangular 3x3: J(A) is the strictly upper part, dim {}",
        rad.dim()
    );
    let witness = destabilizing_witness(&ut3).unwrap().unwrap();
    let (_, adapted) = from_flag(&witness);
    println!(
        "  radical-adic destabilizing weights: {:?}",
        adapted.primitive()
    );

    let heis = builders::heisenberg().algebra;
    println!(
        "heisenberg: solvable radical dim {} (everything), semistable = {}",
        lie_radical(&heis).unwrap().dim(),
        is_semistable(&heis).unwrap()
    );

    // gl_2 = Mat_2 under the commutator is reductive: the radical is the
    // one-dimensional center.
    let gl2 = builders::full_matrix(2).unwrap().algebra.commutator_lie().unwrap();
    println!(
        "gl_2: solvable radical dim {} (the scalars)",
        lie_radical(&gl2).unwrap().dim()
    );
}
