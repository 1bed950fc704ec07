//! Block upper triangular matrix algebras: diagonal blocks get weight 0
//! and the matrix units E(i,j) get weight j - i, one variable per block.
//!
//! Run with `cargo run --example upper_triangular`.

use canfilt::builders;
use canfilt::canonical::canonical_graded;

fn main() {
    for n in [3usize, 4, 6] {
        let built = builders::block_triangular(&vec![1; n]).unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        println!("upper triangular {n}x{n}:");
        for (label, w) in built.algebra.labels().iter().zip(&res.weights) {
            print!("  {label}={w}");
        }
        println!();
    }

    // A proper block pattern: A_(2,1) is the triangular algebra
    // T(Mat_2, M, k) and its module block has weight 1.
    let built = builders::block_triangular(&[2, 1]).unwrap();
    let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
    println!("A_(2,1) weights:");
    for (label, w) in built.algebra.labels().iter().zip(&res.weights) {
        println!("  w({label}) = {w}");
    }
}
