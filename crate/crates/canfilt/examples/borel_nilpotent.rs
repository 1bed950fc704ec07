//! The nilpotent part of sl_{n+1}: strictly upper triangular matrices
//! under the commutator. Root spaces are one-dimensional, and the
//! canonical weight of the root vector E(i,j) is j - i.
//!
//! Run with `cargo run --example borel_nilpotent`.

use canfilt::builders;
use canfilt::canonical::canonical_graded;
use canfilt::radical::lower_central_series;

fn main() {
    for n in 2..=5usize {
        let built = builders::sl_nilpotent(n).unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        println!(
            "nilpotent part of sl_{}: dim {}, lower central dims {:?}",
            n + 1,
            built.algebra.dim(),
            lower_central_series(&built.algebra).unwrap().dims()
        );
        for (label, w) in built.algebra.labels().iter().zip(&res.weights) {
            print!("  {label}={w}");
        }
        println!();
    }
}
