//! The model filiform Lie algebra M_n: brackets [x0, xi] = x_{i+1}. The
//! canonical weights are (12, n³-7n+18, ..., +12 steps) up to scaling, and
//! the automorphism x0 -> x0 + c·x1 fixes every filtration step.
//!
//! Run with `cargo run --example filiform`.

use canfilt::builders;
use canfilt::canonical::{automorphism_invariance_check, canonical_graded};
use canfilt::rational::rat;

fn main() {
    for n in 3..=8usize {
        let built = builders::model_filiform(n).unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        println!("M_{n}: weights {:?}", res.weights);
        let phi = builders::filiform_automorphism(n, &rat(7, 2));
        let fixed =
            automorphism_invariance_check(&built.algebra, &res.filtration(), &phi).unwrap();
        println!("  x0 -> x0 + (7/2) x1 fixes the flag: {fixed}");
    }
}
