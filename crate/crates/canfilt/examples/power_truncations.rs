//! Canonical weights of S_{n,4} = k[x_1..x_n]/m⁴ with one weight variable
//! per total degree. Small n gives the degree weights (1, 2, 3); larger n
//! bends the weights away from any grading, with the switch after n = 4.
//!
//! Run with `cargo run --example power_truncations`.

use canfilt::builders;
use canfilt::canonical::canonical_graded;

fn main() {
    for n in 2..=8usize {
        let built = builders::truncated_poly(n, 4).unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        // One representative weight per degree group.
        let per_degree: Vec<String> = (0..4)
            .map(|g| {
                let at = built.grouping.classes.iter().position(|&c| c == g).unwrap();
                res.weights[at].to_string()
            })
            .collect();
        println!(
            "S_({n},4): degree weights ({}), group sizes {:?}",
            per_degree.join(", "),
            built.grouping.group_sizes(),
        );
    }
}
