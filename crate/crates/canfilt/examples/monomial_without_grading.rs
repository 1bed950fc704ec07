//! A canonical filtration that does not arise from any grading:
//! k[x,y]/(x⁴, x²y, xy², y⁴) has weights w(xⁱ) = w(yⁱ) = 3i and w(xy) = 7,
//! so w(x) + w(y) = 6 < 7 = w(xy).
//!
//! Run with `cargo run --example monomial_without_grading`.

use canfilt::builders;
use canfilt::canonical::{canonical_graded, certify_canonical};
use canfilt::rational::format_rat;

fn main() {
    let built =
        builders::monomial_quotient(2, &[vec![4, 0], vec![2, 1], vec![1, 2], vec![0, 4]])
            .unwrap();
    let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
    println!("basis and weights:");
    for (label, w) in built.algebra.labels().iter().zip(&res.weights) {
        println!("  w({label}) = {w}");
    }
    let lam: Vec<String> = res.certificate.lambda.iter().map(format_rat).collect();
    println!("multipliers: ({})", lam.join(", "));

    let path = certify_canonical(&built.algebra, &res.filtration(), Some(&built.grouping))
        .unwrap()
        .expect("the computed filtration certifies");
    println!("certified canonical via {path:?}");
    println!("w(x) + w(y) = 6 < 7 = w(xy): no grading splits this filtration");
}
