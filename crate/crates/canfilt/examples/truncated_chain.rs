//! The canonical filtration of k[x]/(x^n): weights (0, 1, ..., n-1), found
//! by one exact cone optimization and certified by KKT multipliers.
//!
//! Run with `cargo run --example truncated_chain`.

use canfilt::builders;
use canfilt::canonical::canonical_graded;
use canfilt::rational::format_rat;

fn main() {
    for n in [3u32, 5, 8] {
        let built = builders::monomial_quotient(1, &[vec![n]]).unwrap();
        let res = canonical_graded(&built.algebra, &built.grouping).unwrap();
        let nu = res.nu.as_ref().unwrap();
        println!(
            "k[x]/(x^{n}): weights {:?}, wt = {}, ||F||^2 = {}, nu ~ {:.4}",
            res.weights,
            format_rat(&nu.wt),
            format_rat(&nu.norm_sq),
            nu.approx(),
        );
        let normalized: Vec<String> =
            res.certificate.w_star.iter().map(format_rat).collect();
        println!(
            "  normalized optimum ({}), kkt_ok = {}",
            normalized.join(", "),
            res.certificate.kkt_ok
        );
    }
}
