//! Define an algebra by structure constants, validate its axioms, multiply
//! elements, and round-trip the JSON file format.
//!
//! Run with `cargo run --example structure_constants`.

use canfilt::algebra::{Algebra, Kind};
use canfilt::rational::{format_rat, rat_int, Rat};
use num_traits::One;

fn main() {
    // k[x]/(x³) on the basis (1, x, x²).
    let mut entries = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i + j < 3 {
                entries.push((i, j, i + j, Rat::one()));
            }
        }
    }
    let a = Algebra::new(
        3,
        Kind::Associative,
        entries,
        Some(vec!["1".into(), "x".into(), "x^2".into()]),
        Some(vec![vec![0], vec![1], vec![2]]),
    )
    .unwrap();
    assert!(a.validate().is_empty());
    println!("k[x]/(x^3) validates: associative, graded by degree");

    // (1 + x) · (x + 2x²) = x + 3x² in the quotient.
    let u = vec![rat_int(1), rat_int(1), rat_int(0)];
    let v = vec![rat_int(0), rat_int(1), rat_int(2)];
    let product = a.multiply(&u, &v).unwrap();
    let rendered: Vec<String> = product
        .iter()
        .zip(a.labels())
        .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
        .map(|(c, l)| format!("{}·{l}", format_rat(c)))
        .collect();
    println!("(1 + x)(x + 2x^2) = {}", rendered.join(" + "));

    // A Lie table with a nonzero square is caught by validation.
    let bad = Algebra::new(3, Kind::Lie, vec![(1, 1, 2, Rat::one())], None, None).unwrap();
    for violation in bad.validate() {
        println!("bad Lie table: {violation}");
    }

    // The file format round-trips exactly.
    let json = a.to_json();
    assert_eq!(Algebra::from_json(&json).unwrap(), a);
    println!("JSON round trip is exact ({} bytes)", json.len());
}
