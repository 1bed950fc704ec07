//! The direct-sum composition rule: the canonical filtration of A1 ⊕ A2
//! rescales the parts by b2·l1 and b1·l2 (l = wt, b = ‖·‖² of each part's
//! canonical filtration). The same vector falls out of a single joint
//! optimization, which is how the rule is cross-checked here.
//!
//! Run with `cargo run --example direct_sums`.

use canfilt::builders;
use canfilt::canonical::{canonical_direct_sum, canonical_graded};

fn main() {
    let c2 = builders::monomial_quotient(1, &[vec![2]]).unwrap();
    let c3 = builders::monomial_quotient(1, &[vec![3]]).unwrap();
    let r2 = canonical_graded(&c2.algebra, &c2.grouping).unwrap();
    let r3 = canonical_graded(&c3.algebra, &c3.grouping).unwrap();
    println!("k[x]/(x²) canonical: {:?} (l=1, b=1)", r2.weights);
    println!("k[x]/(x³) canonical: {:?} (l=3, b=5)", r3.weights);

    let composed = canonical_direct_sum(
        &c2.algebra, &c2.grouping, &r2,
        &c3.algebra, &c3.grouping, &r3,
    )
    .unwrap();
    println!("composition rule on the sum: {:?}", composed.weights);

    let joint_algebra = c2.algebra.direct_sum(&c3.algebra).unwrap();
    let joint_grouping = c2.grouping.direct_sum(&c3.grouping);
    let joint = canonical_graded(&joint_algebra, &joint_grouping).unwrap();
    println!("joint cone optimization:     {:?}", joint.weights);
    assert_eq!(composed.weights, joint.weights);

    // A semistable block contributes zeros unscaled.
    let m2 = builders::full_matrix(2).unwrap();
    let rm = canfilt::canonical::canonical_semisimple(&m2.algebra).unwrap();
    let mixed = canonical_direct_sum(
        &m2.algebra, &m2.grouping, &rm,
        &c2.algebra, &c2.grouping, &r2,
    )
    .unwrap();
    println!("Mat_2 ⊕ k[x]/(x²):           {:?}", mixed.weights);
}
