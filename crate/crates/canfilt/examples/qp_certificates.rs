//! Exact optimality certificates: KKT re-verification independent of the
//! solver, the two exclusive branches of Farkas' lemma, and agreement with
//! the brute-force active-set oracle.
//!
//! Run with `cargo run --example qp_certificates`.

use canfilt::builders;
use canfilt::qp::{
    build_constraints, enumerate_active_sets_oracle, farkas_certificate, solve, verify_kkt,
    FarkasCertificate,
};
use canfilt::rational::{format_rat, Rat};
use num_traits::Zero;

fn main() {
    let built = builders::monomial_quotient(1, &[vec![4]]).unwrap();
    let cs = build_constraints(&built.algebra, &built.grouping).unwrap();
    println!("constraint rows of k[x]/(x⁴): {:?}", cs.rows);

    let cert = solve(&cs);
    println!(
        "optimum w* = ({}), objective {}",
        cert.w_star.iter().map(format_rat).collect::<Vec<_>>().join(", "),
        format_rat(&cert.objective)
    );
    println!("independent KKT re-check: {}", verify_kkt(&cs, &cert));

    // The same optimum from trying every active set.
    let oracle = enumerate_active_sets_oracle(&cs, 20).unwrap();
    println!("oracle agrees: {}", oracle.w_star == cert.w_star);

    // Farkas at the all-tight optimum: the multiplier branch.
    match farkas_certificate(&cs, &cert.w_star).unwrap() {
        FarkasCertificate::Multipliers(lam) => println!(
            "farkas multipliers: ({})",
            lam.iter().map(format_rat).collect::<Vec<_>>().join(", ")
        ),
        FarkasCertificate::Witness(_) => unreachable!("w* is optimal"),
    }

    // Farkas at the origin: the witness branch proving w = 0 suboptimal.
    let zero = vec![Rat::zero(); cs.n_vars];
    match farkas_certificate(&cs, &zero).unwrap() {
        FarkasCertificate::Witness(y) => println!(
            "improving direction at 0: ({})",
            y.iter().map(format_rat).collect::<Vec<_>>().join(", ")
        ),
        FarkasCertificate::Multipliers(_) => unreachable!("0 is not optimal"),
    }
}
