//! Exact rational scalars.
//!
//! Every structure constant, weight, and multiplier in this crate is a
//! `Rat`: an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. Arithmetic never rounds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rat = BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p/q"` or `"p"`, with optional sign.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rat::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Canonical display form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The vector of rationals `c·w` where `c > 0` clears all denominators and
/// divides out the common content. The all-zero vector maps to all zeros.
///
/// This is the unique representative of a weight vector up to *positive*
/// scaling; the sign pattern is preserved (never flipped), since scaling a
/// filtration by a negative factor changes the filtration. Two weight
/// vectors span the same filtration ray exactly when their primitive
/// integer forms are equal.
pub fn primitive_integer_form(weights: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for w in weights {
        lcm = lcm.lcm(w.denom());
    }
    let mut ints: Vec<BigInt> = weights.iter().map(|w| (w * &lcm).to_integer()).collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if gcd.is_zero() {
        return ints;
    }
    for v in &mut ints {
        *v = &*v / &gcd;
    }
    ints
}
