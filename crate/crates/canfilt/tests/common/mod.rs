//! Shared helpers for the integration suites.

#![allow(dead_code)]

use num_bigint::BigInt;

use canfilt::builders::{self, Built};
use canfilt::rational::{rat_int, Rat};

/// Deterministic splitmix64 stream, so random cross-checks are replayable.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

pub fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn rats(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| rat_int(x)).collect()
}

/// k[x]/(x^n) as a built algebra.
pub fn chain(n: u32) -> Built {
    builders::monomial_quotient(1, &[vec![n]]).unwrap()
}

/// The dimension-8 monomial algebra k[x,y]/(x^4, x^2 y, x y^2, y^4).
pub fn small_monomial() -> Built {
    builders::monomial_quotient(2, &[vec![4, 0], vec![2, 1], vec![1, 2], vec![0, 4]]).unwrap()
}
