//! Seeded sampling.
//!
//! The generator is SplitMix64, written out here so that other implementations
//! reproduce the same samples bit for bit:
//!
//! ```text
//! state  <- state + 0x9E3779B97F4A7C15            (mod 2^64)
//! z      <- state
//! z      <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2^64)
//! z      <- (z xor (z >> 27)) * 0x94D049BB133111EB  (mod 2^64)
//! output    z xor (z >> 31)
//! ```
//!
//! A value below `bound` is drawn by rejection: with
//! `t = (2^64 - bound) mod bound`, draw outputs until one is `>= t` and return
//! it `mod bound`. An `n`-subset of `{1..N}` is drawn with Floyd's algorithm:
//! for `j = N-n+1 ..= N`, draw `r` uniform in `1..=j`; insert `r`, or `j` if
//! `r` is already present.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sets::PosIntSet;

use super::divisors;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % bound;
            }
        }
    }
}

/// Floyd's algorithm: indices in `0..m`, `k` of them.
fn floyd_indices(rng: &mut SplitMix64, m: u64, k: u64) -> BTreeSet<u64> {
    let mut chosen = BTreeSet::new();
    for j in (m - k)..m {
        let r = rng.below(j + 1);
        if !chosen.insert(r) {
            chosen.insert(j);
        }
    }
    chosen
}

/// Uniform `n`-subset of `{1..N}`.
pub fn random_interval_subset(big_n: u64, n: u64, seed: u64) -> Result<PosIntSet> {
    if n == 0 || n > big_n {
        return Err(Error::InvalidParameter(format!("need 1 <= n <= N, got n={n}, N={big_n}")));
    }
    let mut rng = SplitMix64::new(seed);
    let v = floyd_indices(&mut rng, big_n, n).into_iter().map(|i| i + 1).collect();
    PosIntSet::new(v)
}

/// Uniform `n`-subset of the divisors of `N`.
pub fn random_divisor_subset(big_n: u64, n: u64, seed: u64) -> Result<PosIntSet> {
    let divs = divisors(big_n)?;
    if n == 0 || n > divs.len() as u64 {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= n <= d(N) = {}, got n={n}",
            divs.len()
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let v = floyd_indices(&mut rng, divs.len() as u64, n)
        .into_iter()
        .map(|i| divs[i as usize])
        .collect();
    PosIntSet::new(v)
}

/// Derives an independent stream seed from a campaign seed and a tuple of indices.
pub fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    let mut rng = SplitMix64::new(seed);
    let mut acc = rng.next_u64();
    for &p in parts {
        let mut r = SplitMix64::new(acc ^ p);
        acc = r.next_u64();
    }
    acc
}
