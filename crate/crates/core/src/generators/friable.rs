//! Prefixes of the y-friable (y-smooth) numbers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::sets::{PosIntSet, ELEMENT_CAP};

/// The `n` smallest positive integers whose prime factors are all `<= y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriableSet {
    pub y: u64,
    pub n: usize,
    pub elements: PosIntSet,
}

pub fn primes_up_to(y: u64) -> Vec<u64> {
    (2..=y).filter(|&p| is_prime(p)).collect()
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Streams y-smooth numbers in increasing order.
///
/// Each number `v` is produced from the heap entry `(v, k)` where `k` indexes
/// its largest prime factor; it spawns `v * p_m` for `m >= k` only, so every
/// smooth number is pushed exactly once.
#[derive(Debug, Clone)]
pub struct SmoothNumbers {
    primes: Vec<u64>,
    heap: BinaryHeap<Reverse<(u64, usize)>>,
    limit: u64,
}

impl SmoothNumbers {
    pub fn new(y: u64, limit: u64) -> Self {
        let mut heap = BinaryHeap::new();
        if limit >= 1 {
            heap.push(Reverse((1, 0)));
        }
        SmoothNumbers { primes: primes_up_to(y), heap, limit }
    }
}

impl Iterator for SmoothNumbers {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let Reverse((v, k)) = self.heap.pop()?;
        for (m, &p) in self.primes.iter().enumerate().skip(k) {
            match v.checked_mul(p) {
                Some(w) if w <= self.limit => self.heap.push(Reverse((w, m))),
                _ => break,
            }
        }
        Some(v)
    }
}

/// `Ψ_n^y`.
pub fn friable_prefix(n: usize, y: u64) -> Result<FriableSet> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if !is_prime(y) {
        return Err(Error::InvalidParameter(format!("y = {y} is not prime")));
    }
    let v: Vec<u64> = SmoothNumbers::new(y, ELEMENT_CAP).take(n).collect();
    if v.len() < n {
        return Err(Error::ElementTooLarge { value: ELEMENT_CAP + 1, cap: ELEMENT_CAP });
    }
    Ok(FriableSet { y, n, elements: PosIntSet::from_sorted_unchecked(v) })
}

/// Number of `n >= n_min` with `max Ψ_n^y <= limit`.
pub fn count_prefixes_within(y: u64, limit: u64, n_min: usize) -> usize {
    SmoothNumbers::new(y, limit).count().saturating_sub(n_min - 1)
}
