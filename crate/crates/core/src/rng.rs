//! Seeded pseudo-random numbers with a frozen sampling procedure.
//!
//! The stream is ChaCha8 (`rand_chacha`, seeded through `seed_from_u64`), whose output is
//! specified bit-for-bit independent of platform. Bounded integers are drawn by rejection
//! on the full 64-bit word: words `>= 2^64 - (2^64 mod span)` are
//! discarded and the result is `word mod span`. Floats in `[0, 1)` take the top 53 bits.
//! Nothing here depends on `rand`'s distribution code, so golden files stay stable across
//! `rand` releases.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[derive(Clone, Debug)]
pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self { inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `0..span`. Panics on `span == 0`.
    pub fn below(&mut self, span: u64) -> u64 {
        assert!(span > 0, "empty range");
        // words above `last` would bias the low residues
        let rem = (u64::MAX % span + 1) % span;
        let last = u64::MAX - rem;
        loop {
            let word = self.next_u64();
            if word <= last {
                return word % span;
            }
        }
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }

    /// Uniform float in `[0, 1)`.
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_f64(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit_f64()
    }

    /// Nonzero rational `p/q` with `|p| <= max_num`, `1 <= q <= max_den`.
    pub fn nonzero_rational(&mut self, max_num: i64, max_den: i64) -> BigRational {
        loop {
            let p = self.range_inclusive(-max_num, max_num);
            if p == 0 {
                continue;
            }
            let q = self.range_inclusive(1, max_den);
            return BigRational::new(BigInt::from(p), BigInt::from(q));
        }
    }
}
