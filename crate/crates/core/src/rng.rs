//! Seeded random streams with deterministic substream derivation.
//!
//! A stream is identified by its root seed and a derivation path. Deriving a
//! child only looks at the parent's seed, never at how many values the parent
//! has produced, so per-cluster or per-column substreams are stable no matter
//! in which order (or on which thread) they are consumed.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Child seed for `(parent, index)`.
pub fn derive_seed(parent: u64, index: u64) -> u64 {
    splitmix64(parent ^ splitmix64(index.wrapping_mul(GOLDEN_GAMMA).wrapping_add(1)))
}

#[derive(Debug, Clone)]
pub struct RandomStream {
    root: u64,
    seed: u64,
    path: Vec<u64>,
    rng: ChaCha8Rng,
}

impl RandomStream {
    /// Root stream for `seed`.
    pub fn new(seed: u64) -> Self {
        Self {
            root: seed,
            seed,
            path: Vec::new(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent child stream. Does not advance `self`.
    pub fn derive(&self, index: u64) -> Self {
        let seed = derive_seed(self.seed, index);
        let mut path = self.path.clone();
        path.push(index);
        Self {
            root: self.root,
            seed,
            path,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Child stream keyed by the next value of `self`; unlike [`derive`],
    /// repeated forks give different children.
    ///
    /// [`derive`]: RandomStream::derive
    pub fn fork(&mut self) -> Self {
        let index = self.rng.next_u64();
        self.derive(index)
    }

    pub fn root_seed(&self) -> u64 {
        self.root
    }

    pub fn path(&self) -> &[u64] {
        &self.path
    }

    /// Uniform draw in [0, 1).
    pub fn uniform01(&mut self) -> f64 {
        // 53 random mantissa bits
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform01()
    }

    pub fn std_normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }

    pub fn normal(&mut self, mean: f64, sd: f64) -> f64 {
        mean + sd * self.std_normal()
    }

    /// Uniform index in `0..len`. `len` must be non-zero.
    pub fn index(&mut self, len: usize) -> usize {
        assert!(len > 0, "index over an empty range");
        // Lemire's multiply-shift; bias is below 2^-32 for the sizes used here
        ((self.rng.next_u64() as u128 * len as u128) >> 64) as usize
    }

    /// Fisher–Yates permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.index(i + 1);
            idx.swap(i, j);
        }
        idx
    }

    /// `k` distinct indices from `0..n`, in increasing order.
    pub fn sample_sorted(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut picked = self.permutation(n);
        picked.truncate(k);
        picked.sort_unstable();
        picked
    }
}

impl RngCore for RandomStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

/// Root stream for `seed`.
pub fn make_stream(seed: u64) -> RandomStream {
    RandomStream::new(seed)
}
