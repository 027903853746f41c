//! Splittable, counter-based random streams.
//!
//! A [`StreamSeed`] is a ChaCha key. Independent sub-streams are addressed
//! by a 64-bit stream number, so trial `t` always sees the same draws no
//! matter which worker thread runs it or in what order.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Stream generator handed to the simulators.
pub type StreamRng = ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamSeed {
    key: [u8; 32],
}

impl StreamSeed {
    pub fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        ChaCha8Rng::seed_from_u64(seed).fill_bytes(&mut key);
        Self { key }
    }

    /// Derives an independent child seed, e.g. one per grid point.
    pub fn child(&self, label: u64) -> Self {
        let mut rng = ChaCha8Rng::from_seed(self.key);
        // Stream u64::MAX is reserved for key derivation.
        rng.set_stream(u64::MAX);
        rng.set_word_pos(u128::from(label) * 8);
        let mut key = [0u8; 32];
        rng.fill_bytes(&mut key);
        Self { key }
    }

    /// Generator for sub-stream `index`.
    pub fn stream(&self, index: u64) -> StreamRng {
        assert!(index != u64::MAX, "stream u64::MAX is reserved");
        let mut rng = ChaCha8Rng::from_seed(self.key);
        rng.set_stream(index);
        rng
    }
}
