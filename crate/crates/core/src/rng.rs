//! Deterministic, label-addressed randomness.
//!
//! A [`SeededRng`] is ChaCha20 keyed by the run seed, with the ChaCha stream
//! id derived from a text label. Each `(seed, label)` pair is an independent
//! counter-mode stream, so substreams can be handed to worker threads in any
//! order without changing results.

use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;

#[derive(Clone, Debug)]
pub struct SeededRng {
    seed: u64,
    label: String,
    inner: ChaCha20Rng,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl SeededRng {
    pub fn new(seed: u64, label: impl Into<String>) -> Self {
        let label = label.into();
        let mut state = seed;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        let mut inner = ChaCha20Rng::from_seed(key);
        inner.set_stream(fnv1a64(label.as_bytes()));
        SeededRng { seed, label, inner }
    }

    /// A fresh stream at `"{label}/{child}"` under the same seed.
    pub fn substream(&self, child: impl std::fmt::Display) -> Self {
        SeededRng::new(self.seed, format!("{}/{}", self.label, child))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl RngCore for SeededRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}
