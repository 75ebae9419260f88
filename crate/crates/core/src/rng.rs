//! Deterministic random substreams.
//!
//! Every stochastic site in a run draws from a ChaCha8 stream keyed by
//! (run seed, stage, lane). Stage 0 is initialization; stage `t + 1` is the
//! update at iteration/generation `t`. Lanes are particle or chromosome
//! indices. Keying each site independently makes results identical whether
//! lanes are evaluated sequentially or in parallel.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) fn substream(seed: u64, stage: u64, lane: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&stage.to_le_bytes());
    key[16..24].copy_from_slice(&lane.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}
