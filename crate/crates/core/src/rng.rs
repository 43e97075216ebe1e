//! Deterministic RNG stream derivation.
//!
//! Every random decision in the toolkit draws from a stream derived from the
//! run seed plus a role tag (and optional indices), so components consume
//! independent streams and results do not depend on call interleaving.

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

/// Role tags for the top-level streams derived from a run seed.
pub mod salt {
    /// Graph generation, sub-keyed by (node, edge slot).
    pub const GRAPH: u64 = 1;
    /// Per-video permutations for the rank-based weight mode.
    pub const WEIGHTS: u64 = 2;
    /// Per-user request and service-time sampling, sub-keyed by user index.
    pub const USER: u64 = 3;
    /// Cache-policy internal randomness.
    pub const POLICY: u64 = 4;
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mix a seed with a sequence of tags into a single 64-bit key.
pub fn mix(seed: u64, tags: &[u64]) -> u64 {
    let mut acc = splitmix64(seed);
    for &tag in tags {
        acc = splitmix64(acc ^ splitmix64(tag));
    }
    acc
}

/// Derive an independent RNG stream for `(seed, tags...)`.
pub fn stream(seed: u64, tags: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(seed, tags))
}
