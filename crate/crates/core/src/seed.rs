//! Hierarchical seed splitting.
//!
//! A run seed is expanded into independent per-trial streams by mixing the
//! parent seed with the trial index, so trial `i` sees the same stream no
//! matter how many trials follow it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The pseudorandom stream used throughout the crate.
pub type StreamRng = ChaCha8Rng;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Child seed number `index` of `parent`.
pub fn derive_seed(parent: u64, index: u64) -> u64 {
    splitmix64(splitmix64(parent) ^ index.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

pub fn stream(seed: u64) -> StreamRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Stream for child `index` of `parent`.
pub fn child_stream(parent: u64, index: u64) -> StreamRng {
    stream(derive_seed(parent, index))
}

/// Draws a base seed from `rng` for a family of child streams.
pub fn fork<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    rng.gen()
}
