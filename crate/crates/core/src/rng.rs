//! Purpose-tagged random streams.
//!
//! Each consumer of randomness (graph, understanding, confidence, groups)
//! draws from its own ChaCha stream whose seed is a fixed 64-bit mix of the
//! master seed and a purpose tag, so changing how one stream is consumed never
//! shifts the others.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

pub const GRAPH: &str = "graph";
pub const UNDERSTANDING: &str = "understanding";
pub const CONFIDENCE: &str = "confidence";
pub const GROUPS: &str = "groups";

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the stream for `tag` under `master`.
pub fn stream_seed(master: u64, tag: &str) -> u64 {
    splitmix64(master ^ splitmix64(fnv1a64(tag.as_bytes())))
}

pub fn stream(master: u64, tag: &str) -> StreamRng {
    ChaCha8Rng::seed_from_u64(stream_seed(master, tag))
}
