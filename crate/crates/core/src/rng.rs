//! Deterministic, order-independent random streams.
//!
//! Every random draw in the simulator comes from a stream keyed by
//! `(seed, link_id, orientation_id, realization_id)`. Distinct tuples give
//! statistically independent streams; the same tuple always reproduces the
//! same sequence, so results do not depend on evaluation order or thread
//! scheduling.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// `orientation_id` slot for draws that belong to the channel itself
/// (e.g. per-path XPR) rather than to any particular phone orientation.
pub const CHANNEL_STREAM: u32 = u32::MAX;

/// Independent reproducible RNG stream for one work item.
pub fn rng_for(seed: u64, link_id: u32, orientation_id: u32, realization_id: u32) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    let mut state = splitmix64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let ids = [link_id as u64, orientation_id as u64, realization_id as u64];
    for (chunk, id) in key.chunks_exact_mut(8).zip(ids.iter().chain(std::iter::once(&0u64))) {
        state = splitmix64(state.wrapping_add(id.wrapping_mul(0xbf58_476d_1ce4_e5b9)));
        chunk.copy_from_slice(&state.to_le_bytes());
    }
    ChaCha12Rng::from_seed(key)
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
