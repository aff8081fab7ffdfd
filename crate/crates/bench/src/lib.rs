//! Shared inputs for the engine benchmarks.

use gapreps::{random_word, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Sizes `2^14 ..= 2^17`.
pub const SIZES: [usize; 4] = [1 << 14, 1 << 15, 1 << 16, 1 << 17];

/// Reproducible random word of length `n` over `sigma` letters.
pub fn seeded_word(n: usize, sigma: u16, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    random_word(&mut rng, n, sigma)
}
