//! Shared inputs for the criterion benchmarks.

use voxtower::{plans, Layer};

/// The 31x31 stepped plan used throughout the benchmarks.
pub fn stepped31() -> Layer {
    plans::stepped_squares(&[31, 23, 15]).expect("valid widths")
}

/// Deterministic pseudo-random square layer with roughly half its cells set.
pub fn noise(n: usize, seed: u64) -> Layer {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    Layer::from_fn(n, n, |_, _| {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) & 1 == 1
    })
    .expect("positive size")
}
