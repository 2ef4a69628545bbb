//! Fixtures shared by the criterion benchmarks.

use foolset::PatternMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded random pattern with the given nonzero density.
pub fn random_pattern(rows: usize, cols: usize, density: f64, seed: u64) -> PatternMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PatternMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(density))
}
