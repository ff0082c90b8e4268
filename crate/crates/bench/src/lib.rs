//! Shared inputs for the benchmarks in `benches/`.

use vertex_core::{OneParticleVector, Scalar};

/// A fixed Gaussian-rational vector over `modes` modes with small entries.
pub fn sample_vector(modes: u32, salt: i64) -> OneParticleVector {
    OneParticleVector::from_dense(
        (0..modes as i64)
            .map(|i| Scalar::gaussian(i + salt - 2, i + 2, salt - i, 3))
            .collect(),
    )
}
