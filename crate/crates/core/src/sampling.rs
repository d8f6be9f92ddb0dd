//! Reproducible shot sampling.
//!
//! The generator is ChaCha with 8 rounds (`rand_chacha::ChaCha8Rng`),
//! seeded through `SeedableRng::seed_from_u64`. Each shot consumes one
//! `next_u64()` word `w`, maps it to `u = (w >> 11) · 2⁻⁵³ ∈ [0, 1)`, and
//! counts the shot as outcome 0 when `u < p0`. ChaCha output is specified
//! bit-exactly and is platform independent, so `(p0, shots, seed)` fixes
//! the histogram everywhere.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::error::{Result, ZenoError};

/// Shot count of the reference experiments.
pub const DEFAULT_SHOTS: u64 = 8192;

/// Slack allowed when a computed probability lands a hair outside [0, 1].
const PROBABILITY_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShotHistogram {
    pub shots: u64,
    pub counts0: u64,
    pub counts1: u64,
    pub seed: u64,
}

impl ShotHistogram {
    /// Fraction of shots that read 0.
    pub fn frequency0(&self) -> f64 {
        self.counts0 as f64 / self.shots as f64
    }
}

#[inline]
fn unit_interval(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Draws `shots` independent readouts of a qubit whose probability of
/// reading 0 is `p0`.
pub fn sample_shots(p0: f64, shots: u64, seed: u64) -> Result<ShotHistogram> {
    if !(-PROBABILITY_SLACK..=1.0 + PROBABILITY_SLACK).contains(&p0) {
        return Err(ZenoError::InvalidParameter(format!(
            "probability {p0} is outside [0, 1]"
        )));
    }
    if shots == 0 {
        return Err(ZenoError::InvalidParameter("shots must be at least 1".into()));
    }
    let p0 = p0.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts0 = (0..shots)
        .filter(|_| unit_interval(rng.next_u64()) < p0)
        .count() as u64;
    Ok(ShotHistogram {
        shots,
        counts0,
        counts1: shots - counts0,
        seed,
    })
}
