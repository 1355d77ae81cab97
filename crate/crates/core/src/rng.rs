//! Small counter-based random number generator.
//!
//! Every Monte Carlo trial owns its own stream, derived statelessly from the
//! run seed and the trial index. That makes results bit-identical for any
//! worker count and trial ordering. splitmix64 is used both as the mixing
//! function and as the sequential generator; it is fast, passes the usual
//! statistical batteries, and is trivially portable. Not for cryptography.

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic per-trial generator.
#[derive(Clone, Debug)]
pub struct TrialRng {
    state: u64,
}

impl TrialRng {
    pub fn new(seed: u64) -> Self {
        TrialRng { state: mix64(seed) }
    }

    /// Stream for one trial: mixes the seed with the trial counter so that
    /// streams are decorrelated across both axes.
    pub fn from_seed_and_trial(seed: u64, trial: u64) -> Self {
        let state = mix64(seed ^ mix64(trial.wrapping_add(0xA076_1D64_78BD_642F)));
        TrialRng { state }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in 0..bound (bound > 0), by rejection to stay unbiased.
    #[inline]
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}
