//! Asymmetric independent Pauli channel.
//!
//! Parametrized by the total per-qubit error probability p and the asymmetry
//! A = 2 p_Z / (p - p_Z). A = 1 is the depolarizing channel, A = infinity the
//! phase-flip channel. For intermediate A we split the non-Z budget evenly,
//! p_X = p_Y = p / (A + 2); this is the convention consistent with both
//! endpoints and is exposed so callers can override the split if needed.

use crate::error::Error;
use crate::pauli::{Pauli, PauliOperator};
use crate::rng::TrialRng;

/// Per-qubit Pauli error channel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelModel {
    p: f64,
    asymmetry: f64,
    p_x: f64,
    p_y: f64,
    p_z: f64,
}

impl ChannelModel {
    /// Builds a channel from (p, A). A may be `f64::INFINITY` for the pure
    /// phase-flip channel.
    pub fn new(p: f64, asymmetry: f64) -> Result<Self, Error> {
        if !(0.0..1.0).contains(&p) {
            return Err(Error::invalid_argument(format!(
                "p must lie in [0, 1), got {p}"
            )));
        }
        if !(asymmetry > 0.0) {
            return Err(Error::invalid_argument(format!(
                "asymmetry must be positive, got {asymmetry}"
            )));
        }
        let (p_x, p_y, p_z) = if asymmetry.is_infinite() {
            (0.0, 0.0, p)
        } else {
            let side = p / (asymmetry + 2.0);
            (side, side, asymmetry * p / (asymmetry + 2.0))
        };
        Ok(ChannelModel { p, asymmetry, p_x, p_y, p_z })
    }

    /// Channel with explicit per-Pauli probabilities (an override hook; the
    /// asymmetry is derived back from the rates).
    pub fn from_rates(p_x: f64, p_y: f64, p_z: f64) -> Result<Self, Error> {
        for (name, v) in [("p_x", p_x), ("p_y", p_y), ("p_z", p_z)] {
            if !(0.0..1.0).contains(&v) {
                return Err(Error::invalid_argument(format!("{name} out of range: {v}")));
            }
        }
        let p = p_x + p_y + p_z;
        if p >= 1.0 {
            return Err(Error::invalid_argument(format!("total rate {p} >= 1")));
        }
        let asymmetry = if p - p_z > 0.0 {
            2.0 * p_z / (p - p_z)
        } else {
            f64::INFINITY
        };
        Ok(ChannelModel { p, asymmetry, p_x, p_y, p_z })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn asymmetry(&self) -> f64 {
        self.asymmetry
    }

    pub fn p_x(&self) -> f64 {
        self.p_x
    }

    pub fn p_y(&self) -> f64 {
        self.p_y
    }

    pub fn p_z(&self) -> f64 {
        self.p_z
    }

    /// Samples an n-qubit error; each qubit independently takes X, Y, Z or
    /// identity. Deterministic given the rng state.
    pub fn sample_error(&self, n: usize, rng: &mut TrialRng) -> PauliOperator {
        let mut e = PauliOperator::identity(n);
        for q in 0..n {
            let u = rng.next_f64();
            if u < self.p {
                let p = if u < self.p_x {
                    Pauli::X
                } else if u < self.p_x + self.p_y {
                    Pauli::Y
                } else {
                    Pauli::Z
                };
                e.set(q, p);
            }
        }
        e
    }

    /// Probability mass of the ordered error class with i Z, l X and
    /// j - i - l Y components among weight-j errors:
    /// C(j,i) p_z^i C(j-i,l) p_x^l p_y^(j-i-l).
    pub fn class_weight(&self, j: usize, i: usize, l: usize) -> Result<f64, Error> {
        if i > j || l > j - i {
            return Err(Error::invalid_argument(format!(
                "class indices (i={i}, l={l}) out of range for weight {j}"
            )));
        }
        let m = j - i - l;
        Ok(binomial(j, i) as f64
            * self.p_z.powi(i as i32)
            * binomial(j - i, l) as f64
            * self.p_x.powi(l as i32)
            * self.p_y.powi(m as i32))
    }
}

/// Binomial coefficient over u128 to stay exact for the lattice sizes here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result
}
