//! Per-qubit weight preprocessing driven by the ZY generators.
//!
//! Before the first matching pass, every Y-measured qubit gets its weight
//! nudged: 0.9 when one of its ZY generators is switched on (pull matching
//! paths towards it), 1.1 when switched off (push them away). When an
//! activated ZY generator is isolated, meaning no X generator in the full
//! rows adjacent to its Y qubit is on, the weight drops to -0.1 to force the
//! qubit into the correction. Everything else keeps weight 1.0.

use crate::code::StabilizerCode;
use crate::pauli::Syndrome;

pub const WEIGHT_DEFAULT: f64 = 1.0;
pub const WEIGHT_ACTIVE: f64 = 0.9;
pub const WEIGHT_INACTIVE: f64 = 1.1;
pub const WEIGHT_FORCED: f64 = -0.1;

/// One weight per data qubit, 1.0 by default.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    q: Vec<f64>,
}

impl WeightVector {
    pub fn ones(n: usize) -> Self {
        WeightVector { q: vec![WEIGHT_DEFAULT; n] }
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn get(&self, qubit: usize) -> f64 {
        self.q[qubit]
    }

    pub fn set(&mut self, qubit: usize, value: f64) {
        self.q[qubit] = value;
    }

    pub fn values(&self) -> &[f64] {
        &self.q
    }

    pub(crate) fn tenths(&self) -> Vec<i64> {
        self.q.iter().map(|&w| super::distance::f64_to_tenths(w)).collect()
    }
}

/// Work counter: one unit per ZY generator for the weight assignment plus one
/// per adjacent-row generator checked, independent of the syndrome content.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UpdateStats {
    pub iterations: usize,
}

/// The preprocessing step; see the module docs. Total work is
/// O(n_zy) regardless of the physical error rate or the syndrome.
pub fn update_weights(s: &Syndrome, q: &WeightVector, code: &StabilizerCode) -> WeightVector {
    update_weights_with_stats(s, q, code).0
}

pub fn update_weights_with_stats(
    s: &Syndrome,
    q: &WeightVector,
    code: &StabilizerCode,
) -> (WeightVector, UpdateStats) {
    let mut w = q.clone();
    let mut stats = UpdateStats::default();
    // Phase 1: 0.9 / 1.1 assignment. When two ZY generators share a Y qubit
    // an activated one wins, so 1.1 never overwrites an earlier 0.9.
    for i in 0..code.n_zy() {
        stats.iterations += 1;
        let qubit = code.h_map(i);
        if s.get(i) {
            w.set(qubit, WEIGHT_ACTIVE);
        } else if w.get(qubit) == WEIGHT_DEFAULT {
            w.set(qubit, WEIGHT_INACTIVE);
        }
    }
    // Phase 2: isolated activations are forced with -0.1. The adjacency scan
    // runs unconditionally so the work count stays syndrome-independent.
    for i in 0..code.n_zy() {
        let qubit = code.h_map(i);
        let mut isolated = true;
        for &x_row in code.g_map(qubit) {
            stats.iterations += 1;
            if s.get(x_row) {
                isolated = false;
            }
        }
        if s.get(i) && isolated {
            w.set(qubit, WEIGHT_FORCED);
        }
    }
    (w, stats)
}
