//! Planar stabilizer codes tailored to asymmetric Pauli noise.
//!
//! The crate builds surface, ZZZY (plus its dual) and XZZX codes of odd
//! distance on the non-rotated planar lattice, decodes them with exact
//! minimum-weight perfect matching (with the ZY weight-preprocessing pipeline
//! for ZZZY codes), and evaluates them analytically and by Monte Carlo:
//! per-class non-correctable fractions, beta coefficients, small-p logical
//! error rate approximations, the undetectable-error weight enumerator, and
//! seeded parallel simulation sweeps.
//!
//! The `zzzy` binary exposes all of it on the command line; see the README.

pub mod analysis;
pub mod channel;
pub mod code;
pub mod decoder;
mod error;
pub mod monte_carlo;
pub mod pauli;
pub mod plot;
pub mod rng;

pub use channel::ChannelModel;
pub use code::{
    build, build_surface, build_xzzx, build_zzzy, build_zzzy_dual, validate, CodeFamily,
    StabilizerCode, ValidationReport,
};
pub use decoder::{
    compute_distance, mwpm, residual_class, surface_decode, update_weights, xzzx_decode,
    zzzy_decode, DecodeResult, Decoder, MatchingProblem, ResidualClass, WeightVector,
};
pub use error::Error;
pub use pauli::{Pauli, PauliOperator, Syndrome};
