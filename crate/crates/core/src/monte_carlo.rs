//! Seeded, parallel logical-error-rate estimation.
//!
//! Trials are embarrassingly parallel: each one derives its own RNG stream
//! from the run seed and the trial index, so a run's outcome is bit-identical
//! for any worker count. Failure counts are aggregated per residual class
//! and reported with a Wilson 95% interval, which stays meaningful at the
//! rare-failure rates these simulations target.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::channel::ChannelModel;
use crate::code::{build, CodeFamily};
use crate::decoder::{residual_class, Decoder, ResidualClass};
use crate::error::Error;
use crate::rng::TrialRng;

/// Which decoder runs on the sampled syndromes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecoderVariant {
    /// The family's own decoder (weight preprocessing for ZZZY codes).
    Tailored,
    /// Plain uniform-weight matching, as a baseline: preprocessing is
    /// skipped, the structural inter-pass flip is kept.
    Plain,
}

impl fmt::Display for DecoderVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecoderVariant::Tailored => write!(f, "tailored"),
            DecoderVariant::Plain => write!(f, "plain"),
        }
    }
}

impl FromStr for DecoderVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "tailored" => Ok(DecoderVariant::Tailored),
            "plain" => Ok(DecoderVariant::Plain),
            other => Err(Error::invalid_argument(format!(
                "unknown decoder variant {other:?}; expected tailored|plain"
            ))),
        }
    }
}

/// One Monte Carlo cell.
#[derive(Clone, Copy, Debug)]
pub struct TrialConfig {
    pub family: CodeFamily,
    pub d: usize,
    pub p: f64,
    pub asymmetry: f64,
    pub trials: u64,
    pub seed: u64,
    pub variant: DecoderVariant,
}

/// Aggregated outcome of one cell.
#[derive(Clone, Debug)]
pub struct SimResult {
    pub config: TrialConfig,
    pub fail_x: u64,
    pub fail_y: u64,
    pub fail_z: u64,
    pub p_l: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seconds: f64,
}

impl SimResult {
    pub fn failures(&self) -> u64 {
        self.fail_x + self.fail_y + self.fail_z
    }

    pub fn csv_header() -> &'static str {
        "family,d,p,A,trials,fail_x,fail_y,fail_z,pl,ci_lo,ci_hi,seed"
    }

    pub fn csv_row(&self) -> String {
        let a = if self.config.asymmetry.is_infinite() {
            "inf".to_string()
        } else {
            format!("{}", self.config.asymmetry)
        };
        format!(
            "{},{},{},{},{},{},{},{},{:e},{:e},{:e},{}",
            self.config.family,
            self.config.d,
            self.config.p,
            a,
            self.config.trials,
            self.fail_x,
            self.fail_y,
            self.fail_z,
            self.p_l,
            self.ci_low,
            self.ci_high,
            self.config.seed
        )
    }
}

/// Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

const CHUNK: u64 = 1 << 14;

/// Runs one cell: sample, measure, decode, classify, aggregate.
pub fn run(cfg: &TrialConfig) -> Result<SimResult, Error> {
    if cfg.trials == 0 {
        return Err(Error::invalid_argument("trials must be >= 1".into()));
    }
    let code = build(cfg.family, cfg.d)?;
    let channel = ChannelModel::new(cfg.p, cfg.asymmetry)?;
    let decoder = match cfg.variant {
        DecoderVariant::Tailored => Decoder::new(&code),
        DecoderVariant::Plain => Decoder::new_plain(&code),
    };
    let started = Instant::now();
    let n_chunks = cfg.trials.div_ceil(CHUNK);
    let (fail_x, fail_y, fail_z) = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(cfg.trials);
            let mut counts = (0u64, 0u64, 0u64);
            for trial in lo..hi {
                let mut rng = TrialRng::from_seed_and_trial(cfg.seed, trial);
                let e = channel.sample_error(code.n(), &mut rng);
                if e.is_identity() {
                    continue;
                }
                let s = code.syndrome(&e).expect("lengths match");
                let result = decoder.decode(&s).expect("decode is total");
                match residual_class(&e, &result, &code) {
                    ResidualClass::NoError => {}
                    ResidualClass::LogicalX => counts.0 += 1,
                    ResidualClass::LogicalY => counts.1 += 1,
                    ResidualClass::LogicalZ => counts.2 += 1,
                    ResidualClass::SyndromeMismatch => {
                        panic!("decoder violated syndrome reproduction on {e}")
                    }
                }
            }
            counts
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    let seconds = started.elapsed().as_secs_f64();
    let failures = fail_x + fail_y + fail_z;
    let (ci_low, ci_high) = wilson_interval(failures, cfg.trials, 1.96);
    Ok(SimResult {
        config: *cfg,
        fail_x,
        fail_y,
        fail_z,
        p_l: failures as f64 / cfg.trials as f64,
        ci_low,
        ci_high,
        seconds,
    })
}

/// Runs every cell of a grid in order.
pub fn sweep(cfgs: &[TrialConfig]) -> Result<Vec<SimResult>, Error> {
    cfgs.iter().map(run).collect()
}
