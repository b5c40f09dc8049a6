use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{fundamental_invariants_with, AdjointLayout};
use crate::states::{stream_rng, QutritState, DIM};

/// Settings for [`perturb_and_ascend`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PerturbConfig {
    /// Initial perturbation amplitude per real coordinate.
    pub amplitude: f64,
    /// Amplitude multiplier after an accepted move.
    pub grow: f64,
    /// Amplitude multiplier after a rejected move.
    pub shrink: f64,
    /// The run stops once the amplitude drops below this.
    pub min_amplitude: f64,
    pub max_accepted: usize,
    pub max_attempts: usize,
    pub rng_seed: u64,
}

impl Default for PerturbConfig {
    fn default() -> Self {
        PerturbConfig {
            amplitude: 1e-2,
            grow: 1.1,
            shrink: 0.97,
            min_amplitude: 1e-10,
            max_accepted: 100_000,
            max_attempts: 1_000_000,
            rng_seed: 0,
        }
    }
}

impl PerturbConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.amplitude > 0.0
            && self.grow >= 1.0
            && self.shrink > 0.0
            && self.shrink < 1.0
            && self.min_amplitude > 0.0
            && self.max_accepted > 0
            && self.max_attempts > 0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("invalid perturbation config {self:?}")))
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PerturbResult {
    pub state: QutritState,
    pub initial_value: f64,
    pub value: f64,
    pub accepted: usize,
    pub attempts: usize,
    pub final_amplitude: f64,
}

fn abs_delta(layout: &AdjointLayout, s: &QutritState) -> f64 {
    fundamental_invariants_with(layout, s).delta333.norm()
}

/// Random coordinate ascent of `|Δ333|` over the 54 real parameters of a
/// normalized state. Each attempt perturbs one real or imaginary part, then
/// renormalizes; moves are kept only if `|Δ333|` strictly increases.
pub fn perturb_and_ascend(start: &QutritState, cfg: &PerturbConfig) -> Result<PerturbResult> {
    cfg.validate()?;
    if start.norm() == 0.0 {
        return Err(Error::InvalidParameter("cannot ascend from the zero state".into()));
    }
    let layout = AdjointLayout::embedded();
    let mut rng = stream_rng(cfg.rng_seed, 0);
    let mut state = start.normalized();
    let initial_value = abs_delta(layout, &state);
    let mut value = initial_value;
    let mut amp = cfg.amplitude;
    let (mut accepted, mut attempts) = (0, 0);

    while accepted < cfg.max_accepted && attempts < cfg.max_attempts && amp >= cfg.min_amplitude {
        attempts += 1;
        let coord = rng.gen_range(0..2 * DIM);
        let step = amp * rng.gen_range(-1.0..=1.0);
        let mut cand = state;
        let z = &mut cand.amplitudes_mut()[coord / 2];
        if coord % 2 == 0 {
            z.re += step;
        } else {
            z.im += step;
        }
        let cand = cand.normalized();
        let v = abs_delta(layout, &cand);
        if v > value {
            state = cand;
            value = v;
            accepted += 1;
            amp *= cfg.grow;
        } else {
            amp *= cfg.shrink;
        }
    }

    Ok(PerturbResult { state, initial_value, value, accepted, attempts, final_amplitude: amp })
}
