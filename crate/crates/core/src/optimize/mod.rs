//! Sphere-constrained maximization of `|f|` over semi-simple coefficients.

mod gradient;
mod known;
mod objective;
mod perturb;

pub use gradient::{
    best_chart, free_axes, implicit_gradient, implicit_gradient_in_chart, is_critical,
    CHART_THRESHOLD, DEFAULT_CRITICAL_TOL,
};
pub use known::{known_maximizers, orbit, orbit_distance};
pub use objective::Objective;
pub use perturb::{perturb_and_ascend, PerturbConfig, PerturbResult};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::states::{sample_semisimple_with, stream_rng, SemiSimpleCoeffs};

/// Two optima closer than this (up to sign/permutation) are the same optimum.
pub const DEDUP_TOL: f64 = 1e-6;
/// Distance within which a result is matched against the known-maximizer catalog.
pub const MATCH_TOL: f64 = 1e-4;
const MIN_STEP: f64 = 1e-18;
const MAX_STEP: f64 = 0.5;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OptConfig {
    pub restarts: usize,
    pub max_iters: usize,
    pub step: f64,
    pub tol_grad: f64,
    pub rng_seed: u64,
}

impl Default for OptConfig {
    fn default() -> Self {
        OptConfig { restarts: 64, max_iters: 2000, step: 0.05, tol_grad: 1e-12, rng_seed: 0 }
    }
}

impl OptConfig {
    pub fn with_seed(seed: u64) -> Self {
        OptConfig { rng_seed: seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParameter(format!("{what} must be positive")));
        if self.restarts == 0 {
            return bad("restarts");
        }
        if self.max_iters == 0 {
            return bad("max_iters");
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return bad("step");
        }
        if !(self.tol_grad > 0.0 && self.tol_grad.is_finite()) {
            return bad("tol_grad");
        }
        Ok(())
    }
}

/// Why a restart stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    /// Sphere gradient norm fell below `tol_grad`.
    Gradient,
    /// The line search could not find an increase at any step size.
    Stalled,
    /// `max_iters` reached.
    MaxIters,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RestartTrace {
    pub index: usize,
    pub start: SemiSimpleCoeffs,
    pub end: SemiSimpleCoeffs,
    pub value: f64,
    pub iterations: usize,
    pub stop: StopReason,
    /// `|f|` after every accepted step, starting with the initial point.
    pub values: Vec<f64>,
}

impl RestartTrace {
    pub fn converged(&self) -> bool {
        self.stop != StopReason::MaxIters
    }

    pub fn is_monotone(&self) -> bool {
        self.values.windows(2).all(|w| w[1] >= w[0])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LocalOptimum {
    pub point: SemiSimpleCoeffs,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OptResult {
    pub objective: Objective,
    pub config: OptConfig,
    pub best_point: SemiSimpleCoeffs,
    pub best_value: f64,
    pub all_local_optima: Vec<LocalOptimum>,
    pub matched_known: Option<usize>,
    pub iterations_used: usize,
    pub restarts_converged: usize,
    #[serde(skip_serializing)]
    pub trace: Vec<RestartTrace>,
}

impl OptResult {
    /// Share of restarts whose final `|f|` is within `rel` of `target`.
    pub fn fraction_reaching(&self, target: f64, rel: f64) -> f64 {
        let hits = self.trace.iter().filter(|t| (t.value - target).abs() <= rel * target).count();
        hits as f64 / self.trace.len() as f64
    }

    /// JSON rendering; the per-restart trace is included only when `verbose`.
    pub fn to_json(&self, verbose: bool) -> Result<String> {
        let mut v = serde_json::to_value(self)?;
        if verbose {
            v["restart_trace"] = serde_json::to_value(&self.trace)?;
        }
        Ok(serde_json::to_string_pretty(&v)?)
    }
}

/// Multi-start projected-gradient ascent of `(f/m)²` on the unit sphere.
pub fn maximize_abs(obj: Objective, cfg: &OptConfig) -> Result<OptResult> {
    cfg.validate()?;
    let trace: Vec<RestartTrace> =
        (0..cfg.restarts).into_par_iter().map(|i| ascend(obj, cfg, i)).collect();

    let mut best = 0;
    for (i, t) in trace.iter().enumerate() {
        if t.value > trace[best].value {
            best = i;
        }
    }
    let best_point = trace[best].end;
    let best_value = trace[best].value;

    let mut optima: Vec<LocalOptimum> = Vec::new();
    for t in &trace {
        if !optima.iter().any(|o| orbit_distance(t.end, o.point) < DEDUP_TOL) {
            optima.push(LocalOptimum { point: t.end, value: t.value });
        }
    }
    optima.sort_by(|x, y| y.value.total_cmp(&x.value));

    let matched_known = known_maximizers(obj)
        .ok()
        .and_then(|pts| pts.iter().position(|k| orbit_distance(best_point, *k) < MATCH_TOL));

    Ok(OptResult {
        objective: obj,
        config: *cfg,
        best_point,
        best_value,
        all_local_optima: optima,
        matched_known,
        iterations_used: trace.iter().map(|t| t.iterations).sum(),
        restarts_converged: trace.iter().filter(|t| t.converged()).count(),
        trace,
    })
}

fn unit(x: [f64; 3]) -> [f64; 3] {
    let n = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    x.map(|v| v / n)
}

fn ascend(obj: Objective, cfg: &OptConfig, index: usize) -> RestartTrace {
    let mut rng = stream_rng(cfg.rng_seed, index as u64);
    let start = sample_semisimple_with(&mut rng);
    let scale = obj.scale();
    let u = |x: [f64; 3]| {
        let f = obj.value(x) / scale;
        f * f
    };

    let mut x = start.to_array();
    let mut ux = u(x);
    let mut values = vec![ux.sqrt() * scale];
    let mut t = cfg.step;
    let mut stop = StopReason::MaxIters;
    let mut iterations = 0;

    while iterations < cfg.max_iters {
        let axis = best_chart(x);
        let fx = obj.value(x) / scale;
        let ambient = obj.gradient(x).map(|d| 2.0 * fx * d / scale);
        let g = match gradient::chart_gradient(x, ambient, axis) {
            Ok(g) => g,
            // Unreachable on the sphere: the largest coordinate is ≥ 1/√3.
            Err(_) => break,
        };
        if g[0].hypot(g[1]) < cfg.tol_grad {
            stop = StopReason::Gradient;
            break;
        }
        // Lift the chart step back to ambient coordinates.
        let [i, j] = free_axes(axis);
        let mut dir = [0.0; 3];
        dir[i] = g[0];
        dir[j] = g[1];
        dir[axis] = -(x[i] * g[0] + x[j] * g[1]) / x[axis];
        // Unit direction: near the high-order zeros of Δ the raw gradient is
        // too small for any useful step, so `t` is an arc length instead.
        let len = (dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]).sqrt();
        let dir = dir.map(|d| d / len);

        iterations += 1;
        let mut accepted = false;
        while t >= MIN_STEP {
            let cand = unit([x[0] + t * dir[0], x[1] + t * dir[1], x[2] + t * dir[2]]);
            let uc = u(cand);
            if uc > ux {
                x = cand;
                ux = uc;
                t = (2.0 * t).min(MAX_STEP);
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            stop = StopReason::Stalled;
            break;
        }
        values.push(ux.sqrt() * scale);
    }

    let end = SemiSimpleCoeffs::from_array(x);
    RestartTrace {
        index,
        start,
        end,
        value: obj.value(x).abs(),
        iterations,
        stop,
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::MaxConstants;

    fn small(seed: u64) -> OptConfig {
        OptConfig { restarts: 8, rng_seed: seed, ..OptConfig::default() }
    }

    #[test]
    fn config_validation() {
        assert!(OptConfig::default().validate().is_ok());
        for cfg in [
            OptConfig { restarts: 0, ..OptConfig::default() },
            OptConfig { max_iters: 0, ..OptConfig::default() },
            OptConfig { step: 0.0, ..OptConfig::default() },
            OptConfig { tol_grad: -1.0, ..OptConfig::default() },
        ] {
            assert!(maximize_abs(Objective::I6, &cfg).is_err());
        }
    }

    #[test]
    fn i6_reaches_maximum() {
        let r = maximize_abs(Objective::I6, &small(0)).unwrap();
        let m = MaxConstants::VALUES.i6;
        assert!((r.best_value - m).abs() <= 1e-10 * m, "{}", r.best_value);
        assert!(r.matched_known.is_some());
        assert!(r.best_point.is_normalized(1e-10));
        assert!((Objective::I6.value(r.best_point.to_array()).abs() - r.best_value).abs() <= 1e-12);
    }

    #[test]
    fn traces_are_monotone() {
        let r = maximize_abs(Objective::Delta333, &small(3)).unwrap();
        assert_eq!(r.trace.len(), 8);
        assert!(r.trace.iter().all(RestartTrace::is_monotone));
    }

    #[test]
    fn deterministic_json() {
        let a = maximize_abs(Objective::I12, &small(5)).unwrap().to_json(true).unwrap();
        let b = maximize_abs(Objective::I12, &small(5)).unwrap().to_json(true).unwrap();
        assert_eq!(a, b);
        let quiet = maximize_abs(Objective::I12, &small(5)).unwrap().to_json(false).unwrap();
        assert!(a.contains("\"restart_trace\""));
        assert!(!quiet.contains("\"restart_trace\""));
    }

    #[test]
    fn s_index_has_no_catalog() {
        let r = maximize_abs(Objective::SIndex, &small(0)).unwrap();
        assert_eq!(r.matched_known, None);
        assert!(r.best_value <= 3.0 + 1e-9);
    }
}
