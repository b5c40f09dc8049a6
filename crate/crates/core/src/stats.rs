//! Monte Carlo sampling of semi-simple states, histograms, sorted curves and
//! level-set grids on the coefficient sphere.
//!
//! Sampling is split into chunks of [`CHUNK_SIZE`] rows; chunk `k` draws from
//! stream `k` of the master seed (see [`stream_rng`]), so results do not depend
//! on the number of worker threads.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_form::{self as cf, MaxConstants};
use crate::error::{Error, Result};
use crate::io::fmt_f64;
use crate::optimize::Objective;
use crate::states::{sample_semisimple_with, stream_rng, SemiSimpleCoeffs};

pub const CHUNK_SIZE: usize = 4096;
pub const DEFAULT_BINS: usize = 100;

/// One sampled state with the magnitudes of all objectives.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SampleRow {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub abs_i6: f64,
    pub abs_i9: f64,
    pub abs_i12: f64,
    pub abs_delta: f64,
    pub s_i: f64,
}

impl SampleRow {
    pub fn evaluate(p: SemiSimpleCoeffs) -> Self {
        let SemiSimpleCoeffs { a, b, c } = p;
        let m = MaxConstants::VALUES;
        let abs_i6 = cf::i6_ss(a, b, c).abs();
        let abs_i9 = cf::i9_ss(a, b, c).abs();
        let abs_i12 = cf::i12_ss(a, b, c).abs();
        SampleRow {
            a,
            b,
            c,
            abs_i6,
            abs_i9,
            abs_i12,
            abs_delta: cf::delta_ss(a, b, c).abs(),
            s_i: abs_i6 / m.i6 + abs_i9 / m.i9 + abs_i12 / m.i12,
        }
    }

    pub fn get(&self, obj: Objective) -> f64 {
        match obj {
            Objective::I6 => self.abs_i6,
            Objective::I9 => self.abs_i9,
            Objective::I12 => self.abs_i12,
            Objective::Delta333 => self.abs_delta,
            Objective::SIndex => self.s_i,
        }
    }
}

fn check_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("sample count must be at least 1".into()));
    }
    Ok(())
}

/// Runs `f` over the coefficients of chunk `k`, in parallel over chunks, and
/// concatenates the outputs in chunk order.
fn map_chunks<T, F>(n: usize, seed: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut dyn Iterator<Item = SemiSimpleCoeffs>) -> Vec<T> + Sync,
{
    let chunks = n.div_ceil(CHUNK_SIZE);
    let parts: Vec<Vec<T>> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let len = CHUNK_SIZE.min(n - k * CHUNK_SIZE);
            let mut rng = stream_rng(seed, k as u64);
            let mut it = (0..len).map(move |_| sample_semisimple_with(&mut rng));
            f(&mut it)
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for p in parts {
        out.extend(p);
    }
    out
}

/// `n` random semi-simple states, uniform on `[-1,1]³` then normalized, with
/// every objective evaluated in closed form.
pub fn sample_and_evaluate(n: usize, seed: u64) -> Result<Vec<SampleRow>> {
    check_count(n)?;
    Ok(map_chunks(n, seed, |it| it.map(SampleRow::evaluate).collect()))
}

/// One magnitude column per requested objective, for the same states that
/// [`sample_and_evaluate`] would produce; nothing else is retained.
pub fn sample_columns(n: usize, seed: u64, objectives: &[Objective]) -> Result<Vec<Vec<f64>>> {
    check_count(n)?;
    let flat = map_chunks(n, seed, |it| {
        it.flat_map(|p| {
            let x = p.to_array();
            objectives.iter().map(move |o| o.value(x).abs())
        })
        .collect()
    });
    let k = objectives.len();
    Ok((0..k).map(|j| flat.iter().skip(j).step_by(k.max(1)).copied().collect()).collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Histogram {
    pub objective: Option<Objective>,
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram {
    pub fn with_objective(mut self, obj: Objective) -> Self {
        self.objective = Some(obj);
        self
    }

    pub fn n_bins(&self) -> usize {
        self.counts.len()
    }
}

/// Uniform bins on `[0, upper]`; values at or above `upper` land in the last bin.
pub fn histogram(values: &[f64], n_bins: usize, upper: f64) -> Result<Histogram> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if n_bins < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 bins, got {n_bins}")));
    }
    if !(upper > 0.0 && upper.is_finite()) {
        return Err(Error::InvalidParameter(format!("upper bound must be positive, got {upper}")));
    }
    let mut counts = vec![0u64; n_bins];
    for &v in values {
        if !(v >= 0.0) {
            return Err(Error::InvalidParameter(format!("histogram value {v} is not a magnitude")));
        }
        let k = ((v / upper) * n_bins as f64) as usize;
        counts[k.min(n_bins - 1)] += 1;
    }
    let bin_edges = (0..=n_bins).map(|i| upper * i as f64 / n_bins as f64).collect();
    Ok(Histogram { objective: None, bin_edges, counts, total: values.len() as u64 })
}

pub fn last_bin_fraction(h: &Histogram) -> f64 {
    h.counts.last().copied().unwrap_or(0) as f64 / h.total as f64
}

pub fn sorted_curve(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

/// Last-bin fraction of every objective over `n` samples, with `n_bins` bins
/// on `[0, max]` (`max = 3` for `S_I`).
pub fn last_bin_fractions(n: usize, seed: u64, n_bins: usize) -> Result<Vec<(Objective, f64)>> {
    let cols = sample_columns(n, seed, &Objective::ALL)?;
    Objective::ALL
        .iter()
        .zip(&cols)
        .map(|(&o, col)| Ok((o, last_bin_fraction(&histogram(col, n_bins, o.scale())?))))
        .collect()
}

/// `(sin, cos)` of `π·num/den`, exact at multiples of `π/2`.
fn sincos_pi(num: usize, den: usize) -> (f64, f64) {
    if (2 * num).is_multiple_of(den) {
        return match ((2 * num) / den) % 4 {
            0 => (0.0, 1.0),
            1 => (1.0, 0.0),
            2 => (0.0, -1.0),
            _ => (-1.0, 0.0),
        };
    }
    (std::f64::consts::PI * num as f64 / den as f64).sin_cos()
}

/// Signed objective values on `θ_i = π·i/(n_θ−1)`, `φ_j = 2π·j/n_φ`, with
/// `a = sinθ cosφ`, `b = sinθ sinφ`, `c = cosθ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphereGrid {
    pub objective: Objective,
    pub n_theta: usize,
    pub n_phi: usize,
    pub theta: Vec<f64>,
    pub phi: Vec<f64>,
    /// Row `i` holds the values at `θ_i`.
    pub values: Vec<Vec<f64>>,
    #[serde(skip)]
    points: Vec<Vec<[f64; 3]>>,
}

impl SphereGrid {
    pub fn point(&self, i: usize, j: usize) -> [f64; 3] {
        self.points[i][j]
    }
}

pub fn sphere_grid(obj: Objective, n_theta: usize, n_phi: usize) -> Result<SphereGrid> {
    if n_theta < 2 || n_phi < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid needs n_theta, n_phi >= 2, got {n_theta}x{n_phi}"
        )));
    }
    let theta: Vec<f64> =
        (0..n_theta).map(|i| std::f64::consts::PI * i as f64 / (n_theta - 1) as f64).collect();
    let phi: Vec<f64> = (0..n_phi).map(|j| 2.0 * std::f64::consts::PI * j as f64 / n_phi as f64).collect();
    let points: Vec<Vec<[f64; 3]>> = (0..n_theta)
        .map(|i| {
            let (st, ct) = sincos_pi(i, n_theta - 1);
            (0..n_phi)
                .map(|j| {
                    let (sp, cp) = sincos_pi(2 * j, n_phi);
                    [st * cp, st * sp, ct]
                })
                .collect()
        })
        .collect();
    // `+ 0.0` folds −0.0 into 0.0 so exported zeros print without a sign.
    let values = points.iter().map(|row| row.iter().map(|&x| obj.value(x) + 0.0).collect()).collect();
    Ok(SphereGrid { objective: obj, n_theta, n_phi, theta, phi, values, points })
}

pub const SAMPLES_CSV_HEADER: &str = "a,b,c,absI6,absI9,absI12,absDelta,S_I";

pub fn samples_to_csv(rows: &[SampleRow]) -> String {
    let mut out = String::from(SAMPLES_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let cells = [r.a, r.b, r.c, r.abs_i6, r.abs_i9, r.abs_i12, r.abs_delta, r.s_i].map(fmt_f64);
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn histogram_to_csv(h: &Histogram) -> String {
    let mut out = String::from("bin_lo,bin_hi,count\n");
    for (k, count) in h.counts.iter().enumerate() {
        let _ = writeln!(out, "{},{},{count}", fmt_f64(h.bin_edges[k]), fmt_f64(h.bin_edges[k + 1]));
    }
    out
}

pub fn curve_to_csv(curve: &[f64]) -> String {
    let mut out = String::from("rank,value\n");
    for (k, v) in curve.iter().enumerate() {
        let _ = writeln!(out, "{k},{}", fmt_f64(*v));
    }
    out
}

pub fn grid_to_csv(g: &SphereGrid) -> String {
    let mut out = String::from("theta,phi,a,b,c,value\n");
    for i in 0..g.n_theta {
        for j in 0..g.n_phi {
            let [a, b, c] = g.point(i, j);
            let cells = [g.theta[i], g.phi[j], a, b, c, g.values[i][j]].map(fmt_f64);
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }
    out
}
