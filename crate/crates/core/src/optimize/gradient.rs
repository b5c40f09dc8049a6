use super::Objective;
use crate::error::{Error, Result};
use crate::states::SemiSimpleCoeffs;

/// Smallest `|x_k|` accepted for the chart that solves for coordinate `k`.
pub const CHART_THRESHOLD: f64 = 1e-8;

/// The two free coordinates of the chart solving for `axis`.
pub fn free_axes(axis: usize) -> [usize; 2] {
    match axis {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

/// Gradient of `f` restricted to the sphere, in the chart where `c` is a
/// function of `(a, b)`: `∂f/∂a + ∂f/∂c · (−a/c)` and `∂f/∂b + ∂f/∂c · (−b/c)`.
pub fn implicit_gradient(obj: Objective, p: SemiSimpleCoeffs) -> Result<[f64; 2]> {
    implicit_gradient_in_chart(obj, p, 2)
}

/// As [`implicit_gradient`], solving for coordinate `axis` instead of `c`.
pub fn implicit_gradient_in_chart(obj: Objective, p: SemiSimpleCoeffs, axis: usize) -> Result<[f64; 2]> {
    let x = p.to_array();
    chart_gradient(x, obj.gradient(x), axis)
}

pub(crate) fn chart_gradient(x: [f64; 3], ambient: [f64; 3], axis: usize) -> Result<[f64; 2]> {
    let xk = x[axis];
    if xk.abs() <= CHART_THRESHOLD {
        return Err(Error::ChartSingular { axis, value: xk.abs(), threshold: CHART_THRESHOLD });
    }
    let [i, j] = free_axes(axis);
    Ok([
        ambient[i] + ambient[axis] * (-x[i] / xk),
        ambient[j] + ambient[axis] * (-x[j] / xk),
    ])
}

/// Coordinate of largest magnitude; its chart is the best conditioned.
pub fn best_chart(x: [f64; 3]) -> usize {
    let mut k = 0;
    for i in 1..3 {
        if x[i].abs() > x[k].abs() {
            k = i;
        }
    }
    k
}

pub const DEFAULT_CRITICAL_TOL: f64 = 1e-6;

/// Whether the sphere-restricted gradient of `f / obj.scale()` has norm below
/// `tol`, evaluated in the best-conditioned chart.
pub fn is_critical(obj: Objective, p: SemiSimpleCoeffs, tol: f64) -> bool {
    let x = p.to_array();
    let g = obj.gradient(x).map(|d| d / obj.scale());
    match chart_gradient(x, g, best_chart(x)) {
        Ok([u, v]) => u.hypot(v) < tol,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::known_maximizers;
    use crate::states::stream_rng;
    use crate::states::sample_semisimple_with;

    /// `f` on the sphere parametrized by the two free coordinates of `axis`.
    fn restricted(obj: Objective, axis: usize, sign: f64, u: f64, v: f64) -> f64 {
        let [i, j] = free_axes(axis);
        let mut x = [0.0; 3];
        x[i] = u;
        x[j] = v;
        x[axis] = sign * (1.0 - u * u - v * v).sqrt();
        obj.value(x)
    }

    fn central_difference(obj: Objective, p: SemiSimpleCoeffs, axis: usize) -> [f64; 2] {
        let x = p.to_array();
        let [i, j] = free_axes(axis);
        let s = x[axis].signum();
        let h = 1e-6;
        [
            (restricted(obj, axis, s, x[i] + h, x[j]) - restricted(obj, axis, s, x[i] - h, x[j])) / (2.0 * h),
            (restricted(obj, axis, s, x[i], x[j] + h) - restricted(obj, axis, s, x[i], x[j] - h)) / (2.0 * h),
        ]
    }

    #[test]
    fn matches_finite_differences() {
        let mut rng = stream_rng(11, 0);
        for obj in [Objective::I6, Objective::I9, Objective::I12, Objective::Delta333] {
            let mut checked = 0;
            while checked < 20 {
                let p = sample_semisimple_with(&mut rng);
                if p.c.abs() < 0.2 {
                    continue;
                }
                let g = implicit_gradient(obj, p).unwrap();
                let fd = central_difference(obj, p, 2);
                let err = (g[0] - fd[0]).hypot(g[1] - fd[1]);
                assert!(err <= 1e-5 * g[0].hypot(g[1]), "{obj}: {g:?} vs {fd:?}");
                checked += 1;
            }
        }
    }

    #[test]
    fn singular_chart_reported() {
        let p = SemiSimpleCoeffs::new(1.0, 0.0, 0.0);
        assert!(matches!(
            implicit_gradient(Objective::I6, p),
            Err(Error::ChartSingular { axis: 2, .. })
        ));
        // In the chart solving for a, (1,0,0) is a critical point of I6.
        let g = implicit_gradient_in_chart(Objective::I6, p, 0).unwrap();
        assert!(g[0].hypot(g[1]) < 1e-12);
        let fd = central_difference(Objective::I6, p, 0);
        assert!(fd[0].hypot(fd[1]) < 1e-5);
    }

    #[test]
    fn maximizers_are_critical() {
        for obj in [Objective::I6, Objective::I9, Objective::I12, Objective::Delta333] {
            for p in known_maximizers(obj).unwrap() {
                assert!(is_critical(obj, p, 1e-8), "{obj} at {p:?}");
                if obj == Objective::Delta333 {
                    let g = implicit_gradient(obj, p).unwrap();
                    assert!(g[0].hypot(g[1]) < 1e-9);
                }
            }
        }
    }

    #[test]
    fn random_point_not_critical() {
        let p = SemiSimpleCoeffs::new(0.3, 0.5, -0.2).normalized();
        assert!(!is_critical(Objective::I6, p, DEFAULT_CRITICAL_TOL));
    }
}
