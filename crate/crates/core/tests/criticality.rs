//! Critical points in the full amplitude space, by central differences over
//! all 54 real parameters of a state.

use num_complex::Complex64;
use qutrit_invariants::closed_form::MaxConstants;
use qutrit_invariants::matrix::fundamental_invariants;
use qutrit_invariants::states::{named_state, NamedState, QutritState};

const H: f64 = 1e-6;

fn nudge(s: &QutritState, coord: usize, h: f64) -> QutritState {
    let mut t = *s;
    let z = &mut t.amplitudes_mut()[coord / 2];
    if coord % 2 == 0 {
        z.re += h;
    } else {
        z.im += h;
    }
    t
}

/// Norm of the gradient of `g` over the 54 real coordinates.
fn gradient_norm<F: Fn(&QutritState) -> Complex64>(s: &QutritState, h: f64, g: F) -> f64 {
    (0..54)
        .map(|c| ((g(&nudge(s, c, h)) - g(&nudge(s, c, -h))) / (2.0 * h)).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Gradient of `|I_d|` on normalized states (smooth where `I_d ≠ 0`), scaled by
/// the invariant's maximum. `k` indexes `[I6, I9, I12]`.
fn abs_invariant_gradient(tag: NamedState, k: usize) -> f64 {
    let m = MaxConstants::VALUES;
    let scale = [m.i6, m.i9, m.i12][k];
    let s = named_state(&tag).unwrap().normalized();
    gradient_norm(&s, H, |x| {
        let inv = fundamental_invariants(&x.normalized());
        Complex64::new([inv.i6, inv.i9, inv.i12][k].norm(), 0.0)
    }) / scale
}

/// Gradient of the complex hyperdeterminant itself, scaled by its maximum.
/// The larger step keeps cancellation noise in `Δ333` (about 1e-26 absolute)
/// well below the threshold.
fn delta_gradient(tag: NamedState) -> f64 {
    let s = named_state(&tag).unwrap().normalized();
    gradient_norm(&s, 1e-4, |x| fundamental_invariants(x).delta333) / MaxConstants::VALUES.delta
}

#[test]
fn aharonov_is_critical_for_all_fundamental_invariants() {
    for k in 0..3 {
        assert!(abs_invariant_gradient(NamedState::Aharonov, k) < 1e-6, "k = {k}");
    }
}

#[test]
fn ghz_and_d3_111_are_critical_for_i6() {
    assert!(abs_invariant_gradient(NamedState::Ghz333, 0) < 1e-6);
    assert!(abs_invariant_gradient(NamedState::D3_111, 0) < 1e-6);
}

#[test]
fn generic_named_states_are_not_critical_for_i6() {
    for tag in [NamedState::D3_3, NamedState::Psi1, NamedState::Psi2] {
        assert!(abs_invariant_gradient(tag, 0) > 1e-2, "{tag}");
    }
}

#[test]
fn hyperdet_differential_vanishes_at_d3_111() {
    let g = delta_gradient(NamedState::D3_111);
    assert!(g < 1e-6, "{g:e}");
    // For contrast: the hyperdeterminant is far from stationary at psi1.
    assert!(delta_gradient(NamedState::Psi1) > 1e-3);
}
