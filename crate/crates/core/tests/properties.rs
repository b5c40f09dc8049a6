//! Algebraic properties of the invariants on random states.

use num_complex::Complex64;
use proptest::prelude::*;
use qutrit_invariants::closed_form::{self as cf, f2prime_reduced, invariants_f2prime, MaxConstants};
use qutrit_invariants::matrix::{fundamental_invariants, InvariantSet};
use qutrit_invariants::states::{
    apply_slocc, named_state, permute_parties, random_unimodular, semisimple_to_tensor, stream_rng,
    NamedState, PartyPerm, QutritState, SemiSimpleCoeffs, SloccMode,
};
use rand::Rng;

fn values(inv: &InvariantSet) -> [Complex64; 4] {
    [inv.i6, inv.i9, inv.i12, inv.delta333]
}

fn scales() -> [f64; 4] {
    let m = MaxConstants::VALUES;
    [m.i6, m.i9, m.i12, m.delta]
}

fn assert_close(got: Complex64, want: Complex64, rel: f64, scale: f64, what: &str) {
    let err = (got - want).norm();
    assert!(err <= rel * want.norm().max(1e-3 * scale), "{what}: {got} vs {want}");
}

fn arb_state() -> impl Strategy<Value = QutritState> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 27).prop_filter_map("zero", |v| {
        let mut s = QutritState::zero();
        for (z, (re, im)) in s.amplitudes_mut().iter_mut().zip(v) {
            *z = Complex64::new(re, im);
        }
        (s.norm() > 1e-3).then(|| s.normalized())
    })
}

fn arb_coeffs() -> impl Strategy<Value = SemiSimpleCoeffs> {
    (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
        .prop_filter_map("zero", |(a, b, c)| {
            let p = SemiSimpleCoeffs::new(a, b, c);
            (p.norm() > 1e-3).then(|| p.normalized())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homogeneous_of_degrees_6_9_12_36(s in arb_state(), re in 0.3f64..1.7, im in -0.8f64..0.8) {
        let lambda = Complex64::new(re, im);
        let x = values(&fundamental_invariants(&s));
        let y = values(&fundamental_invariants(&s.scale(lambda)));
        for (k, d) in [6u32, 9, 12, 36].into_iter().enumerate() {
            let f = lambda.powu(d);
            assert_close(y[k], x[k] * f, 1e-8, scales()[k] * f.norm(), "homogeneity");
        }
    }

    #[test]
    fn invariant_under_party_permutations(s in arb_state()) {
        let x = values(&fundamental_invariants(&s));
        for perm in PartyPerm::all() {
            let y = values(&fundamental_invariants(&permute_parties(&s, perm)));
            let sign = if perm.is_odd() { -1.0 } else { 1.0 };
            assert_close(y[0], x[0], 1e-9, scales()[0], "I6");
            assert_close(y[1], x[1] * sign, 1e-9, scales()[1], "I9");
            assert_close(y[2], x[2], 1e-9, scales()[2], "I12");
            assert_close(y[3], x[3], 1e-8, scales()[3], "Δ");
        }
    }

    #[test]
    fn closed_forms_match_matrix_path(p in arb_coeffs()) {
        let x = values(&fundamental_invariants(&semisimple_to_tensor(p)));
        let y = values(&cf::invariants_ss(p));
        let want = [y[0], y[1], y[2], Complex64::new(cf::delta_ss(p.a, p.b, p.c), 0.0)];
        for k in 0..4 {
            assert_close(x[k], want[k], 1e-9, scales()[k], "path");
        }
    }
}

#[test]
fn slocc_invariance() {
    let mut rng = stream_rng(99, 0);
    for _ in 0..100 {
        let mut s = QutritState::zero();
        for z in s.amplitudes_mut() {
            *z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let (a, b, c) = (random_unimodular(&mut rng), random_unimodular(&mut rng), random_unimodular(&mut rng));
        let x = values(&fundamental_invariants(&s));
        let y = values(&fundamental_invariants(&apply_slocc(&s, &a, &b, &c, SloccMode::Strict).unwrap()));
        for k in 0..3 {
            assert_close(y[k], x[k], 1e-6, scales()[k] * s.norm_sqr().powi(3 + k as i32), "slocc");
        }
    }
}

#[test]
fn general_linear_factors_scale_by_determinant_powers() {
    let mut rng = stream_rng(7, 0);
    let s = named_state(&NamedState::Psi1).unwrap();
    let m = random_unimodular(&mut rng) * Complex64::new(1.2, 0.3);
    let id = nalgebra::Matrix3::identity();
    let det = m.determinant();
    let x = values(&fundamental_invariants(&s));
    let y = values(&fundamental_invariants(&apply_slocc(&s, &m, &id, &id, SloccMode::General).unwrap()));
    // Degree d picks up det^(d/3).
    assert_close(y[0], x[0] * det.powu(2), 1e-9, scales()[0], "I6");
    assert_close(y[1], x[1] * det.powu(3), 1e-9, scales()[1], "I9");
    assert_close(y[2], x[2] * det.powu(4), 1e-9, scales()[2], "I12");
    assert!(apply_slocc(&s, &m, &id, &id, SloccMode::Strict).is_err());
}

#[test]
fn f2prime_reduced_forms_on_grid() {
    for n in 0..=200 {
        let a1 = -1.0 + n as f64 / 100.0;
        let a2 = (1.0 - a1 * a1).max(0.0).sqrt();
        let full = invariants_f2prime(a1, a2).unwrap();
        let reduced = f2prime_reduced(a1);
        for (k, (got, want)) in [full.i6.re, full.i9.re, full.i12.re].into_iter().zip(reduced).enumerate() {
            assert!((got - want).abs() <= 1e-12 * want.abs().max(scales()[k]), "a1 = {a1}");
        }
    }
}

#[test]
fn f2prime_closed_forms_against_states() {
    // I6 and I12 agree with the matrix path on F2' states. I9 agrees up to the
    // constant −3²·5⁷/7⁵: the closed form keeps its published prefactor, whose
    // magnitude and sign differ from the matrix-path normalization.
    let ratio = -9.0 * 5f64.powi(7) / 7f64.powi(5);
    for n in 0..=20 {
        let t = std::f64::consts::PI * n as f64 / 10.0;
        let (a1, a2) = (t.cos(), t.sin());
        let state = named_state(&NamedState::F2Prime { a1, a2 }).unwrap();
        let matrix = fundamental_invariants(&state);
        let closed = invariants_f2prime(a1, a2).unwrap();
        assert_close(matrix.i6, closed.i6, 1e-9, scales()[0], "I6");
        assert_close(matrix.i12, closed.i12, 1e-9, scales()[2], "I12");
        assert_close(matrix.i9, closed.i9 * ratio, 1e-9, scales()[1], "I9");
        assert!(matrix.delta333.norm() <= 1e-12 * scales()[3]);
    }
}

#[test]
fn f3prime_states_match_closed_form() {
    for sign in [1i8, -1] {
        let inv = fundamental_invariants(&named_state(&NamedState::F3Prime { sign }).unwrap());
        let want = cf::i6_f3prime(sign).unwrap();
        assert!((inv.i6.re - want).abs() <= 1e-12 * want.abs());
        assert!(inv.i9.norm() < 1e-15 && inv.i12.norm() < 1e-15);
    }
}
