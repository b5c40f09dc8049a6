//! Invariants of arbitrary states from matrix power traces and a determinant.

pub mod adjoint;
mod signature;
pub mod strassen;

pub use adjoint::{
    build_adjoint, build_adjoint_with, power_trace, AdjointLayout, AdjointMatrix, Block, BlockEntry,
};
pub use strassen::{strassen_det, strassen_matrix, StrassenMatrix};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::states::QutritState;

/// Sign applied on top of `I9 = −g9` so that the matrix path agrees, signed,
/// with the closed-form `I9` on semi-simple states. Checked at one reference
/// point by `i9_sign_fixture_matches_closed_form`.
pub const I9_SIGN_FIXTURE: f64 = -1.0;

/// `(I6, I9, I12, Δ333)` plus the raw traces they come from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantSet {
    #[serde(rename = "I6", with = "crate::io::complex_pair")]
    pub i6: Complex64,
    #[serde(rename = "I9", with = "crate::io::complex_pair")]
    pub i9: Complex64,
    #[serde(rename = "I12", with = "crate::io::complex_pair")]
    pub i12: Complex64,
    #[serde(rename = "Delta333", with = "crate::io::complex_pair")]
    pub delta333: Complex64,
    #[serde(with = "crate::io::complex_pair")]
    pub g6: Complex64,
    #[serde(with = "crate::io::complex_pair")]
    pub g9: Complex64,
    #[serde(with = "crate::io::complex_pair")]
    pub g12: Complex64,
}

/// `Δ = I6³I9² − I6²I12² + 36·I6·I9²·I12 + 108·I9⁴ − 32·I12³`.
pub fn hyperdet_combination<T>(i6: T, i9: T, i12: T) -> T
where
    T: Copy + std::ops::Mul<Output = T> + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + From<f64>,
{
    let i9sq = i9 * i9;
    let i6sq = i6 * i6;
    i6sq * i6 * i9sq - i6sq * i12 * i12 + T::from(36.0) * i6 * i9sq * i12 + T::from(108.0) * i9sq * i9sq
        - T::from(32.0) * i12 * i12 * i12
}

impl InvariantSet {
    /// Converts raw traces with `I6 = g6/(−108)`, `I9 = −g9` (times the sign
    /// fixture), `I12 = (g12/108 − 41·I6²)/930`.
    pub fn from_traces(g6: Complex64, g9: Complex64, g12: Complex64) -> Self {
        let i6 = g6 / -108.0;
        let i9 = -g9 * I9_SIGN_FIXTURE;
        let i12 = (g12 / 108.0 - i6 * i6 * 41.0) / 930.0;
        let delta333 = hyperdet_combination(i6, i9, i12);
        Self { i6, i9, i12, delta333, g6, g9, g12 }
    }

    /// Inverse of [`InvariantSet::from_traces`]: derives the traces that would
    /// produce the given invariants.
    pub fn from_invariants(i6: f64, i9: f64, i12: f64) -> Self {
        let c = |x: f64| Complex64::new(x, 0.0);
        let g6 = c(-108.0 * i6);
        let g9 = c(-i9 / I9_SIGN_FIXTURE);
        let g12 = c(108.0 * (930.0 * i12 + 41.0 * i6 * i6));
        Self {
            i6: c(i6),
            i9: c(i9),
            i12: c(i12),
            delta333: c(hyperdet_combination(i6, i9, i12)),
            g6,
            g9,
            g12,
        }
    }

    pub fn zero() -> Self {
        Self::from_invariants(0.0, 0.0, 0.0)
    }

    /// `[|I6|, |I9|, |I12|, |Δ333|]`.
    pub fn magnitudes(&self) -> [f64; 4] {
        [self.i6.norm(), self.i9.norm(), self.i12.norm(), self.delta333.norm()]
    }
}

pub fn fundamental_invariants(state: &QutritState) -> InvariantSet {
    fundamental_invariants_with(AdjointLayout::embedded(), state)
}

pub fn fundamental_invariants_with(layout: &AdjointLayout, state: &QutritState) -> InvariantSet {
    let (g6, g12) = adjoint::block_traces(layout, state);
    let g9 = strassen_det(state);
    InvariantSet::from_traces(g6, g9, g12)
}

pub fn hyperdet(state: &QutritState) -> Complex64 {
    fundamental_invariants(state).delta333
}

/// Evaluates many states in parallel; output order follows input order.
pub fn fundamental_invariants_batch(states: &[QutritState]) -> Vec<InvariantSet> {
    states.par_iter().map(fundamental_invariants).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{self, MaxConstants};
    use crate::states::{named_state, semisimple_to_tensor, NamedState, SemiSimpleCoeffs};

    fn rel(x: f64, y: f64) -> f64 {
        (x - y).abs() / y.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn i9_sign_fixture_matches_closed_form() {
        let p = SemiSimpleCoeffs::new(0.8, -0.1, 0.3).normalized();
        let raw_i9 = -strassen_det(&semisimple_to_tensor(p)).re;
        let closed = closed_form::i9_ss(p.a, p.b, p.c);
        assert!(rel(raw_i9 * I9_SIGN_FIXTURE, closed) < 1e-10);
        assert!(rel(-raw_i9 * I9_SIGN_FIXTURE, closed) > 1.0);
    }

    #[test]
    fn aharonov_values() {
        let inv = fundamental_invariants(&named_state(&NamedState::Aharonov).unwrap());
        let m = MaxConstants::VALUES;
        let [a6, a9, a12, ad] = inv.magnitudes();
        assert!(rel(a6, m.i6) < 1e-9);
        assert!(rel(a9, m.i9) < 1e-9);
        assert!(rel(a12, m.i12) < 1e-9);
        assert!(ad < 1e-20);
    }

    #[test]
    fn nilpotent_states_vanish() {
        for tag in [NamedState::W, NamedState::W333] {
            let inv = fundamental_invariants(&named_state(&tag).unwrap());
            for v in inv.magnitudes() {
                assert!(v < 1e-12, "{tag}: {v}");
            }
            assert!(hyperdet(&named_state(&tag).unwrap()).norm() < 1e-15);
        }
    }

    #[test]
    fn d3_3_values() {
        let [a6, a9, a12, ad] = fundamental_invariants(&named_state(&NamedState::D3_3).unwrap()).magnitudes();
        assert!(rel(a6, 1.0 / 125.0) < 1e-9);
        assert!(a9 < 1e-15);
        assert!(rel(a12, 1.0 / 500000.0) < 1e-9);
        assert!(ad < 1e-20);
    }

    #[test]
    fn hyperdet_of_max_and_psi1() {
        let m = MaxConstants::VALUES.delta;
        assert!((m - 6.907059e-13).abs() / m < 1e-6);
        let d = hyperdet(&named_state(&NamedState::MaxDelta(1)).unwrap());
        assert!(rel(d.norm(), m) < 1e-6);
        let d1 = hyperdet(&named_state(&NamedState::Psi1).unwrap()).norm();
        assert!(rel(d1, 6.243e-16) < 5e-3, "{d1}");
    }

    #[test]
    fn combination_holds_by_construction() {
        let inv = fundamental_invariants(&named_state(&NamedState::Psi2).unwrap());
        let d = hyperdet_combination(inv.i6, inv.i9, inv.i12);
        assert!((d - inv.delta333).norm() <= 1e-10 * d.norm());
    }

    #[test]
    fn trace_round_trip() {
        let inv = InvariantSet::from_invariants(0.01, -0.002, 3e-4);
        let back = InvariantSet::from_traces(inv.g6, inv.g9, inv.g12);
        assert!((back.i6 - inv.i6).norm() < 1e-16);
        assert!((back.i9 - inv.i9).norm() < 1e-16);
        assert!((back.i12 - inv.i12).norm() < 1e-16);
    }

    #[test]
    fn batch_matches_single() {
        let states: Vec<_> = NamedState::FIXED.iter().map(|t| named_state(t).unwrap()).collect();
        let batch = fundamental_invariants_batch(&states);
        for (s, inv) in states.iter().zip(batch) {
            assert_eq!(fundamental_invariants(s), inv);
        }
    }
}
