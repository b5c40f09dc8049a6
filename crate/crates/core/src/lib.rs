//! SLOCC invariants of three-qutrit states.
//!
//! The crate evaluates the fundamental invariants `I6`, `I9`, `I12` and the
//! 3x3x3 hyperdeterminant on arbitrary 27-amplitude states (through power
//! traces of an adjoint matrix and the determinant of a Strassen matrix) and,
//! in closed form, on semi-simple states `a v1 + b v2 + c v3`. On top of the
//! evaluators sit a sphere-constrained maximizer, a full-amplitude
//! perturbation search, and Monte Carlo sampling utilities.

pub mod closed_form;
pub mod error;
pub mod io;
pub mod matrix;
pub mod optimize;
pub mod states;
pub mod stats;
pub mod verify;

pub use closed_form::{MaxConstants, ZetaConstants};
pub use error::{Error, Result};
pub use matrix::{fundamental_invariants, hyperdet, InvariantSet};
pub use optimize::{Objective, OptConfig, OptResult};
pub use states::{NamedState, QutritState, SemiSimpleCoeffs};

pub use num_complex::Complex64;
