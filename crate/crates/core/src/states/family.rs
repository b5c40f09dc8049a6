use serde::Serialize;

use super::SemiSimpleCoeffs;

/// Parameter families of semi-simple orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
    Degenerate,
}

pub const FAMILY_ZERO_TOL: f64 = 1e-10;

/// Classifies `(a, b, c)` using the literal representative ordering: F2 needs
/// `c = 0`, F3 needs `b = c = 0`, F4 needs `a = 0` and `c = −b`. Permuted
/// representatives of F2–F4 therefore land in `Degenerate`.
pub fn classify_semisimple_family(coeffs: SemiSimpleCoeffs) -> Family {
    let SemiSimpleCoeffs { a, b, c } = coeffs;
    let zero = |x: f64| x.abs() <= FAMILY_ZERO_TOL;
    let cube_sum = a.powi(3) + b.powi(3) + c.powi(3);
    if !zero(a * b * c) && !zero(cube_sum.powi(3) - (3.0 * a * b * c).powi(3)) {
        Family::F1
    } else if zero(c) && !zero(b * (a.powi(3) + b.powi(3))) {
        Family::F2
    } else if !zero(a) && zero(b) && zero(c) {
        Family::F3
    } else if zero(a) && !zero(b) && zero(c + b) {
        Family::F4
    } else {
        Family::Degenerate
    }
}
