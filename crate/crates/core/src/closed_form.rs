//! Closed-form invariants of semi-simple states `a v1 + b v2 + c v3` with real
//! coefficients, the invariants of the real families F2' and F3', and the
//! combined score `S_I`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::InvariantSet;
use crate::states::SemiSimpleCoeffs;

/// Normalization factors of the F2' invariants.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZetaConstants {
    pub zeta6: f64,
    pub zeta9: f64,
    pub zeta12: f64,
}

impl ZetaConstants {
    /// `ζ6 = 2⁵/(3³·7³)`, `ζ9 = 2⁵√42/(3⁷·5⁷)`, `ζ12 = 2⁷/21⁶`.
    pub const VALUES: ZetaConstants = ZetaConstants {
        zeta6: 32.0 / (27.0 * 343.0),
        zeta9: 32.0 * 6.480_740_698_407_86 / (2187.0 * 78125.0),
        zeta12: 128.0 / 85_766_121.0,
    };
}

/// Global maxima of `|I6|`, `|I9|`, `|I12|` and `|Δ333|` over real semi-simple states.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MaxConstants {
    pub i6: f64,
    pub i9: f64,
    pub i12: f64,
    pub delta: f64,
}

impl MaxConstants {
    /// `1/18`, `√6/3888`, `1/7776`, `√3/(2¹⁹·3¹⁴)`.
    pub const VALUES: MaxConstants = MaxConstants {
        i6: 1.0 / 18.0,
        i9: 2.449_489_742_783_178 / 3888.0,
        i12: 1.0 / 7776.0,
        delta: 1.732_050_807_568_877_2 / (524_288.0 * 4_782_969.0),
    };
}

pub fn i6_ss(a: f64, b: f64, c: f64) -> f64 {
    let (a3, b3, c3) = (a.powi(3), b.powi(3), c.powi(3));
    (a3 * a3 - 10.0 * a3 * b3 - 10.0 * a3 * c3 + b3 * b3 - 10.0 * b3 * c3 + c3 * c3) / 27.0
}

const I9_PREFACTOR: f64 = -1.732_050_807_568_877_2 / 243.0;

pub fn i9_ss(a: f64, b: f64, c: f64) -> f64 {
    I9_PREFACTOR
        * (a - b)
        * (a - c)
        * (b - c)
        * (a * a + a * b + b * b)
        * (a * a + a * c + c * c)
        * (b * b + b * c + c * c)
}

pub fn i12_ss(a: f64, b: f64, c: f64) -> f64 {
    let (a3, b3, c3) = (a.powi(3), b.powi(3), c.powi(3));
    let (a6, b6, c6) = (a3 * a3, b3 * b3, c3 * c3);
    let (a9, b9, c9) = (a6 * a3, b6 * b3, c6 * c3);
    (a9 * b3 + a3 * b9 + a9 * c3 + b9 * c3 + a3 * c9 + b3 * c9
        - 4.0 * (a6 * b6 + a6 * c6 + b6 * c6)
        + 2.0 * (a6 * b3 * c3 + a3 * b6 * c3 + a3 * b3 * c6))
        / 729.0
}

/// `3¹⁸`
const THREE_POW_18: f64 = 387_420_489.0;

/// The eight linear and quadratic factors whose product, cubed and scaled by
/// `−4/3¹⁸`, is the restricted hyperdeterminant. Each entry is `(value, gradient)`.
fn delta_factors(a: f64, b: f64, c: f64) -> [(f64, [f64; 3]); 8] {
    [
        (a, [1.0, 0.0, 0.0]),
        (b, [0.0, 1.0, 0.0]),
        (c, [0.0, 0.0, 1.0]),
        (a + b + c, [1.0, 1.0, 1.0]),
        (
            a * a + 2.0 * a * b - a * c + b * b - b * c + c * c,
            [2.0 * a + 2.0 * b - c, 2.0 * a + 2.0 * b - c, -a - b + 2.0 * c],
        ),
        (
            a * a - a * b + 2.0 * a * c + b * b - b * c + c * c,
            [2.0 * a - b + 2.0 * c, -a + 2.0 * b - c, 2.0 * a - b + 2.0 * c],
        ),
        (
            a * a - a * b - a * c + b * b + 2.0 * b * c + c * c,
            [2.0 * a - b - c, -a + 2.0 * b + 2.0 * c, -a + 2.0 * b + 2.0 * c],
        ),
        (
            a * a - a * b - a * c + b * b - b * c + c * c,
            [2.0 * a - b - c, -a + 2.0 * b - c, -a - b + 2.0 * c],
        ),
    ]
}

/// Restricted hyperdeterminant, evaluated as its factored product.
pub fn delta_ss(a: f64, b: f64, c: f64) -> f64 {
    let p: f64 = delta_factors(a, b, c).iter().map(|f| f.0).product();
    -4.0 / THREE_POW_18 * p * p * p
}

/// Value and gradient of a product of factors, without dividing by any factor.
fn product_with_gradient(factors: &[(f64, [f64; 3])]) -> (f64, [f64; 3]) {
    let n = factors.len();
    let mut prefix = vec![1.0; n + 1];
    for k in 0..n {
        prefix[k + 1] = prefix[k] * factors[k].0;
    }
    let mut suffix = 1.0;
    let mut grad = [0.0; 3];
    for k in (0..n).rev() {
        let others = prefix[k] * suffix;
        for (g, d) in grad.iter_mut().zip(factors[k].1) {
            *g += d * others;
        }
        suffix *= factors[k].0;
    }
    (prefix[n], grad)
}

pub fn i6_gradient(a: f64, b: f64, c: f64) -> [f64; 3] {
    // i6 is symmetric, so each partial is the same expression with roles swapped.
    let d = |x: f64, y: f64, z: f64| {
        (6.0 * x.powi(5) - 30.0 * x * x * y.powi(3) - 30.0 * x * x * z.powi(3)) / 27.0
    };
    [d(a, b, c), d(b, a, c), d(c, a, b)]
}

pub fn i9_gradient(a: f64, b: f64, c: f64) -> [f64; 3] {
    let factors = [
        (a - b, [1.0, -1.0, 0.0]),
        (a - c, [1.0, 0.0, -1.0]),
        (b - c, [0.0, 1.0, -1.0]),
        (a * a + a * b + b * b, [2.0 * a + b, a + 2.0 * b, 0.0]),
        (a * a + a * c + c * c, [2.0 * a + c, 0.0, a + 2.0 * c]),
        (b * b + b * c + c * c, [0.0, 2.0 * b + c, b + 2.0 * c]),
    ];
    let (_, g) = product_with_gradient(&factors);
    g.map(|x| I9_PREFACTOR * x)
}

pub fn i12_gradient(a: f64, b: f64, c: f64) -> [f64; 3] {
    let d = |x: f64, y: f64, z: f64| {
        let (x2, x5, x8) = (x * x, x.powi(5), x.powi(8));
        let (y3, y6, y9) = (y.powi(3), y.powi(6), y.powi(9));
        let (z3, z6, z9) = (z.powi(3), z.powi(6), z.powi(9));
        (9.0 * x8 * y3 + 3.0 * x2 * y9 + 9.0 * x8 * z3 + 3.0 * x2 * z9
            - 24.0 * (x5 * y6 + x5 * z6)
            + 2.0 * (6.0 * x5 * y3 * z3 + 3.0 * x2 * y6 * z3 + 3.0 * x2 * y3 * z6))
            / 729.0
    };
    [d(a, b, c), d(b, a, c), d(c, a, b)]
}

pub fn delta_gradient(a: f64, b: f64, c: f64) -> [f64; 3] {
    let (p, gp) = product_with_gradient(&delta_factors(a, b, c));
    let k = -12.0 / THREE_POW_18 * p * p;
    gp.map(|x| k * x)
}

/// Closed-form invariant set of a real semi-simple state. `Δ333` comes from the
/// combination formula; the raw traces are back-derived.
pub fn invariants_ss(p: SemiSimpleCoeffs) -> InvariantSet {
    InvariantSet::from_invariants(i6_ss(p.a, p.b, p.c), i9_ss(p.a, p.b, p.c), i12_ss(p.a, p.b, p.c))
}

pub const F2PRIME_TOL: f64 = 1e-10;

/// Invariants on the F2' family `a1 w1 + a2 w2`; `Δ333` is identically zero there.
pub fn invariants_f2prime(a1: f64, a2: f64) -> Result<InvariantSet> {
    if !a1.is_finite() || !a2.is_finite() || (a1 * a1 + a2 * a2 - 1.0).abs() > F2PRIME_TOL {
        return Err(Error::InvalidParameter(format!(
            "F2' needs a1² + a2² = 1 within {F2PRIME_TOL:e}, got ({a1}, {a2})"
        )));
    }
    let z = ZetaConstants::VALUES;
    let p = |x: f64, n: i32| x.powi(n);
    let i6 = z.zeta6 * (3.0 * p(a1, 6) + 15.0 * p(a1, 2) * p(a2, 4) + 2.0 * p(a2, 6));
    let i9 = z.zeta9
        * (-p(a1, 9) + 6.0 * p(a1, 5) * p(a2, 4) + 8.0 * p(a1, 3) * p(a2, 6) + 3.0 * a1 * p(a2, 8));
    let i12 = z.zeta12
        * (-3.0 * p(a1, 12) - 3.0 * p(a1, 8) * p(a2, 4) - 40.0 * p(a1, 6) * p(a2, 6)
            - 57.0 * p(a1, 4) * p(a2, 8)
            - 24.0 * p(a1, 2) * p(a2, 10)
            - p(a2, 12));
    let mut inv = InvariantSet::from_invariants(i6, i9, i12);
    inv.delta333 = Complex64::new(0.0, 0.0);
    Ok(inv)
}

/// F2' invariants after eliminating `a2² = 1 − a1²`: `[I6, I9, I12]`.
pub fn f2prime_reduced(a1: f64) -> [f64; 3] {
    let z = ZetaConstants::VALUES;
    let (x2, x4, x6) = (a1 * a1, a1.powi(4), a1.powi(6));
    [
        z.zeta6 * (16.0 * x6 - 24.0 * x4 + 9.0 * x2 + 2.0),
        z.zeta9 * (-4.0 * a1.powi(3) + 3.0 * a1),
        z.zeta12 * (-32.0 * x6 + 48.0 * x4 - 18.0 * x2 - 1.0),
    ]
}

/// `I6` on the F3' states `±w`; `I9`, `I12` and `Δ333` vanish there.
pub fn i6_f3prime(sign: i8) -> Result<f64> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidParameter(format!("F3' sign must be ±1, got {sign}")));
    }
    // -2¹⁸/(5⁶·41³)·a⁶ with a = ±1
    Ok(-262_144.0 / (15_625.0 * 68_921.0) * f64::from(sign).powi(6))
}

/// `S_I = |I6|/m6 + |I9|/m9 + |I12|/m12`.
pub fn s_index(inv: &InvariantSet) -> f64 {
    let m = MaxConstants::VALUES;
    inv.i6.norm() / m.i6 + inv.i9.norm() / m.i9 + inv.i12.norm() / m.i12
}

/// `S_I` directly from the closed forms.
pub fn s_index_ss(a: f64, b: f64, c: f64) -> f64 {
    let m = MaxConstants::VALUES;
    i6_ss(a, b, c).abs() / m.i6 + i9_ss(a, b, c).abs() / m.i9 + i12_ss(a, b, c).abs() / m.i12
}
