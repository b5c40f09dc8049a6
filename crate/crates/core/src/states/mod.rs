//! Three-qutrit state vectors and the operations acting on them.

mod family;
mod named;
mod sampling;

pub use family::{classify_semisimple_family, Family};
pub use named::{f2prime_basis, max_delta_coeffs, named_state, NamedState, F2PRIME_NORM_TOL};
pub use sampling::{random_unimodular, sample_semisimple, sample_semisimple_with, stream_rng};

use nalgebra::Matrix3;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Number of amplitudes in a 3x3x3 tensor.
pub const DIM: usize = 27;

/// Flat amplitude index of the ket `|ijk>`.
#[inline]
pub const fn flat_index(i: usize, j: usize, k: usize) -> usize {
    9 * i + 3 * j + k
}

/// Inverse of [`flat_index`].
#[inline]
pub const fn split_index(n: usize) -> (usize, usize, usize) {
    (n / 9, (n / 3) % 3, n % 3)
}

/// A (not necessarily normalized) vector in C^3 ⊗ C^3 ⊗ C^3.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QutritState {
    amps: [Complex64; DIM],
}

impl Default for QutritState {
    fn default() -> Self {
        Self::zero()
    }
}

impl QutritState {
    pub fn zero() -> Self {
        Self {
            amps: [Complex64::new(0.0, 0.0); DIM],
        }
    }

    pub fn from_amplitudes(amps: [Complex64; DIM]) -> Self {
        Self { amps }
    }

    pub fn from_real(amps: [f64; DIM]) -> Self {
        Self {
            amps: amps.map(|x| Complex64::new(x, 0.0)),
        }
    }

    /// Builds a state from `(ket label, amplitude)` pairs such as `("012", 1.0)`.
    /// Repeated labels accumulate.
    pub fn from_kets<'a, I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, Complex64)>,
    {
        let mut s = Self::zero();
        for (label, amp) in terms {
            let n = parse_ket(label)?;
            s.amps[n] += amp;
        }
        Ok(s)
    }

    pub fn amplitudes(&self) -> &[Complex64; DIM] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64; DIM] {
        &mut self.amps
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.amps[flat_index(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Complex64) {
        self.amps[flat_index(i, j, k)] = value;
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    /// Returns the state divided by its norm; the zero state is returned unchanged.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            *self
        } else {
            self.scale(Complex64::new(1.0 / n, 0.0))
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            amps: self.amps.map(|z| z * factor),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, z) in out.amps.iter_mut().zip(other.amps.iter()) {
            *o += z;
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn parse_ket(label: &str) -> Result<usize> {
    let digits: Vec<usize> = label
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            '2' => Ok(2),
            _ => Err(Error::Parse(format!("bad ket label {label:?}"))),
        })
        .collect::<Result<_>>()?;
    match digits.as_slice() {
        [i, j, k] => Ok(flat_index(*i, *j, *k)),
        _ => Err(Error::Parse(format!("bad ket label {label:?}"))),
    }
}

/// Real coefficients `(a, b, c)` of a semi-simple state `a v1 + b v2 + c v3`.
#[derive(Clone, Copy, Debug, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct SemiSimpleCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl SemiSimpleCoeffs {
    pub const fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    pub fn from_array(x: [f64; 3]) -> Self {
        Self::new(x[0], x[1], x[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn norm_sqr(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            self
        } else {
            Self::new(self.a / n, self.b / n, self.c / n)
        }
    }

    /// Constraint `a² + b² + c² − 1` of the unit sphere.
    pub fn sphere_residual(self) -> f64 {
        self.norm_sqr() - 1.0
    }
}

impl From<[f64; 3]> for SemiSimpleCoeffs {
    fn from(x: [f64; 3]) -> Self {
        Self::from_array(x)
    }
}

/// Kets supporting v1, v2 and v3 respectively.
pub const SEMISIMPLE_SUPPORT: [[&str; 3]; 3] = [
    ["000", "111", "222"],
    ["012", "120", "201"],
    ["021", "102", "210"],
];

/// `a v1 + b v2 + c v3` with each `v` a uniform superposition of three kets.
pub fn semisimple_to_tensor(coeffs: SemiSimpleCoeffs) -> QutritState {
    let w = 1.0 / 3f64.sqrt();
    let mut s = QutritState::zero();
    for (coef, kets) in coeffs.to_array().into_iter().zip(SEMISIMPLE_SUPPORT) {
        for ket in kets {
            let n = parse_ket(ket).expect("static ket label");
            s.amps[n] += Complex64::new(coef * w, 0.0);
        }
    }
    s
}

/// Whether [`apply_slocc`] insists on unimodular factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SloccMode {
    Strict,
    /// Any GL3 factors; the invariants then pick up powers of the determinants.
    General,
}

/// Tolerance on `|det - 1|` in strict mode.
pub const UNIMODULAR_TOL: f64 = 1e-9;

/// Local action `a'_{ijk} = Σ A_{ii'} B_{jj'} C_{kk'} a_{i'j'k'}`.
pub fn apply_slocc(
    state: &QutritState,
    a: &Matrix3<Complex64>,
    b: &Matrix3<Complex64>,
    c: &Matrix3<Complex64>,
    mode: SloccMode,
) -> Result<QutritState> {
    if mode == SloccMode::Strict {
        for (name, m) in [('A', a), ('B', b), ('C', c)] {
            let det = m.determinant();
            if (det - Complex64::new(1.0, 0.0)).norm() > UNIMODULAR_TOL {
                return Err(Error::NotUnimodular {
                    factor: name,
                    det: format!("{det}"),
                    tol: UNIMODULAR_TOL,
                });
            }
        }
    }
    // Contract one slot at a time.
    let mut cur = state.amps;
    for (slot, m) in [a, b, c].into_iter().enumerate() {
        let mut next = [Complex64::new(0.0, 0.0); DIM];
        for (n, out) in next.iter_mut().enumerate() {
            let idx = split_index(n);
            let mut idx = [idx.0, idx.1, idx.2];
            let row = idx[slot];
            let mut acc = Complex64::new(0.0, 0.0);
            for col in 0..3 {
                idx[slot] = col;
                acc += m[(row, col)] * cur[flat_index(idx[0], idx[1], idx[2])];
            }
            *out = acc;
        }
        cur = next;
    }
    Ok(QutritState { amps: cur })
}

/// A permutation of the three tensor slots: input slot `s` moves to output
/// slot `perm[s]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartyPerm([usize; 3]);

impl PartyPerm {
    pub const IDENTITY: PartyPerm = PartyPerm([0, 1, 2]);

    pub fn new(perm: [usize; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p] {
                return Err(Error::InvalidParameter(format!(
                    "{perm:?} is not a permutation of 0..3"
                )));
            }
            seen[p] = true;
        }
        Ok(Self(perm))
    }

    pub fn all() -> [PartyPerm; 6] {
        [
            PartyPerm([0, 1, 2]),
            PartyPerm([0, 2, 1]),
            PartyPerm([1, 0, 2]),
            PartyPerm([1, 2, 0]),
            PartyPerm([2, 0, 1]),
            PartyPerm([2, 1, 0]),
        ]
    }

    pub fn as_array(self) -> [usize; 3] {
        self.0
    }

    pub fn is_odd(self) -> bool {
        let p = self.0;
        let inversions = (p[0] > p[1]) as u8 + (p[0] > p[2]) as u8 + (p[1] > p[2]) as u8;
        inversions % 2 == 1
    }
}

pub fn permute_parties(state: &QutritState, perm: PartyPerm) -> QutritState {
    let mut out = QutritState::zero();
    for (n, &z) in state.amps.iter().enumerate() {
        let (i, j, k) = split_index(n);
        let src = [i, j, k];
        let mut dst = [0; 3];
        for s in 0..3 {
            dst[perm.0[s]] = src[s];
        }
        out.amps[flat_index(dst[0], dst[1], dst[2])] = z;
    }
    out
}
