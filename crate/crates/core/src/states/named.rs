use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::{semisimple_to_tensor, QutritState, SemiSimpleCoeffs, DIM};
use crate::error::{Error, Result};

/// States with a fixed name, plus the two real families F2', F3' and the
/// twelve hyperdeterminant maximizers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NamedState {
    Ghz333,
    W,
    W333,
    Aharonov,
    D3_111,
    Psi3,
    D3_2,
    D3_3,
    Psi1,
    Psi2,
    M333I,
    F2Prime { a1: f64, a2: f64 },
    F3Prime { sign: i8 },
    /// Index in `1..=12`.
    MaxDelta(u8),
}

/// Magnitude/phase pairs for `|000>` … `|222>`, three-decimal data.
const PSI1_POLAR: [(f64, f64); DIM] = [
    (0.193, 1.7), (0.323, -2.01), (0.16, -2.16),
    (0.229, -2.22), (0.232, -3.12), (0.186, -2.5),
    (0.239, -2.34), (0.141, -0.411), (0.159, -0.512),
    (0.099, 1.54), (0.144, -2.43), (0.148, 2.13),
    (0.263, -1.62), (0.322, 0.475), (0.216, -1.95),
    (0.068, -1.39), (0.030, -2.89), (0.171, 1.91),
    (0.253, -2.82), (0.022, -0.225), (0.06, -1.2),
    (0.003, 2.64), (0.133, -1.52), (0.202, 2.2),
    (0.194, 1.08), (0.207, 1.13), (0.274, -2.29),
];

const PSI2_POLAR: [(f64, f64); DIM] = [
    (0.245, 0.074), (0.024, 2.49), (0.248, 1.66),
    (0.069, 1.55), (0.256, 0.114), (0.118, -2.88),
    (0.313, -1.24), (0.076, 2.77), (0.149, 0.208),
    (0.208, 2.56), (0.227, -2.88), (0.157, 2.27),
    (0.072, 3.08), (0.2, -1.07), (0.199, -1.87),
    (0.13, -1.95), (0.133, 1.5), (0.218, -1.68),
    (0.244, -1.84), (0.191, -3.05), (0.049, 2.61),
    (0.144, 1.22), (0.226, 2.14), (0.278, -2.46),
    (0.227, 0.773), (0.186, -2.11), (0.218, -1.52),
];

/// Tolerance on `a1² + a2² = 1` for F2'.
pub const F2PRIME_NORM_TOL: f64 = 1e-10;

impl NamedState {
    /// The parameter-free tags.
    pub const FIXED: [NamedState; 11] = [
        NamedState::Ghz333,
        NamedState::W,
        NamedState::W333,
        NamedState::Aharonov,
        NamedState::D3_111,
        NamedState::Psi3,
        NamedState::D3_2,
        NamedState::D3_3,
        NamedState::Psi1,
        NamedState::Psi2,
        NamedState::M333I,
    ];

    /// Psi1 and Psi2 are only given to three decimals and are not renormalized.
    pub fn is_approximate(&self) -> bool {
        matches!(self, NamedState::Psi1 | NamedState::Psi2)
    }

    pub fn valid_tags() -> &'static str {
        "ghz333, w, w333, aharonov, d3_111, psi3, d3_2, d3_3, psi1, psi2, m333i, \
         f2prime:A1,A2, f3prime:+1|-1, maxdelta:1..12"
    }
}

impl fmt::Display for NamedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedState::Ghz333 => f.write_str("ghz333"),
            NamedState::W => f.write_str("w"),
            NamedState::W333 => f.write_str("w333"),
            NamedState::Aharonov => f.write_str("aharonov"),
            NamedState::D3_111 => f.write_str("d3_111"),
            NamedState::Psi3 => f.write_str("psi3"),
            NamedState::D3_2 => f.write_str("d3_2"),
            NamedState::D3_3 => f.write_str("d3_3"),
            NamedState::Psi1 => f.write_str("psi1"),
            NamedState::Psi2 => f.write_str("psi2"),
            NamedState::M333I => f.write_str("m333i"),
            NamedState::F2Prime { a1, a2 } => write!(f, "f2prime:{a1},{a2}"),
            NamedState::F3Prime { sign } => write!(f, "f3prime:{sign:+}"),
            NamedState::MaxDelta(i) => write!(f, "maxdelta:{i}"),
        }
    }
}

impl FromStr for NamedState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let (head, arg) = match lower.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (lower.as_str(), None),
        };
        let unknown = || Error::Parse(format!("unknown state tag {s:?}; valid tags: {}", Self::valid_tags()));
        let tag = match (head, arg) {
            ("ghz333" | "ghz", None) => NamedState::Ghz333,
            ("w", None) => NamedState::W,
            ("w333", None) => NamedState::W333,
            ("aharonov" | "singlet", None) => NamedState::Aharonov,
            ("d3_111", None) => NamedState::D3_111,
            ("psi3", None) => NamedState::Psi3,
            ("d3_2", None) => NamedState::D3_2,
            ("d3_3", None) => NamedState::D3_3,
            ("psi1", None) => NamedState::Psi1,
            ("psi2", None) => NamedState::Psi2,
            ("m333i", None) => NamedState::M333I,
            ("f2prime", Some(a)) => {
                let (x, y) = a.split_once(',').ok_or_else(unknown)?;
                let a1 = x.trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string()))?;
                let a2 = y.trim().parse::<f64>().map_err(|e| Error::Parse(e.to_string()))?;
                NamedState::F2Prime { a1, a2 }
            }
            ("f3prime", Some(a)) => match a.trim() {
                "+1" | "1" | "+" => NamedState::F3Prime { sign: 1 },
                "-1" | "-" => NamedState::F3Prime { sign: -1 },
                _ => return Err(unknown()),
            },
            ("maxdelta", Some(a)) => {
                let i = a.trim().parse::<u8>().map_err(|e| Error::Parse(e.to_string()))?;
                NamedState::MaxDelta(i)
            }
            _ => return Err(unknown()),
        };
        Ok(tag)
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn kets(terms: &[(&str, f64)], scale: f64) -> QutritState {
    QutritState::from_kets(terms.iter().map(|&(k, x)| (k, re(x * scale)))).expect("static kets")
}

fn polar(data: &[(f64, f64); DIM]) -> QutritState {
    QutritState::from_amplitudes(data.map(|(r, phi)| Complex64::from_polar(r, phi)))
}

/// Coordinates `(rs, s, s)` (and cyclic shifts) of the `index`-th hyperdeterminant
/// maximizer, `r = 1 ± √3`, `s = ±1/√(r² + 2)`.
///
/// Ordering: index − 1 = 4·position + 2·(r choice) + (s sign), so index 1 is
/// `r = 1 + √3`, `s > 0` with the distinguished coordinate first.
pub fn max_delta_coeffs(index: u8) -> Result<SemiSimpleCoeffs> {
    if !(1..=12).contains(&index) {
        return Err(Error::InvalidParameter(format!(
            "maxdelta index {index} outside 1..=12"
        )));
    }
    let n = (index - 1) as usize;
    let pos = n / 4;
    let r = if (n / 2).is_multiple_of(2) { 1.0 + 3f64.sqrt() } else { 1.0 - 3f64.sqrt() };
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let s = sign / (r * r + 2.0).sqrt();
    let mut x = [s; 3];
    x[pos] = r * s;
    Ok(SemiSimpleCoeffs::from_array(x))
}

pub fn named_state(tag: &NamedState) -> Result<QutritState> {
    let r3 = 1.0 / 3f64.sqrt();
    let r6 = 1.0 / 6f64.sqrt();
    let state = match *tag {
        NamedState::Ghz333 => kets(&[("000", 1.0), ("111", 1.0), ("222", 1.0)], r3),
        NamedState::W => kets(&[("100", 1.0), ("010", 1.0), ("001", 1.0)], r3),
        NamedState::W333 => kets(
            &[("100", 1.0), ("200", 1.0), ("010", 1.0), ("020", 1.0), ("001", 1.0), ("002", 1.0)],
            r6,
        ),
        NamedState::Aharonov => kets(
            &[("012", 1.0), ("201", 1.0), ("120", 1.0), ("021", -1.0), ("102", -1.0), ("210", -1.0)],
            r6,
        ),
        NamedState::D3_111 => kets(
            &[("012", 1.0), ("021", 1.0), ("102", 1.0), ("120", 1.0), ("201", 1.0), ("210", 1.0)],
            r6,
        ),
        NamedState::Psi3 => {
            let s3 = 3f64.sqrt();
            let norm = 2.0 * (6.0 - 3.0 * s3).sqrt();
            kets(
                &[("000", 3.0 - 2.0 * s3), ("011", 1.0), ("101", 1.0), ("110", 1.0)],
                1.0 / norm,
            )
        }
        NamedState::D3_2 => kets(
            &[("200", 1.0), ("020", 1.0), ("002", 1.0), ("110", 2.0), ("101", 2.0), ("011", 2.0)],
            1.0 / 15f64.sqrt(),
        ),
        NamedState::D3_3 => kets(
            &[
                ("012", 1.0), ("021", 1.0), ("102", 1.0), ("120", 1.0),
                ("201", 1.0), ("210", 1.0), ("111", 2.0),
            ],
            1.0 / 10f64.sqrt(),
        ),
        NamedState::Psi1 => polar(&PSI1_POLAR),
        NamedState::Psi2 => polar(&PSI2_POLAR),
        NamedState::M333I => {
            let h = std::f64::consts::FRAC_1_SQRT_2;
            semisimple_to_tensor(SemiSimpleCoeffs::new(h, -h, 0.0))
        }
        NamedState::F2Prime { a1, a2 } => {
            if !a1.is_finite() || !a2.is_finite() || (a1 * a1 + a2 * a2 - 1.0).abs() > F2PRIME_NORM_TOL {
                return Err(Error::InvalidParameter(format!(
                    "f2prime needs a1² + a2² = 1, got ({a1}, {a2})"
                )));
            }
            let (w1, w2) = f2prime_basis();
            w1.scale(re(a1)).add(&w2.scale(re(a2)))
        }
        NamedState::F3Prime { sign } => {
            if sign != 1 && sign != -1 {
                return Err(Error::InvalidParameter(format!("f3prime sign must be ±1, got {sign}")));
            }
            // 8/(5√41) is the factor that makes this vector a unit vector.
            let scale = f64::from(sign) * 8.0 / (5.0 * 41f64.sqrt());
            kets(
                &[("001", -2.0), ("010", -2.0), ("100", -2.0), ("111", 2.0), ("222", -0.125)],
                scale,
            )
        }
        NamedState::MaxDelta(i) => semisimple_to_tensor(max_delta_coeffs(i)?),
    };
    Ok(state)
}

/// The two unit vectors `w1`, `w2` spanning the F2' family.
pub fn f2prime_basis() -> (QutritState, QutritState) {
    let s = (2.0f64 / 21.0).sqrt();
    let w1 = kets(
        &[("212", -1.0), ("200", 1.0), ("120", 2.0), ("111", -2.0), ("022", 0.5), ("001", -0.5)],
        s,
    );
    let w2 = kets(
        &[("222", -1.0), ("201", -1.0), ("121", 2.0), ("110", 2.0), ("012", -0.5), ("000", -0.5)],
        s,
    );
    (w1, w2)
}
