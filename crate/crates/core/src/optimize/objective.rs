use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::closed_form::{self as cf, MaxConstants};
use crate::error::{Error, Result};

/// A real objective on semi-simple coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Objective {
    I6,
    I9,
    I12,
    Delta333,
    SIndex,
}

impl Objective {
    pub const ALL: [Objective; 5] =
        [Objective::I6, Objective::I9, Objective::I12, Objective::Delta333, Objective::SIndex];

    pub fn value(self, p: [f64; 3]) -> f64 {
        let [a, b, c] = p;
        match self {
            Objective::I6 => cf::i6_ss(a, b, c),
            Objective::I9 => cf::i9_ss(a, b, c),
            Objective::I12 => cf::i12_ss(a, b, c),
            Objective::Delta333 => cf::delta_ss(a, b, c),
            Objective::SIndex => cf::s_index_ss(a, b, c),
        }
    }

    /// Ambient partial derivatives `(∂/∂a, ∂/∂b, ∂/∂c)`.
    pub fn gradient(self, p: [f64; 3]) -> [f64; 3] {
        let [a, b, c] = p;
        match self {
            Objective::I6 => cf::i6_gradient(a, b, c),
            Objective::I9 => cf::i9_gradient(a, b, c),
            Objective::I12 => cf::i12_gradient(a, b, c),
            Objective::Delta333 => cf::delta_gradient(a, b, c),
            Objective::SIndex => {
                let m = MaxConstants::VALUES;
                let parts = [
                    (cf::i6_ss(a, b, c), cf::i6_gradient(a, b, c), m.i6),
                    (cf::i9_ss(a, b, c), cf::i9_gradient(a, b, c), m.i9),
                    (cf::i12_ss(a, b, c), cf::i12_gradient(a, b, c), m.i12),
                ];
                let mut g = [0.0; 3];
                for (v, dv, scale) in parts {
                    let s = v.signum() / scale;
                    for (gi, di) in g.iter_mut().zip(dv) {
                        *gi += s * di;
                    }
                }
                g
            }
        }
    }

    /// Maximum of `|f|` on the unit sphere; used to bring objectives to O(1).
    pub fn scale(self) -> f64 {
        let m = MaxConstants::VALUES;
        match self {
            Objective::I6 => m.i6,
            Objective::I9 => m.i9,
            Objective::I12 => m.i12,
            Objective::Delta333 => m.delta,
            Objective::SIndex => 3.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Objective::I6 => "i6",
            Objective::I9 => "i9",
            Objective::I12 => "i12",
            Objective::Delta333 => "delta",
            Objective::SIndex => "s_index",
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i6" => Ok(Objective::I6),
            "i9" => Ok(Objective::I9),
            "i12" => Ok(Objective::I12),
            "delta" | "delta333" | "hyperdet" => Ok(Objective::Delta333),
            "s_index" | "s_i" | "si" => Ok(Objective::SIndex),
            other => Err(Error::Parse(format!(
                "unknown objective {other:?}; expected i6, i9, i12, delta or s_index"
            ))),
        }
    }
}
