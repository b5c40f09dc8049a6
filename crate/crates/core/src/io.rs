//! JSON and CSV formats for states, invariant sets and numeric tables.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::InvariantSet;
use crate::states::{split_index, QutritState, DIM};

/// Serde adapter writing a complex number as `[re, im]`.
pub mod complex_pair {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

/// Seventeen significant digits, enough to round-trip an `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    amplitudes: Vec<[f64; 2]>,
}

pub fn state_to_json(state: &QutritState) -> Result<String> {
    let doc = StateJson {
        amplitudes: state.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn state_from_json(text: &str) -> Result<QutritState> {
    let doc: StateJson = serde_json::from_str(text)?;
    if doc.amplitudes.len() != DIM {
        return Err(Error::Parse(format!(
            "expected {DIM} amplitudes, found {}",
            doc.amplitudes.len()
        )));
    }
    let mut s = QutritState::zero();
    for (z, [re, im]) in s.amplitudes_mut().iter_mut().zip(doc.amplitudes) {
        *z = Complex64::new(re, im);
    }
    Ok(s)
}

/// 27 rows `i,j,k,re,im` after a header line.
pub fn state_to_csv(state: &QutritState) -> String {
    let mut out = String::from("i,j,k,re,im\n");
    for (n, z) in state.amplitudes().iter().enumerate() {
        let (i, j, k) = split_index(n);
        let _ = writeln!(out, "{i},{j},{k},{},{}", fmt_f64(z.re), fmt_f64(z.im));
    }
    out
}

/// Accepts the output of [`state_to_csv`], with or without the header. Every
/// `(i, j, k)` must appear exactly once.
pub fn state_from_csv(text: &str) -> Result<QutritState> {
    let mut s = QutritState::zero();
    let mut seen = [false; DIM];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('i') {
            continue;
        }
        let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
        let f: Vec<&str> = line.split(',').map(str::trim).collect();
        if f.len() != 5 {
            return Err(bad("expected i,j,k,re,im"));
        }
        let idx = |k: usize| -> Result<usize> {
            match f[k].parse::<usize>() {
                Ok(v) if v < 3 => Ok(v),
                _ => Err(bad("index must be 0, 1 or 2")),
            }
        };
        let (i, j, k) = (idx(0)?, idx(1)?, idx(2)?);
        let re: f64 = f[3].parse().map_err(|_| bad("bad real part"))?;
        let im: f64 = f[4].parse().map_err(|_| bad("bad imaginary part"))?;
        let n = crate::states::flat_index(i, j, k);
        if seen[n] {
            return Err(bad("duplicate amplitude"));
        }
        seen[n] = true;
        s.amplitudes_mut()[n] = Complex64::new(re, im);
    }
    if seen.iter().any(|x| !x) {
        return Err(Error::Parse("CSV state is missing amplitudes".into()));
    }
    Ok(s)
}

pub fn invariants_to_json(inv: &InvariantSet) -> Result<String> {
    Ok(serde_json::to_string_pretty(inv)?)
}

pub const INVARIANTS_CSV_HEADER: &str =
    "I6_re,I6_im,I9_re,I9_im,I12_re,I12_im,Delta333_re,Delta333_im,g6_re,g6_im,g9_re,g9_im,g12_re,g12_im";

/// Header plus one row.
pub fn invariants_to_csv(inv: &InvariantSet) -> String {
    let fields = [inv.i6, inv.i9, inv.i12, inv.delta333, inv.g6, inv.g9, inv.g12];
    let row: Vec<String> = fields
        .iter()
        .flat_map(|z| [fmt_f64(z.re), fmt_f64(z.im)])
        .collect();
    format!("{INVARIANTS_CSV_HEADER}\n{}\n", row.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{named_state, NamedState};
    use proptest::prelude::*;

    #[test]
    fn invariant_json_keys() {
        let inv = InvariantSet::from_invariants(1.0, 2.0, 3.0);
        let v: serde_json::Value = serde_json::from_str(&invariants_to_json(&inv).unwrap()).unwrap();
        for key in ["I6", "I9", "I12", "Delta333", "g6", "g9", "g12"] {
            assert!(v[key].is_array(), "{key}");
        }
        assert_eq!(v["I9"][0], 2.0);
        let back: InvariantSet = serde_json::from_value(v).unwrap();
        assert_eq!(back, inv);
    }

    #[test]
    fn invariant_csv_shape() {
        let csv = invariants_to_csv(&InvariantSet::zero());
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1].split(',').count(), 14);
    }

    #[test]
    fn csv_rejects_incomplete() {
        let csv = state_to_csv(&named_state(&NamedState::W).unwrap());
        let truncated: String = csv.lines().take(10).map(|l| format!("{l}\n")).collect();
        assert!(state_from_csv(&truncated).is_err());
        assert!(state_from_csv("0,0,3,1,0").is_err());
        assert!(state_from_json("{\"amplitudes\": [[1, 0]]}").is_err());
    }

    fn arb_state() -> impl Strategy<Value = QutritState> {
        proptest::collection::vec((-1e3f64..1e3, -1e3f64..1e3), DIM).prop_map(|v| {
            let mut s = QutritState::zero();
            for (z, (re, im)) in s.amplitudes_mut().iter_mut().zip(v) {
                *z = Complex64::new(re, im);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn state_formats_round_trip(s in arb_state()) {
            prop_assert_eq!(state_from_json(&state_to_json(&s).unwrap()).unwrap(), s);
            prop_assert_eq!(state_from_csv(&state_to_csv(&s)).unwrap(), s);
        }
    }
}
