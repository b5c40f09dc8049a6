use super::Objective;
use crate::error::{Error, Result};
use crate::states::max_delta_coeffs;
use crate::states::SemiSimpleCoeffs;

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// The sign/permutation images of `p` (12 elements, with repeats if `p` has symmetry).
pub fn orbit(p: SemiSimpleCoeffs) -> Vec<SemiSimpleCoeffs> {
    let x = p.to_array();
    let mut out = Vec::with_capacity(12);
    for sign in [1.0, -1.0] {
        for perm in PERMS {
            out.push(SemiSimpleCoeffs::new(sign * x[perm[0]], sign * x[perm[1]], sign * x[perm[2]]));
        }
    }
    out
}

/// Euclidean distance from `p` to the nearest sign/permutation image of `q`.
pub fn orbit_distance(p: SemiSimpleCoeffs, q: SemiSimpleCoeffs) -> f64 {
    orbit(q)
        .into_iter()
        .map(|g| {
            let d = [p.a - g.a, p.b - g.b, p.c - g.c];
            (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

/// The real semi-simple maximizers of `|f|`: twelve points for `Δ333`, the six
/// arrangements of `(1/√2, −1/√2, 0)` for the fundamental invariants.
pub fn known_maximizers(obj: Objective) -> Result<Vec<SemiSimpleCoeffs>> {
    match obj {
        Objective::Delta333 => (1..=12).map(max_delta_coeffs).collect(),
        Objective::I6 | Objective::I9 | Objective::I12 => {
            let h = std::f64::consts::FRAC_1_SQRT_2;
            let base = [h, -h, 0.0];
            Ok(PERMS
                .iter()
                .map(|p| SemiSimpleCoeffs::new(base[p[0]], base[p[1]], base[p[2]]))
                .collect())
        }
        Objective::SIndex => Err(Error::UnsupportedObjective("s_index")),
    }
}
