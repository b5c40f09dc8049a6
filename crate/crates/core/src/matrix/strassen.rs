//! The 9x9 Strassen matrix, whose determinant is the degree-9 invariant `g9`.

use nalgebra::SMatrix;
use num_complex::Complex64;

use crate::states::QutritState;

pub type StrassenMatrix = SMatrix<Complex64, 9, 9>;

/// `(sign, first index)` of each 3x3 block; `None` blocks are zero. Inside a
/// block, entry `(j, k)` is `sign · z[i][j][k]`.
const PATTERN: [[Option<(f64, usize)>; 3]; 3] = [
    [None, Some((-1.0, 2)), Some((1.0, 1))],
    [Some((1.0, 2)), None, Some((-1.0, 0))],
    [Some((-1.0, 1)), Some((1.0, 0)), None],
];

pub fn strassen_matrix(state: &QutritState) -> StrassenMatrix {
    let mut s = StrassenMatrix::zeros();
    for (br, row) in PATTERN.iter().enumerate() {
        for (bc, cell) in row.iter().enumerate() {
            if let Some((sign, i)) = *cell {
                for j in 0..3 {
                    for k in 0..3 {
                        s[(3 * br + j, 3 * bc + k)] = state.get(i, j, k) * sign;
                    }
                }
            }
        }
    }
    s
}

/// `det(S9)` via LU with partial pivoting.
pub fn strassen_det(state: &QutritState) -> Complex64 {
    strassen_matrix(state).lu().determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{named_state, NamedState};

    #[test]
    fn block_antisymmetric() {
        let s = strassen_matrix(&named_state(&NamedState::Psi1).unwrap());
        for br in 0..3 {
            for bc in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        let x = s[(3 * br + j, 3 * bc + k)];
                        let y = s[(3 * bc + j, 3 * br + k)];
                        if br == bc {
                            assert_eq!(x, Complex64::new(0.0, 0.0));
                        } else {
                            assert_eq!(x, -y);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn printed_corner_entries() {
        let st = named_state(&NamedState::Psi2).unwrap();
        let s = strassen_matrix(&st);
        assert_eq!(s[(0, 3)], -st.get(2, 0, 0));
        assert_eq!(s[(0, 8)], st.get(1, 0, 2));
        assert_eq!(s[(5, 2)], st.get(2, 2, 2));
        assert_eq!(s[(3, 6)], -st.get(0, 0, 0));
        assert_eq!(s[(8, 0)], -st.get(1, 2, 0));
        assert_eq!(s[(8, 5)], st.get(0, 2, 2));
    }

    #[test]
    fn known_values() {
        assert_eq!(strassen_det(&QutritState::zero()), Complex64::new(0.0, 0.0));
        let ghz = named_state(&NamedState::Ghz333).unwrap();
        assert!(strassen_det(&ghz).norm() < 1e-12);
        let a = named_state(&NamedState::Aharonov).unwrap();
        let m = 6f64.sqrt() / 3888.0;
        assert!((strassen_det(&a).norm() - m).abs() < 1e-10 * m);
    }
}
