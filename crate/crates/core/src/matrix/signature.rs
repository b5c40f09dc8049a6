//! Frozen per-row signatures of the printed adjoint blocks.
//!
//! `counts` tallies the coefficients of each row by value, in thirds, in the
//! order `[-3, -2, -1, 1, 2, 3]` (so `z` counts under `3` and `-2/3 z` under
//! `-2`). `index_sum` is `Σ coef·3 · (flat amplitude index + 1) · (column + 1)`
//! over the row, which pins the column and amplitude of every entry.

use super::adjoint::Block;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RowSignature {
    pub block: Block,
    pub row: usize,
    pub counts: [u32; 6],
    pub index_sum: i64,
}

pub(crate) const ROW_SIGNATURES: [RowSignature; 78] = [
    RowSignature { block: Block::K02, row: 0, counts: [0, 4, 9, 9, 5, 0], index_sum: 271 },
    RowSignature { block: Block::K02, row: 1, counts: [0, 5, 9, 9, 4, 0], index_sum: -271 },
    RowSignature { block: Block::K02, row: 2, counts: [0, 4, 9, 9, 5, 0], index_sum: 55 },
    RowSignature { block: Block::K02, row: 3, counts: [0, 5, 9, 9, 4, 0], index_sum: -55 },
    RowSignature { block: Block::K02, row: 4, counts: [0, 4, 9, 9, 5, 0], index_sum: 31 },
    RowSignature { block: Block::K02, row: 5, counts: [0, 5, 9, 9, 4, 0], index_sum: -31 },
    RowSignature { block: Block::K02, row: 6, counts: [5, 0, 0, 0, 0, 4], index_sum: -150 },
    RowSignature { block: Block::K02, row: 7, counts: [4, 0, 0, 0, 0, 5], index_sum: 15 },
    RowSignature { block: Block::K02, row: 8, counts: [4, 0, 0, 0, 0, 5], index_sum: 150 },
    RowSignature { block: Block::K02, row: 9, counts: [5, 0, 0, 0, 0, 4], index_sum: 30 },
    RowSignature { block: Block::K02, row: 10, counts: [4, 0, 0, 0, 0, 5], index_sum: -129 },
    RowSignature { block: Block::K02, row: 11, counts: [4, 0, 0, 0, 0, 5], index_sum: -30 },
    RowSignature { block: Block::K02, row: 12, counts: [5, 0, 0, 0, 0, 4], index_sum: -6 },
    RowSignature { block: Block::K02, row: 13, counts: [4, 0, 0, 0, 0, 5], index_sum: -33 },
    RowSignature { block: Block::K02, row: 14, counts: [4, 0, 0, 0, 0, 5], index_sum: 6 },
    RowSignature { block: Block::K02, row: 15, counts: [4, 0, 0, 0, 0, 5], index_sum: 906 },
    RowSignature { block: Block::K02, row: 16, counts: [4, 0, 0, 0, 0, 5], index_sum: 1527 },
    RowSignature { block: Block::K02, row: 17, counts: [5, 0, 0, 0, 0, 4], index_sum: -906 },
    RowSignature { block: Block::K02, row: 18, counts: [4, 0, 0, 0, 0, 5], index_sum: 222 },
    RowSignature { block: Block::K02, row: 19, counts: [4, 0, 0, 0, 0, 5], index_sum: 375 },
    RowSignature { block: Block::K02, row: 20, counts: [5, 0, 0, 0, 0, 4], index_sum: -222 },
    RowSignature { block: Block::K02, row: 21, counts: [4, 0, 0, 0, 0, 5], index_sum: 90 },
    RowSignature { block: Block::K02, row: 22, counts: [4, 0, 0, 0, 0, 5], index_sum: 135 },
    RowSignature { block: Block::K02, row: 23, counts: [5, 0, 0, 0, 0, 4], index_sum: -90 },
    RowSignature { block: Block::K10, row: 0, counts: [9, 0, 0, 0, 0, 0], index_sum: -1248 },
    RowSignature { block: Block::K10, row: 1, counts: [9, 0, 0, 0, 0, 1], index_sum: -1356 },
    RowSignature { block: Block::K10, row: 2, counts: [8, 0, 0, 0, 0, 1], index_sum: -1428 },
    RowSignature { block: Block::K10, row: 3, counts: [9, 0, 0, 0, 0, 1], index_sum: -1641 },
    RowSignature { block: Block::K10, row: 4, counts: [9, 0, 0, 0, 0, 2], index_sum: -1827 },
    RowSignature { block: Block::K10, row: 5, counts: [8, 0, 0, 0, 0, 2], index_sum: -1950 },
    RowSignature { block: Block::K10, row: 6, counts: [8, 0, 0, 0, 0, 1], index_sum: -1980 },
    RowSignature { block: Block::K10, row: 7, counts: [8, 0, 0, 0, 0, 2], index_sum: -2235 },
    RowSignature { block: Block::K10, row: 8, counts: [7, 0, 0, 0, 0, 2], index_sum: -2400 },
    RowSignature { block: Block::K10, row: 9, counts: [9, 0, 0, 0, 0, 1], index_sum: -2682 },
    RowSignature { block: Block::K10, row: 10, counts: [9, 0, 0, 0, 0, 2], index_sum: -2982 },
    RowSignature { block: Block::K10, row: 11, counts: [8, 0, 0, 0, 0, 2], index_sum: -3165 },
    RowSignature { block: Block::K10, row: 12, counts: [9, 0, 0, 0, 0, 2], index_sum: -3381 },
    RowSignature { block: Block::K10, row: 13, counts: [9, 0, 0, 0, 0, 3], index_sum: -3759 },
    RowSignature { block: Block::K10, row: 14, counts: [8, 0, 0, 0, 0, 3], index_sum: -3993 },
    RowSignature { block: Block::K10, row: 15, counts: [8, 0, 0, 0, 0, 2], index_sum: -3945 },
    RowSignature { block: Block::K10, row: 16, counts: [8, 0, 0, 0, 0, 3], index_sum: -4392 },
    RowSignature { block: Block::K10, row: 17, counts: [7, 0, 0, 0, 0, 3], index_sum: -4668 },
    RowSignature { block: Block::K10, row: 18, counts: [8, 0, 0, 0, 0, 1], index_sum: -4080 },
    RowSignature { block: Block::K10, row: 19, counts: [8, 0, 0, 0, 0, 2], index_sum: -4563 },
    RowSignature { block: Block::K10, row: 20, counts: [7, 0, 0, 0, 0, 2], index_sum: -4848 },
    RowSignature { block: Block::K10, row: 21, counts: [8, 0, 0, 0, 0, 2], index_sum: -5058 },
    RowSignature { block: Block::K10, row: 22, counts: [8, 0, 0, 0, 0, 3], index_sum: -5619 },
    RowSignature { block: Block::K10, row: 23, counts: [7, 0, 0, 0, 0, 3], index_sum: -5955 },
    RowSignature { block: Block::K10, row: 24, counts: [7, 0, 0, 0, 0, 2], index_sum: -5820 },
    RowSignature { block: Block::K10, row: 25, counts: [7, 0, 0, 0, 0, 3], index_sum: -6450 },
    RowSignature { block: Block::K10, row: 26, counts: [6, 0, 0, 0, 0, 3], index_sum: -6828 },
    RowSignature { block: Block::K21, row: 0, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 1, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 2, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 3, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 4, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 5, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 6, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 7, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 8, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 9, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 10, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 11, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 12, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 13, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 14, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 15, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 16, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 17, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 18, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 19, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 20, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 21, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 22, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 23, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 24, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 25, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
    RowSignature { block: Block::K21, row: 26, counts: [4, 0, 0, 0, 0, 4], index_sum: 0 },
];
