//! The 78x78 adjoint matrix `K = ad_Z` of a tensor placed in the graded Lie
//! algebra `sl3³ ⊕ V ⊕ V*`.
//!
//! Rows and columns split as `(24, 27, 27)`. Only three blocks are nonzero:
//!
//! ```text
//!       | 0    0    K02 |
//!   K = | K10  0    0   |
//!       | 0    K21  0   |
//! ```
//!
//! Every entry is a fixed rational multiple of a single amplitude. The layout
//! ships as `assets/adjoint_blocks.csv` and is checked against frozen row
//! signatures before use.

use std::sync::OnceLock;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::signature::{RowSignature, ROW_SIGNATURES};
use crate::error::{Error, Result};
use crate::states::{flat_index, QutritState};

pub const ADJOINT_DIM: usize = 78;
const SL3_CUBE: usize = 24;
const TENSOR: usize = 27;

const EMBEDDED_ASSET: &str = include_str!("../../assets/adjoint_blocks.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    K02,
    K10,
    K21,
}

impl Block {
    pub fn shape(self) -> (usize, usize) {
        match self {
            Block::K02 => (SL3_CUBE, TENSOR),
            Block::K10 => (TENSOR, SL3_CUBE),
            Block::K21 => (TENSOR, TENSOR),
        }
    }

    /// Top-left corner of the block inside K.
    pub fn offset(self) -> (usize, usize) {
        match self {
            Block::K02 => (0, SL3_CUBE + TENSOR),
            Block::K10 => (SL3_CUBE, 0),
            Block::K21 => (SL3_CUBE + TENSOR, SL3_CUBE),
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "K02" => Ok(Block::K02),
            "K10" => Ok(Block::K10),
            "K21" => Ok(Block::K21),
            _ => Err(Error::Parse(format!("unknown block {s:?}"))),
        }
    }
}

/// One nonzero entry: `coef · z[amp]` at `(row, col)` of `block`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlockEntry {
    pub block: Block,
    pub row: usize,
    pub col: usize,
    /// Coefficient numerator over a denominator of 3.
    pub thirds: i32,
    pub amp: usize,
}

impl BlockEntry {
    pub fn coef(&self) -> f64 {
        f64::from(self.thirds) / 3.0
    }
}

/// The coefficient pattern of the three blocks.
#[derive(Clone, Debug)]
pub struct AdjointLayout {
    k02: Vec<BlockEntry>,
    k10: Vec<BlockEntry>,
    k21: Vec<BlockEntry>,
}

impl AdjointLayout {
    /// The bundled layout. Panics only if the bundled asset is corrupt.
    pub fn embedded() -> &'static AdjointLayout {
        static LAYOUT: OnceLock<AdjointLayout> = OnceLock::new();
        LAYOUT.get_or_init(|| {
            let layout = AdjointLayout::from_csv(EMBEDDED_ASSET).expect("bundled adjoint asset parses");
            layout.verify_checksum().expect("bundled adjoint asset checksum");
            layout
        })
    }

    pub fn embedded_csv() -> &'static str {
        EMBEDDED_ASSET
    }

    /// Parses `block,row,col,num,den,i,j,k` rows. Does not check the checksum.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut layout = AdjointLayout { k02: Vec::new(), k10: Vec::new(), k21: Vec::new() };
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("block") {
                continue;
            }
            let bad = |what: &str| Error::Parse(format!("line {}: {what}: {line:?}", lineno + 1));
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 8 {
                return Err(bad("expected 8 fields"));
            }
            let block = Block::parse(fields[0])?;
            let num = |k: usize| fields[k].parse::<i64>().map_err(|_| bad("not an integer"));
            let (row, col) = (num(1)?, num(2)?);
            let (n, d) = (num(3)?, num(4)?);
            let (i, j, k) = (num(5)?, num(6)?, num(7)?);
            let (rows, cols) = block.shape();
            if row < 0 || col < 0 || row as usize >= rows || col as usize >= cols {
                return Err(bad("position outside block"));
            }
            if ![i, j, k].iter().all(|x| (0..3).contains(x)) {
                return Err(bad("amplitude index outside 0..3"));
            }
            if d != 1 && d != 3 {
                return Err(bad("denominator must be 1 or 3"));
            }
            let thirds = i32::try_from(n * (3 / d)).map_err(|_| bad("coefficient overflow"))?;
            let entry = BlockEntry {
                block,
                row: row as usize,
                col: col as usize,
                thirds,
                amp: flat_index(i as usize, j as usize, k as usize),
            };
            layout.block_mut(block).push(entry);
        }
        Ok(layout)
    }

    fn block_mut(&mut self, b: Block) -> &mut Vec<BlockEntry> {
        match b {
            Block::K02 => &mut self.k02,
            Block::K10 => &mut self.k10,
            Block::K21 => &mut self.k21,
        }
    }

    pub fn entries(&self, b: Block) -> &[BlockEntry] {
        match b {
            Block::K02 => &self.k02,
            Block::K10 => &self.k10,
            Block::K21 => &self.k21,
        }
    }

    pub fn nnz(&self) -> usize {
        self.k02.len() + self.k10.len() + self.k21.len()
    }

    /// Compares each block row's coefficient multiset and index checksum with
    /// the frozen signatures.
    pub fn verify_checksum(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for b in [Block::K02, Block::K10, Block::K21] {
            for e in self.entries(b) {
                if !seen.insert((b, e.row, e.col)) {
                    return Err(Error::Checksum(format!("duplicate entry {b:?}[{},{}]", e.row, e.col)));
                }
            }
        }
        for sig in ROW_SIGNATURES.iter() {
            let got = row_signature(self.entries(sig.block), sig.block, sig.row)?;
            if got != *sig {
                return Err(Error::Checksum(format!(
                    "{:?} row {}: expected counts {:?} / index sum {}, found {:?} / {}",
                    sig.block, sig.row, sig.counts, sig.index_sum, got.counts, got.index_sum
                )));
            }
        }
        Ok(())
    }
}

fn row_signature(entries: &[BlockEntry], block: Block, row: usize) -> Result<RowSignature> {
    let mut counts = [0u32; 6];
    let mut index_sum = 0i64;
    for e in entries.iter().filter(|e| e.row == row) {
        let slot = match e.thirds {
            -3 => 0,
            -2 => 1,
            -1 => 2,
            1 => 3,
            2 => 4,
            3 => 5,
            other => {
                return Err(Error::Checksum(format!(
                    "{block:?} row {row}: coefficient {other}/3 not in the printed set"
                )))
            }
        };
        counts[slot] += 1;
        index_sum += i64::from(e.thirds) * (e.amp as i64 + 1) * (e.col as i64 + 1);
    }
    Ok(RowSignature { block, row, counts, index_sum })
}

/// Dense `K` for one state.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointMatrix {
    pub entries: DMatrix<Complex64>,
}

impl AdjointMatrix {
    pub fn block(&self, b: Block) -> DMatrix<Complex64> {
        let (r, c) = b.offset();
        let (nr, nc) = b.shape();
        self.entries.view((r, c), (nr, nc)).into_owned()
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }
}

pub fn build_adjoint(state: &QutritState) -> AdjointMatrix {
    build_adjoint_with(AdjointLayout::embedded(), state)
}

pub fn build_adjoint_with(layout: &AdjointLayout, state: &QutritState) -> AdjointMatrix {
    let z = state.amplitudes();
    let mut m = DMatrix::from_element(ADJOINT_DIM, ADJOINT_DIM, Complex64::new(0.0, 0.0));
    for b in [Block::K02, Block::K10, Block::K21] {
        let (r0, c0) = b.offset();
        for e in layout.entries(b) {
            m[(r0 + e.row, c0 + e.col)] = z[e.amp] * e.coef();
        }
    }
    AdjointMatrix { entries: m }
}

pub const MAX_POWER: u32 = 16;

/// `tr(K^p)` by repeated dense multiplication.
pub fn power_trace(k: &AdjointMatrix, p: u32) -> Result<Complex64> {
    if p == 0 || p > MAX_POWER {
        return Err(Error::InvalidPower(p));
    }
    let mut acc = k.entries.clone();
    for _ in 1..p {
        acc = &acc * &k.entries;
    }
    Ok(acc.trace())
}

type Square24 = [[Complex64; SL3_CUBE]; SL3_CUBE];

/// `(tr(K⁶), tr(K¹²))` through the 24x24 diagonal block `B = K02·K21·K10` of
/// `K³`. Cyclicity gives `tr(K^{3m}) = 3·tr(B^m)`.
pub(crate) fn block_traces(layout: &AdjointLayout, state: &QutritState) -> (Complex64, Complex64) {
    let z = state.amplitudes();
    let zero = Complex64::new(0.0, 0.0);

    let mut k10 = [[zero; SL3_CUBE]; TENSOR];
    for e in layout.entries(Block::K10) {
        k10[e.row][e.col] = z[e.amp] * e.coef();
    }
    // K21 · K10 : 27 x 24
    let mut p = [[zero; SL3_CUBE]; TENSOR];
    for e in layout.entries(Block::K21) {
        let v = z[e.amp] * e.coef();
        if v == zero {
            continue;
        }
        let src = k10[e.col];
        for (dst, s) in p[e.row].iter_mut().zip(src.iter()) {
            *dst += v * s;
        }
    }
    // K02 · (K21 · K10) : 24 x 24
    let mut b: Square24 = [[zero; SL3_CUBE]; SL3_CUBE];
    for e in layout.entries(Block::K02) {
        let v = z[e.amp] * e.coef();
        if v == zero {
            continue;
        }
        let src = p[e.col];
        for (dst, s) in b[e.row].iter_mut().zip(src.iter()) {
            *dst += v * s;
        }
    }
    let b2 = square(&b);
    let tr_b2 = trace_of_product(&b, &b);
    let tr_b4 = trace_of_product(&b2, &b2);
    (tr_b2 * 3.0, tr_b4 * 3.0)
}

fn square(m: &Square24) -> Square24 {
    let mut out = [[Complex64::new(0.0, 0.0); SL3_CUBE]; SL3_CUBE];
    for i in 0..SL3_CUBE {
        for k in 0..SL3_CUBE {
            let a = m[i][k];
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            for j in 0..SL3_CUBE {
                out[i][j] += a * m[k][j];
            }
        }
    }
    out
}

fn trace_of_product(x: &Square24, y: &Square24) -> Complex64 {
    let mut t = Complex64::new(0.0, 0.0);
    for i in 0..SL3_CUBE {
        for j in 0..SL3_CUBE {
            t += x[i][j] * y[j][i];
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{named_state, NamedState};

    fn random_state(seed: u64) -> QutritState {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut s = QutritState::zero();
        for z in s.amplitudes_mut() {
            *z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        s.normalized()
    }

    #[test]
    fn embedded_layout_passes_checksum() {
        let l = AdjointLayout::embedded();
        assert_eq!(l.nnz(), 810);
        l.verify_checksum().unwrap();
    }

    #[test]
    fn corrupted_coefficient_fails_checksum() {
        let bad = EMBEDDED_ASSET.replacen("K02,0,0,-1,3,2,2,2", "K02,0,0,1,3,2,2,2", 1);
        assert_ne!(bad, EMBEDDED_ASSET);
        let l = AdjointLayout::from_csv(&bad).unwrap();
        assert!(matches!(l.verify_checksum(), Err(Error::Checksum(_))));
    }

    #[test]
    fn corrupted_amplitude_index_fails_checksum() {
        let bad = EMBEDDED_ASSET.replacen("K02,0,1,1,3,2,2,1", "K02,0,1,1,3,2,1,2", 1);
        let l = AdjointLayout::from_csv(&bad).unwrap();
        assert!(l.verify_checksum().is_err());
    }

    #[test]
    fn dropped_entry_fails_checksum() {
        let bad: String = EMBEDDED_ASSET
            .lines()
            .filter(|l| !l.starts_with("K21,26,"))
            .map(|l| format!("{l}\n"))
            .collect();
        let l = AdjointLayout::from_csv(&bad).unwrap();
        assert!(l.verify_checksum().is_err());
    }

    #[test]
    fn malformed_csv_is_a_parse_error() {
        assert!(AdjointLayout::from_csv("K02,0,0,-1,3,2,2").is_err());
        assert!(AdjointLayout::from_csv("K99,0,0,-1,3,2,2,2").is_err());
        assert!(AdjointLayout::from_csv("K02,30,0,-1,3,2,2,2").is_err());
        assert!(AdjointLayout::from_csv("K02,0,0,-1,2,2,2,2").is_err());
    }

    #[test]
    fn zero_state_gives_zero_matrix() {
        let k = build_adjoint(&QutritState::zero());
        assert!(k.entries.iter().all(|z| *z == Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn block_sparsity() {
        let k = build_adjoint(&random_state(1));
        for r in 0..ADJOINT_DIM {
            for c in 0..ADJOINT_DIM {
                let in_block = [Block::K02, Block::K10, Block::K21].iter().any(|b| {
                    let (r0, c0) = b.offset();
                    let (nr, nc) = b.shape();
                    (r0..r0 + nr).contains(&r) && (c0..c0 + nc).contains(&c)
                });
                if !in_block {
                    assert_eq!(k.entries[(r, c)], Complex64::new(0.0, 0.0));
                }
            }
        }
    }

    #[test]
    fn ghz_entries_match_print() {
        let ghz = named_state(&NamedState::Ghz333).unwrap();
        let k = build_adjoint(&ghz);
        let w = 1.0 / 3f64.sqrt();
        let k02 = k.block(Block::K02);
        // First printed row: -1/3 z222 at col 0, 1/3 z111 at col 13, 2/3 z000 at col 26.
        assert!((k02[(0, 0)].re + w / 3.0).abs() < 1e-15);
        assert!((k02[(0, 13)].re - w / 3.0).abs() < 1e-15);
        assert!((k02[(0, 26)].re - 2.0 * w / 3.0).abs() < 1e-15);
        assert_eq!(k02.row(0).iter().filter(|z| z.norm() > 0.0).count(), 3);
        // K10 row 0: -z000 at cols 0, 2, 4.
        let k10 = k.block(Block::K10);
        for c in [0, 2, 4] {
            assert!((k10[(0, c)].re + w).abs() < 1e-15);
        }
        // K21 row 0: z111 at col 0, -z000 at col 13.
        let k21 = k.block(Block::K21);
        assert!((k21[(0, 0)].re - w).abs() < 1e-15);
        assert!((k21[(0, 13)].re + w).abs() < 1e-15);
    }

    #[test]
    fn low_traces_vanish() {
        let k = build_adjoint(&random_state(2));
        assert!(k.trace().norm() < 1e-12);
        assert!(power_trace(&k, 3).unwrap().norm() < 1e-10);
    }

    #[test]
    fn power_range_enforced() {
        let k = build_adjoint(&random_state(3));
        assert!(matches!(power_trace(&k, 0), Err(Error::InvalidPower(0))));
        assert!(matches!(power_trace(&k, 17), Err(Error::InvalidPower(17))));
        assert!(power_trace(&k, 16).is_ok());
    }

    #[test]
    fn block_traces_agree_with_dense() {
        for seed in 0..5 {
            let s = random_state(seed);
            let k = build_adjoint(&s);
            let (g6, g12) = block_traces(AdjointLayout::embedded(), &s);
            let d6 = power_trace(&k, 6).unwrap();
            let d12 = power_trace(&k, 12).unwrap();
            assert!((g6 - d6).norm() <= 1e-12 * d6.norm().max(1e-300));
            assert!((g12 - d12).norm() <= 1e-12 * d12.norm().max(1e-300));
        }
    }

    #[test]
    fn ghz_g6() {
        let k = build_adjoint(&named_state(&NamedState::Ghz333).unwrap());
        let g6 = power_trace(&k, 6).unwrap();
        assert!((g6 - Complex64::new(-4.0, 0.0)).norm() < 4e-10);
        assert!(power_trace(&k, 9).unwrap().norm() < 1e-10);
    }
}
