//! Partition matrices over boundary connection words, and the multiplying
//! and squaring recipes that combine them into knot-mosaic counts.
//!
//! The partition matrix of a rows x cols quasimosaic block tabulates, for
//! every (bottom word, right word) pair, how many suitably connected
//! fillings of the block carry exactly those words; top and left stay free.
//! Row index = bottom word (left to right), column index = right word (top
//! to bottom), both in the canonical encoding of [`crate::word`]. Gluing
//! two blocks along matching words is then ordinary matrix arithmetic:
//! a product widens a strip by a rotated block, an entrywise square stacks
//! a strip onto its mirror image, and doubling a grand sum closes the
//! boundary ring. Those recipes cover every board from 4x4 to 6x6 except
//! 5x5, which is counted directly from the 3x3 block.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grid::{count_constrained_with, BoundarySpec, SearchOptions};
use crate::report::{CountReport, Method};
use crate::tiles::TileSet;
use crate::word::EdgeWord;

/// Default per-side cap for building a partition matrix by backtracking.
pub const DEFAULT_PARTITION_LIMIT: usize = 3;

/// Dense matrix of unbounded nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigUint>,
}

impl CountMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CountMatrix {
            rows,
            cols,
            entries: vec![BigUint::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CountMatrix::zeros(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = BigUint::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigUint>>) -> Result<Self> {
        let row_count = rows.len();
        let col_count = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != col_count) {
            return Err(Error::ShapeMismatch {
                lhs_rows: row_count,
                lhs_cols: col_count,
                rhs_rows: row_count,
                rhs_cols: 0,
            });
        }
        Ok(CountMatrix {
            rows: row_count,
            cols: col_count,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row * self.cols + col]
    }

    pub fn entry_mut(&mut self, row: usize, col: usize) -> &mut BigUint {
        &mut self.entries[row * self.cols + col]
    }

    /// Standard matrix product.
    pub fn multiply(&self, rhs: &CountMatrix) -> Result<CountMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        let mut out = CountMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    *out.entry_mut(i, j) += a * rhs.entry(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Square every entry in place of the usual product.
    pub fn entrywise_square(&self) -> CountMatrix {
        CountMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * e).collect(),
        }
    }

    /// Sum of all entries.
    pub fn grand_sum(&self) -> BigUint {
        self.entries.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// CSV dump: header row of column words, then one line per row word.
    /// Labels use the canonical word encoding; entries are plain decimal.
    pub fn to_csv(&self, row_word_len: usize, col_word_len: usize) -> String {
        assert_eq!(self.rows, 1 << row_word_len, "row label length");
        assert_eq!(self.cols, 1 << col_word_len, "column label length");
        let mut out = String::new();
        for j in 0..self.cols {
            out.push(',');
            out.push_str(&EdgeWord::from_index(col_word_len, j).to_string());
        }
        out.push('\n');
        for i in 0..self.rows {
            out.push_str(&EdgeWord::from_index(row_word_len, i).to_string());
            for j in 0..self.cols {
                out.push(',');
                out.push_str(&self.entry(i, j).to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Sum of all entries of a matrix.
pub fn grand_sum(matrix: &CountMatrix) -> BigUint {
    matrix.grand_sum()
}

/// Standard matrix product over unbounded integers.
///
/// When the operands are partition matrices, the right factor stands for
/// a block rotated a quarter turn so that its bottom words meet the left
/// factor's right words index-for-index; the tile table is closed under
/// that rotation, so the product entries count the composed blocks.
pub fn multiply(lhs: &CountMatrix, rhs: &CountMatrix) -> Result<CountMatrix> {
    lhs.multiply(rhs)
}

/// Entrywise square; glues a strip to its mirror image along matching words.
pub fn entrywise_square(matrix: &CountMatrix) -> CountMatrix {
    matrix.entrywise_square()
}

/// Counts of a rows x cols quasimosaic block bucketed by boundary words:
/// 2^cols row indices (bottom word) by 2^rows column indices (right word).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatrix {
    block_rows: usize,
    block_cols: usize,
    matrix: CountMatrix,
}

impl PartitionMatrix {
    /// Block height (the `p` of a (p,q) block).
    pub fn block_rows(&self) -> usize {
        self.block_rows
    }

    /// Block width (the `q` of a (p,q) block).
    pub fn block_cols(&self) -> usize {
        self.block_cols
    }

    pub fn matrix(&self) -> &CountMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CountMatrix {
        self.matrix
    }

    /// Count for one (bottom word, right word) pair.
    pub fn entry(&self, bottom: EdgeWord, right: EdgeWord) -> &BigUint {
        assert_eq!(bottom.len(), self.block_cols, "bottom word length");
        assert_eq!(right.len(), self.block_rows, "right word length");
        self.matrix.entry(bottom.index(), right.index())
    }

    pub fn grand_sum(&self) -> BigUint {
        self.matrix.grand_sum()
    }

    pub fn to_csv(&self) -> String {
        self.matrix.to_csv(self.block_cols, self.block_rows)
    }
}

/// Build the partition matrix of a rows x cols block with the standard
/// tile table.
pub fn partition_matrix(rows: usize, cols: usize) -> Result<PartitionMatrix> {
    partition_matrix_with(
        rows,
        cols,
        &TileSet::standard(),
        DEFAULT_PARTITION_LIMIT,
    )
}

/// One backtracking sweep over the free-boundary block, bucketing each
/// filling by its (bottom, right) words.
pub fn partition_matrix_with(
    rows: usize,
    cols: usize,
    set: &TileSet,
    side_limit: usize,
) -> Result<PartitionMatrix> {
    if rows == 0 || cols == 0 {
        return Err(Error::OutOfDomain {
            what: "partition matrix",
            rows,
            cols,
        });
    }
    if rows > side_limit || cols > side_limit {
        return Err(Error::PartitionLimitExceeded {
            rows,
            cols,
            limit: side_limit,
        });
    }
    let mut matrix = CountMatrix::zeros(1 << cols, 1 << rows);
    let boundary = BoundarySpec::free(rows, cols);
    let signature = |cell: u8| set.tiles()[cell as usize].signature;
    crate::grid::for_each_grid(set, rows, cols, &boundary, &mut |cells| {
        let mut bottom = 0usize;
        for c in 0..cols {
            bottom = bottom << 1 | signature(cells[(rows - 1) * cols + c]).bottom().bit();
        }
        let mut right = 0usize;
        for r in 0..rows {
            right = right << 1 | signature(cells[r * cols + cols - 1]).right().bit();
        }
        *matrix.entry_mut(bottom, right) += 1u32;
    })?;
    Ok(PartitionMatrix {
        block_rows: rows,
        block_cols: cols,
        matrix,
    })
}

/// Knot-mosaic count for boards between 4x4 and 6x6 via block recipes.
///
/// Symmetric in its arguments. Dispatch on the sorted pair:
/// 4x4 doubles the 2x2 block's grand sum; 4x5 and 4x6 multiply in a
/// rotated 1x2 or 2x2 block first; 5x6 and 6x6 square entrywise before
/// summing; 5x5 falls back to counting the 3x3 block directly.
pub fn d_via_partition(rows: usize, cols: usize) -> Result<CountReport> {
    let start = Instant::now();
    let (m, n) = if rows <= cols { (rows, cols) } else { (cols, rows) };
    if !(4..=6).contains(&m) || !(4..=6).contains(&n) {
        return Err(Error::OutOfDomain {
            what: "partition recipe",
            rows,
            cols,
        });
    }
    let value = match (m, n) {
        (4, 4) => partition_matrix(2, 2)?.grand_sum(),
        (4, 5) => {
            let p22 = partition_matrix(2, 2)?;
            let p12 = partition_matrix(1, 2)?;
            p22.matrix().multiply(p12.matrix())?.grand_sum()
        }
        (4, 6) => {
            let p22 = partition_matrix(2, 2)?;
            p22.matrix().multiply(p22.matrix())?.grand_sum()
        }
        (5, 5) => {
            let set = TileSet::standard();
            let options = SearchOptions::new(&set);
            count_constrained_with(3, 3, &BoundarySpec::free(3, 3), &options)?
        }
        (5, 6) => {
            let p22 = partition_matrix(2, 2)?;
            let p12 = partition_matrix(1, 2)?;
            p22.matrix()
                .multiply(p12.matrix())?
                .entrywise_square()
                .grand_sum()
        }
        (6, 6) => {
            let p22 = partition_matrix(2, 2)?;
            p22.matrix()
                .multiply(p22.matrix())?
                .entrywise_square()
                .grand_sum()
        }
        _ => unreachable!("dispatch covers 4 <= m <= n <= 6"),
    };
    Ok(CountReport::new(
        rows,
        cols,
        value * 2u32,
        Method::Partition,
        start.elapsed(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::count_constrained;

    fn matrix_of(rows: &[&[u32]]) -> CountMatrix {
        CountMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigUint::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn partition_matrix_1x2_entries() {
        let p = partition_matrix(1, 2).unwrap();
        let expected = matrix_of(&[&[4, 4], &[4, 10], &[7, 7], &[7, 22]]);
        assert_eq!(p.matrix(), &expected);
        assert_eq!(p.grand_sum(), BigUint::from(65u32));
    }

    #[test]
    fn partition_matrix_2x2_entries() {
        let p = partition_matrix(2, 2).unwrap();
        let expected = matrix_of(&[
            &[22, 22, 43, 43],
            &[22, 55, 43, 139],
            &[43, 43, 109, 64],
            &[43, 139, 64, 403],
        ]);
        assert_eq!(p.matrix(), &expected);
        assert_eq!(p.grand_sum(), BigUint::from(1297u32));
        assert!(p.matrix().is_symmetric());
    }

    #[test]
    fn partition_matrix_1x1_by_direct_tile_listing() {
        // Each entry is just a tile-matching count: a 1x1 block is a tile.
        let p = partition_matrix(1, 1).unwrap();
        let expected = matrix_of(&[&[2, 2], &[2, 5]]);
        assert_eq!(p.matrix(), &expected);
        assert_eq!(p.grand_sum(), BigUint::from(11u32));
        assert!(p.matrix().is_symmetric());
    }

    #[test]
    fn entries_match_independent_constrained_counts() {
        for (rows, cols) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
            let p = partition_matrix(rows, cols).unwrap();
            for bottom in EdgeWord::enumerate(cols) {
                for right in EdgeWord::enumerate(rows) {
                    let boundary = BoundarySpec::free(rows, cols)
                        .with_bottom_word(bottom)
                        .with_right_word(right);
                    let direct = count_constrained(rows, cols, &boundary).unwrap();
                    assert_eq!(
                        p.entry(bottom, right),
                        &direct,
                        "block {rows}x{cols}, bottom {bottom}, right {right}"
                    );
                }
            }
        }
    }

    #[test]
    fn products_match_direct_counts_of_wider_blocks() {
        let p22 = partition_matrix(2, 2).unwrap();
        let p12 = partition_matrix(1, 2).unwrap();
        let q23 = p22.matrix().multiply(p12.matrix()).unwrap();
        assert_eq!(
            q23.grand_sum(),
            count_constrained(2, 3, &BoundarySpec::free(2, 3)).unwrap()
        );
        let q24 = p22.matrix().multiply(p22.matrix()).unwrap();
        assert_eq!(
            q24.grand_sum(),
            count_constrained(2, 4, &BoundarySpec::free(2, 4)).unwrap()
        );
    }

    #[test]
    fn identity_product_is_a_no_op() {
        let p12 = partition_matrix(1, 2).unwrap();
        let id = CountMatrix::identity(4);
        assert_eq!(&id.multiply(p12.matrix()).unwrap(), p12.matrix());
    }

    #[test]
    fn entrywise_square_of_zero_matrix() {
        let z = CountMatrix::zeros(3, 2);
        assert_eq!(z.entrywise_square(), z);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let p12 = partition_matrix(1, 2).unwrap();
        let err = p12.matrix().multiply(p12.matrix()).unwrap_err();
        assert_eq!(
            err,
            Error::ShapeMismatch {
                lhs_rows: 4,
                lhs_cols: 2,
                rhs_rows: 4,
                rhs_cols: 2
            }
        );
    }

    #[test]
    fn oversized_partition_requests_are_guarded() {
        assert_eq!(
            partition_matrix(4, 2).unwrap_err(),
            Error::PartitionLimitExceeded {
                rows: 4,
                cols: 2,
                limit: DEFAULT_PARTITION_LIMIT
            }
        );
    }

    #[test]
    fn d_table_via_partition() {
        let cases = [
            (4usize, 4usize, 2_594u64),
            (4, 5, 54_226),
            (4, 6, 1_144_526),
            (5, 5, 4_183_954),
            (5, 6, 331_745_962),
            (6, 6, 101_393_411_126),
            (5, 4, 54_226),
            (6, 5, 331_745_962),
        ];
        for (rows, cols, expected) in cases {
            let report = d_via_partition(rows, cols).unwrap();
            assert_eq!(report.value, BigUint::from(expected), "{rows}x{cols}");
            assert_eq!(report.method, Method::Partition);
        }
        assert!(d_via_partition(3, 5).is_err());
        assert!(d_via_partition(6, 7).is_err());
    }

    #[test]
    fn recipe_grand_sums_halved_from_the_table() {
        let p22 = partition_matrix(2, 2).unwrap();
        let p12 = partition_matrix(1, 2).unwrap();
        let q23 = p22.matrix().multiply(p12.matrix()).unwrap();
        assert_eq!(q23.grand_sum(), BigUint::from(27_113u32));
        let q24 = p22.matrix().multiply(p22.matrix()).unwrap();
        assert_eq!(q24.grand_sum(), BigUint::from(572_263u32));
        assert_eq!(
            q23.entrywise_square().grand_sum(),
            BigUint::from(165_872_981u32)
        );
        assert_eq!(
            q24.entrywise_square().grand_sum(),
            BigUint::from(50_696_705_563u64)
        );
    }

    #[test]
    fn csv_layout_is_word_labelled() {
        let p = partition_matrix(1, 2).unwrap();
        let csv = p.to_csv();
        let expected = ",x,o\nxx,4,4\nxo,4,10\nox,7,7\noo,7,22\n";
        assert_eq!(csv, expected);
    }
}
