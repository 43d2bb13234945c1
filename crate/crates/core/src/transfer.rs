//! Column transfer-matrix counting: an independent route to knot-mosaic
//! counts for arbitrary board sizes, plus closed forms for one to three
//! rows and exact-rational growth bounds.
//!
//! The transfer matrix for `m` rows is indexed by cut words: the marks on
//! the `m` vertical edges along one column boundary, top row first (most
//! significant). An entry counts the ways to fill a single column of `m`
//! tiles whose left edges realise the row word and right edges the column
//! word, with the column's outer top and bottom edges blank; each distinct
//! tile counts separately, so the four-point signature contributes
//! multiplicity four. The all-x entry of the matrix's n-th power is then
//! the number of knot mosaics with `m` rows and `n` columns.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::CountMatrix;
use crate::report::{CountReport, Method};
use crate::tiles::{Signature, TileSet};
use crate::word::EdgeState;

/// Default cap on the row count; the matrix has 4^rows entries.
pub const DEFAULT_TRANSFER_LIMIT: usize = 12;

/// Column-to-column counting operator over cut words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    rows_per_column: usize,
    matrix: CountMatrix,
}

impl TransferMatrix {
    /// Number of tile rows in the column this matrix transfers across.
    pub fn rows_per_column(&self) -> usize {
        self.rows_per_column
    }

    pub fn matrix(&self) -> &CountMatrix {
        &self.matrix
    }

    /// Count for one (left cut word, right cut word) pair of indices.
    pub fn entry(&self, left: usize, right: usize) -> &BigUint {
        self.matrix.entry(left, right)
    }

    /// All-x entry of this matrix's `cols`-th power, taken by streaming a
    /// row vector through the matrix `cols` times.
    pub fn knot_count(&self, cols: usize) -> BigUint {
        let size = 1usize << self.rows_per_column;
        let mut vector = vec![BigUint::zero(); size];
        vector[0] = BigUint::one();
        for _ in 0..cols {
            let mut next = vec![BigUint::zero(); size];
            for (i, weight) in vector.iter().enumerate() {
                if weight.is_zero() {
                    continue;
                }
                for (j, slot) in next.iter_mut().enumerate() {
                    let entry = self.entry(i, j);
                    if !entry.is_zero() {
                        *slot += weight * entry;
                    }
                }
            }
            vector = next;
        }
        vector.swap_remove(0)
    }

    pub fn to_csv(&self) -> String {
        self.matrix
            .to_csv(self.rows_per_column, self.rows_per_column)
    }
}

/// Ways to fill one column of `rows` tiles with the given left/right cut
/// words and blank outer top and bottom edges. A walk down the column
/// carries only the pending horizontal edge mark.
fn column_ways(set: &TileSet, rows: usize, left: usize, right: usize) -> u64 {
    let mut ways = [1u64, 0u64];
    for i in 0..rows {
        let l = EdgeState::from_bit(left >> (rows - 1 - i));
        let r = EdgeState::from_bit(right >> (rows - 1 - i));
        let mut next = [0u64; 2];
        for (h_in, &count) in ways.iter().enumerate() {
            if count == 0 {
                continue;
            }
            for h_out in 0..2 {
                let sig = Signature::new(
                    EdgeState::from_bit(h_in),
                    EdgeState::from_bit(h_out),
                    l,
                    r,
                );
                let mult = set.multiplicity(sig) as u64;
                if mult > 0 {
                    next[h_out] += count * mult;
                }
            }
        }
        ways = next;
    }
    ways[0]
}

/// Build the transfer matrix for boards with `rows` tile rows.
pub fn column_transfer_matrix(rows: usize) -> Result<TransferMatrix> {
    column_transfer_matrix_with(rows, &TileSet::standard(), DEFAULT_TRANSFER_LIMIT)
}

pub fn column_transfer_matrix_with(
    rows: usize,
    set: &TileSet,
    row_limit: usize,
) -> Result<TransferMatrix> {
    if rows == 0 {
        return Err(Error::OutOfDomain {
            what: "transfer matrix",
            rows,
            cols: 0,
        });
    }
    if rows > row_limit {
        return Err(Error::TransferLimitExceeded {
            rows,
            limit: row_limit,
        });
    }
    let size = 1usize << rows;
    let mut matrix = CountMatrix::zeros(size, size);
    for left in 0..size {
        for right in 0..size {
            let ways = column_ways(set, rows, left, right);
            if ways > 0 {
                *matrix.entry_mut(left, right) = BigUint::from(ways);
            }
        }
    }
    Ok(TransferMatrix {
        rows_per_column: rows,
        matrix,
    })
}

/// Knot-mosaic count via the transfer matrix: the all-x entry of the
/// matrix's `cols`-th power, taken by streaming a row vector through the
/// matrix `cols` times.
pub fn knot_count_transfer(rows: usize, cols: usize) -> Result<CountReport> {
    knot_count_transfer_with(rows, cols, &TileSet::standard(), DEFAULT_TRANSFER_LIMIT)
}

pub fn knot_count_transfer_with(
    rows: usize,
    cols: usize,
    set: &TileSet,
    row_limit: usize,
) -> Result<CountReport> {
    if cols == 0 {
        return Err(Error::OutOfDomain {
            what: "transfer count",
            rows,
            cols,
        });
    }
    let start = Instant::now();
    let transfer = column_transfer_matrix_with(rows, set, row_limit)?;
    let value = transfer.knot_count(cols);
    Ok(CountReport::new(
        rows,
        cols,
        value,
        Method::Transfer,
        start.elapsed(),
    ))
}

/// Closed-form knot-mosaic counts for one, two, or three rows:
/// 1 for a single row; 2^(n-1) for two rows of n >= 2 columns;
/// (2/5)(9*6^(n-2) + 1) for three rows of n >= 3 columns.
pub fn closed_form_d(rows: usize, cols: usize) -> Result<BigUint> {
    let out_of_domain = Error::OutOfDomain {
        what: "closed form",
        rows,
        cols,
    };
    match rows {
        1 if cols >= 1 => Ok(BigUint::one()),
        2 if cols >= 2 => Ok(BigUint::one() << (cols - 1)),
        3 if cols >= 3 => {
            let term = BigUint::from(9u32) * BigUint::from(6u32).pow(cols as u32 - 2)
                + BigUint::one();
            let doubled = term * 2u32;
            debug_assert!((&doubled % 5u32).is_zero(), "expression divides by 5");
            Ok(doubled / 5u32)
        }
        _ => Err(out_of_domain),
    }
}

/// Exact-rational lower and upper bounds on the knot-mosaic count of a
/// board with at least three rows and columns:
///
/// ```text
/// lower = 2^((m-3)(n-3)) * (2/275) (9*6^(m-2)+1) (9*6^(n-2)+1)
/// upper = (22/5)^((m-3)(n-3)) * the same factor
/// ```
pub fn bounds(rows: usize, cols: usize) -> Result<(BigRational, BigRational)> {
    if rows < 3 || cols < 3 {
        return Err(Error::OutOfDomain {
            what: "bounds",
            rows,
            cols,
        });
    }
    let exponent = ((rows - 3) * (cols - 3)) as u32;
    let side = |k: usize| {
        BigInt::from(9) * BigInt::from(6).pow(k as u32 - 2) + BigInt::one()
    };
    let shared = BigInt::from(2) * side(rows) * side(cols);
    let lower = BigRational::new(
        BigInt::from(2).pow(exponent) * &shared,
        BigInt::from(275),
    );
    let upper = BigRational::new(
        BigInt::from(22).pow(exponent) * shared,
        BigInt::from(275) * BigInt::from(5).pow(exponent),
    );
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiles::TileId;
    use crate::word::EdgeWord;

    /// Brute-force oracle: enumerate all tile tuples for one column and
    /// check each edge directly. Independent of the walk in `column_ways`.
    fn brute_force_column_matrix(set: &TileSet, rows: usize) -> CountMatrix {
        let size = 1usize << rows;
        let mut matrix = CountMatrix::zeros(size, size);
        let mut column = vec![TileId::T0; rows];
        fn fill(
            set: &TileSet,
            column: &mut Vec<TileId>,
            depth: usize,
            matrix: &mut CountMatrix,
        ) {
            let rows = column.len();
            if depth == rows {
                let mut ok = column
                    .first()
                    .map(|&t| set.signature(t).top() == EdgeState::X)
                    .unwrap_or(false);
                ok &= set.signature(column[rows - 1]).bottom() == EdgeState::X;
                for i in 0..rows.saturating_sub(1) {
                    ok &= set.signature(column[i]).bottom()
                        == set.signature(column[i + 1]).top();
                }
                if ok {
                    let mut left = 0usize;
                    let mut right = 0usize;
                    for &t in column.iter() {
                        left = left << 1 | set.signature(t).left().bit();
                        right = right << 1 | set.signature(t).right().bit();
                    }
                    *matrix.entry_mut(left, right) += 1u32;
                }
                return;
            }
            for t in TileId::ALL {
                column[depth] = t;
                fill(set, column, depth + 1, matrix);
            }
        }
        fill(set, &mut column, 0, &mut matrix);
        matrix
    }

    #[test]
    fn matches_brute_force_for_small_columns() {
        let set = TileSet::standard();
        for rows in 1..=3 {
            let dp = column_transfer_matrix(rows).unwrap();
            let brute = brute_force_column_matrix(&set, rows);
            assert_eq!(dp.matrix(), &brute, "{rows} rows");
        }
    }

    #[test]
    fn one_row_matrix_is_identity() {
        let t = column_transfer_matrix(1).unwrap();
        assert_eq!(t.matrix(), &CountMatrix::identity(2));
    }

    #[test]
    fn two_row_matrix_all_x_row() {
        let t = column_transfer_matrix(2).unwrap();
        let row: Vec<u32> = (0..4)
            .map(|j| t.entry(0, j).try_into().unwrap())
            .collect();
        assert_eq!(row, [1, 0, 0, 1]);
    }

    #[test]
    fn odd_parity_entries_vanish() {
        for rows in 1..=4 {
            let t = column_transfer_matrix(rows).unwrap();
            for left in 0..1usize << rows {
                for right in 0..1usize << rows {
                    if (left.count_ones() + right.count_ones()) % 2 == 1 {
                        assert!(t.entry(left, right).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_is_symmetric() {
        for rows in 1..=5 {
            assert!(column_transfer_matrix(rows).unwrap().matrix().is_symmetric());
        }
    }

    #[test]
    fn transfer_counts_match_known_values() {
        let cases: [(usize, usize, u64); 7] = [
            (1, 1, 1),
            (2, 2, 2),
            (3, 3, 22),
            (2, 7, 64),
            (3, 7, 27_994),
            (4, 4, 2_594),
            (6, 6, 101_393_411_126),
        ];
        for (rows, cols, expected) in cases {
            let report = knot_count_transfer(rows, cols).unwrap();
            assert_eq!(report.value, BigUint::from(expected), "{rows}x{cols}");
            assert_eq!(report.method, Method::Transfer);
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_d(1, 100).unwrap(), BigUint::one());
        assert_eq!(closed_form_d(2, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(closed_form_d(2, 7).unwrap(), BigUint::from(64u32));
        assert_eq!(closed_form_d(3, 3).unwrap(), BigUint::from(22u32));
        assert_eq!(closed_form_d(3, 4).unwrap(), BigUint::from(130u32));
        assert_eq!(closed_form_d(3, 7).unwrap(), BigUint::from(27_994u32));
        for (rows, cols) in [(2, 1), (3, 2), (4, 4), (0, 5)] {
            assert!(closed_form_d(rows, cols).is_err(), "{rows}x{cols}");
        }
    }

    #[test]
    fn closed_form_agrees_with_transfer() {
        for rows in 1..=3 {
            for cols in rows..=10 {
                assert_eq!(
                    closed_form_d(rows, cols).unwrap(),
                    knot_count_transfer(rows, cols).unwrap().value,
                    "{rows}x{cols}"
                );
            }
        }
    }

    #[test]
    fn bounds_collapse_at_3x3() {
        let (lower, upper) = bounds(3, 3).unwrap();
        let exact = BigRational::from_integer(BigInt::from(22));
        assert_eq!(lower, exact);
        assert_eq!(upper, exact);
    }

    #[test]
    fn bounds_bracket_4x4() {
        let (lower, upper) = bounds(4, 4).unwrap();
        assert_eq!(
            lower,
            BigRational::new(BigInt::from(16_900), BigInt::from(11))
        );
        assert_eq!(upper, BigRational::from_integer(BigInt::from(3_380)));
        let d44 = BigRational::from_integer(BigInt::from(2_594));
        assert!(lower <= d44 && d44 <= upper);
    }

    #[test]
    fn bounds_bracket_6x6() {
        let (lower, upper) = bounds(6, 6).unwrap();
        let d66 = BigRational::from_integer(BigInt::from(101_393_411_126u64));
        assert!(lower <= d66 && d66 <= upper);
        assert!(bounds(2, 5).is_err());
    }

    #[test]
    fn oversized_transfer_requests_are_guarded() {
        assert_eq!(
            column_transfer_matrix(13).unwrap_err(),
            Error::TransferLimitExceeded {
                rows: 13,
                limit: DEFAULT_TRANSFER_LIMIT
            }
        );
    }

    #[test]
    fn csv_labels_use_cut_words() {
        let t = column_transfer_matrix(1).unwrap();
        assert_eq!(t.to_csv(), ",x,o\nx,1,0\no,0,1\n");
    }

    #[test]
    fn two_row_entries_match_hand_enumeration() {
        // xo -> oo: the lower tile would need three connection points.
        // ox -> xo: forced pair of arcs, exactly one filling.
        let t = column_transfer_matrix(2).unwrap();
        let xo = EdgeWord::from_states(&[EdgeState::X, EdgeState::O]).index();
        let oo = EdgeWord::from_states(&[EdgeState::O, EdgeState::O]).index();
        assert!(t.entry(xo, oo).is_zero());
        let ox = EdgeWord::from_states(&[EdgeState::O, EdgeState::X]).index();
        assert_eq!(u32::try_from(t.entry(ox, xo)).unwrap(), 1);
    }
}
