//! Self-verification: every headline count recomputed from scratch and
//! compared against its frozen expected value, plus the structural
//! properties the counting relies on. The CLI `verify` subcommand and the
//! acceptance test suite both run these checks.

use std::fmt::Debug;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::grid::{
    count_constrained, count_constrained_with, enumerate_constrained, is_knot_mosaic,
    q33_center_class_counts, twofold_extensions, type_counts, BoundarySpec, SearchOptions,
};
use crate::partition::{d_via_partition, partition_matrix};
use crate::tiles::{Signature, TileSet};
use crate::transfer::{bounds, closed_form_d, column_transfer_matrix, knot_count_transfer};

/// Result of one verification check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
    pub elapsed: Duration,
}

/// The known table of knot-mosaic counts for four to six rows and columns.
pub const D_TABLE: [(usize, usize, u64); 6] = [
    (4, 4, 2_594),
    (4, 5, 54_226),
    (4, 6, 1_144_526),
    (5, 5, 4_183_954),
    (5, 6, 331_745_962),
    (6, 6, 101_393_411_126),
];

struct Check {
    name: &'static str,
    start: Instant,
    comparisons: usize,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            start: Instant::now(),
            comparisons: 0,
            failures: Vec::new(),
        }
    }

    fn expect_eq<T: PartialEq + Debug>(&mut self, label: &str, got: T, want: T) {
        self.comparisons += 1;
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }

    fn expect(&mut self, label: &str, condition: bool) {
        self.comparisons += 1;
        if !condition {
            self.failures.push(label.to_string());
        }
    }

    fn finish(self) -> CheckOutcome {
        let passed = self.failures.is_empty();
        let details = if passed {
            format!("{} comparisons", self.comparisons)
        } else {
            let mut shown = self.failures;
            let extra = shown.len().saturating_sub(5);
            shown.truncate(5);
            let mut details = shown.join("; ");
            if extra > 0 {
                details.push_str(&format!("; and {extra} more"));
            }
            details
        };
        CheckOutcome {
            name: self.name,
            passed,
            details,
            elapsed: self.start.elapsed(),
        }
    }
}

/// Run every check; `workers` threads are used where a search splits.
pub fn run_all_checks(workers: usize) -> Vec<CheckOutcome> {
    vec![
        check_d_table(),
        check_transfer_agreement(),
        check_block_matrices(),
        check_center_classes(),
        check_twofold_rule(),
        check_growth_bounds(),
        check_structural_properties(workers),
    ]
}

/// 1: the partition recipes reproduce the full count table exactly.
pub fn check_d_table() -> CheckOutcome {
    let mut check = Check::new("count table via partition recipes");
    for (rows, cols, expected) in D_TABLE {
        match d_via_partition(rows, cols) {
            Ok(report) => check.expect_eq(
                &format!("D({rows},{cols})"),
                report.value,
                BigUint::from(expected),
            ),
            Err(e) => check.expect(&format!("D({rows},{cols}) failed: {e}"), false),
        }
    }
    check.finish()
}

/// 2: the transfer route agrees with the table, the closed forms, and
/// direct backtracking.
pub fn check_transfer_agreement() -> CheckOutcome {
    let mut check = Check::new("transfer-matrix agreement");
    for (rows, cols, expected) in D_TABLE {
        match knot_count_transfer(rows, cols) {
            Ok(report) => check.expect_eq(
                &format!("transfer D({rows},{cols})"),
                report.value,
                BigUint::from(expected),
            ),
            Err(e) => check.expect(&format!("transfer D({rows},{cols}) failed: {e}"), false),
        }
    }
    for rows in 1..=3usize {
        for cols in rows..=10 {
            let closed = closed_form_d(rows, cols).unwrap();
            let transfer = knot_count_transfer(rows, cols).unwrap().value;
            check.expect_eq(&format!("closed form D({rows},{cols})"), transfer, closed);
        }
    }
    for rows in 1..=4usize {
        for cols in 1..=4usize {
            let boundary = BoundarySpec::all_x(rows, cols);
            let direct = count_constrained(rows, cols, &boundary).unwrap();
            let transfer = knot_count_transfer(rows, cols).unwrap().value;
            check.expect_eq(&format!("backtracking D({rows},{cols})"), transfer, direct);
        }
    }
    check.finish()
}

/// 3: the small partition matrices and the nine shape counts are exact.
pub fn check_block_matrices() -> CheckOutcome {
    let mut check = Check::new("block matrices and shape counts");
    let p12 = partition_matrix(1, 2).unwrap();
    let expected_12: [[u64; 2]; 4] = [[4, 4], [4, 10], [7, 7], [7, 22]];
    for (i, row) in expected_12.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            check.expect_eq(
                &format!("1x2 block entry ({i},{j})"),
                p12.matrix().entry(i, j).clone(),
                BigUint::from(want),
            );
        }
    }
    let p22 = partition_matrix(2, 2).unwrap();
    let expected_22: [[u64; 4]; 4] = [
        [22, 22, 43, 43],
        [22, 55, 43, 139],
        [43, 43, 109, 64],
        [43, 139, 64, 403],
    ];
    for (i, row) in expected_22.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            check.expect_eq(
                &format!("2x2 block entry ({i},{j})"),
                p22.matrix().entry(i, j).clone(),
                BigUint::from(want),
            );
        }
    }
    check.expect_eq(
        "nine shape counts",
        type_counts(),
        [2, 5, 4, 7, 10, 22, 11, 32, 98],
    );
    check.finish()
}

/// 4: the 3x3 centre-word class split and its doubled total.
pub fn check_center_classes() -> CheckOutcome {
    let mut check = Check::new("3x3 centre-word classes");
    let classes = q33_center_class_counts();
    check.expect_eq("all-x class", classes.all_x.clone(), BigUint::from(14_641u32));
    check.expect_eq(
        "opposite-pair class",
        classes.opposite.clone(),
        BigUint::from(143_648u32),
    );
    check.expect_eq(
        "adjacent-pair class",
        classes.adjacent.clone(),
        BigUint::from(297_880u32),
    );
    check.expect_eq("all-o class", classes.all_o.clone(), BigUint::from(1_635_808u32));
    check.expect_eq("class total", classes.total(), BigUint::from(2_091_977u32));
    check.expect_eq(
        "doubled total",
        classes.total() * 2u32,
        BigUint::from(4_183_954u32),
    );
    check.finish()
}

/// 5: every small quasimosaic extends to exactly two knot mosaics.
pub fn check_twofold_rule() -> CheckOutcome {
    let mut check = Check::new("twofold boundary extension");
    for (rows, cols, population) in [(1usize, 1usize, 11usize), (1, 2, 65), (2, 2, 1297)] {
        let grids = enumerate_constrained(rows, cols, &BoundarySpec::free(rows, cols)).unwrap();
        check.expect_eq(
            &format!("{rows}x{cols} quasimosaic population"),
            grids.len(),
            population,
        );
        for grid in &grids {
            let extensions = twofold_extensions(grid).unwrap();
            if extensions.len() != 2 {
                check.expect(
                    &format!("{rows}x{cols} block with {} extensions", extensions.len()),
                    false,
                );
                continue;
            }
            check.expect(
                &format!("{rows}x{cols} extensions are knot mosaics with the block centred"),
                extensions.iter().all(|ext| {
                    is_knot_mosaic(ext)
                        && (0..rows).all(|r| {
                            (0..cols).all(|c| ext.get(r + 1, c + 1) == grid.get(r, c))
                        })
                }),
            );
        }
    }
    check.finish()
}

/// 6: the exact-rational growth bounds bracket every transfer count.
pub fn check_growth_bounds() -> CheckOutcome {
    let mut check = Check::new("growth bounds");
    for rows in 3..=8usize {
        let transfer = column_transfer_matrix(rows).unwrap();
        for cols in 3..=8usize {
            let (lower, upper) = bounds(rows, cols).unwrap();
            let value = BigRational::from_integer(BigInt::from(transfer.knot_count(cols)));
            check.expect(
                &format!("bounds bracket D({rows},{cols})"),
                lower <= value && value <= upper,
            );
        }
    }
    check.finish()
}

/// 7: structural properties — signature multiplicities, boundary parity,
/// block symmetry, count symmetry, and determinism of the search.
pub fn check_structural_properties(workers: usize) -> CheckOutcome {
    let mut check = Check::new("structural properties");

    let set = TileSet::standard();
    for index in 0..16usize {
        let sig = Signature::from_index(index);
        let expected = match sig.connection_count() {
            0 | 2 => 1,
            4 => 4,
            _ => 0,
        };
        check.expect_eq(
            &format!("multiplicity of signature {}", sig.word()),
            set.multiplicity(sig),
            expected,
        );
    }

    for (rows, cols) in [(1usize, 1usize), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2), (1, 4), (4, 1)]
    {
        let grids = enumerate_constrained(rows, cols, &BoundarySpec::free(rows, cols)).unwrap();
        check.expect(
            &format!("even boundary parity on all {rows}x{cols} blocks"),
            grids.iter().all(|g| {
                let total: u32 = g
                    .boundary_words(&set)
                    .iter()
                    .map(|w| w.connection_count())
                    .sum();
                total % 2 == 0
            }),
        );
    }

    check.expect(
        "2x2 block matrix is symmetric",
        partition_matrix(2, 2).unwrap().matrix().is_symmetric(),
    );

    let transfers: Vec<_> = (1..=8usize)
        .map(|rows| column_transfer_matrix(rows).unwrap())
        .collect();
    for rows in 1..=8usize {
        for cols in rows..=8 {
            let forward = transfers[rows - 1].knot_count(cols);
            let backward = transfers[cols - 1].knot_count(rows);
            check.expect_eq(&format!("D({rows},{cols}) = D({cols},{rows})"), forward, backward);
        }
    }

    let boundary = BoundarySpec::free(2, 3);
    let baseline = count_constrained(2, 3, &boundary).unwrap();
    let column_major: Vec<(usize, usize)> =
        (0..3).flat_map(|c| (0..2).map(move |r| (r, c))).collect();
    let options = SearchOptions::new(&set).visit_order(column_major);
    check.expect_eq(
        "count is independent of visit order",
        count_constrained_with(2, 3, &boundary, &options).unwrap(),
        baseline.clone(),
    );
    for workers in [workers.max(2), 5] {
        let options = SearchOptions::new(&set).workers(workers);
        check.expect_eq(
            &format!("count is independent of worker count ({workers})"),
            count_constrained_with(2, 3, &boundary, &options).unwrap(),
            baseline.clone(),
        );
    }

    check.finish()
}
