//! Acceptance suite: one test per verification criterion. Each prints a
//! pass/fail line (visible with `--nocapture`) and re-asserts the headline
//! values directly, independent of the check plumbing.

use std::time::Duration;

use num_bigint::BigUint;
use knot_mosaic::verify::{self, CheckOutcome};
use knot_mosaic::{d_via_partition, knot_count_transfer, partition_matrix, q33_center_class_counts};

fn report(outcome: &CheckOutcome) {
    println!(
        "{} — {} ({:.2?}): {}",
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.name,
        outcome.elapsed,
        outcome.details
    );
    assert!(outcome.passed, "{}: {}", outcome.name, outcome.details);
}

fn within(outcome: &CheckOutcome, budget: Duration) {
    assert!(
        outcome.elapsed < budget,
        "{} took {:.2?}, budget {:.2?}",
        outcome.name,
        outcome.elapsed,
        budget
    );
}

#[test]
fn criterion_1_count_table_reproduction() {
    let outcome = verify::check_d_table();
    report(&outcome);
    within(&outcome, Duration::from_secs(10));
    assert_eq!(
        d_via_partition(6, 6).unwrap().value,
        BigUint::from(101_393_411_126u64)
    );
    assert_eq!(
        d_via_partition(5, 4).unwrap().value,
        BigUint::from(54_226u32)
    );
}

#[test]
fn criterion_2_transfer_oracle_agreement() {
    let outcome = verify::check_transfer_agreement();
    report(&outcome);
    within(&outcome, Duration::from_secs(30));
    assert_eq!(
        knot_count_transfer(6, 6).unwrap().value,
        BigUint::from(101_393_411_126u64)
    );
    assert_eq!(knot_count_transfer(2, 7).unwrap().value, BigUint::from(64u32));
}

#[test]
fn criterion_3_block_matrix_reproduction() {
    let outcome = verify::check_block_matrices();
    report(&outcome);
    let p12 = partition_matrix(1, 2).unwrap();
    assert_eq!(p12.grand_sum(), BigUint::from(65u32));
    let p22 = partition_matrix(2, 2).unwrap();
    assert_eq!(p22.grand_sum(), BigUint::from(1_297u32));
}

#[test]
fn criterion_4_center_word_case_split() {
    let outcome = verify::check_center_classes();
    report(&outcome);
    within(&outcome, Duration::from_secs(5));
    let classes = q33_center_class_counts();
    assert_eq!(classes.total(), BigUint::from(2_091_977u32));
}

#[test]
fn criterion_5_twofold_extension_rule() {
    let outcome = verify::check_twofold_rule();
    report(&outcome);
    within(&outcome, Duration::from_secs(60));
}

#[test]
fn criterion_6_growth_bounds() {
    let outcome = verify::check_growth_bounds();
    report(&outcome);
    within(&outcome, Duration::from_secs(30));
}

#[test]
fn criterion_7_structural_properties() {
    let outcome = verify::check_structural_properties(4);
    report(&outcome);
    within(&outcome, Duration::from_secs(30));
}
