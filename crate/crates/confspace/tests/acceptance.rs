//! The acceptance suite: one test per criterion, each printing its
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! or via `confspace verify all`.

use confspace::acceptance::run_criterion;

fn check(id: usize) {
    let outcome = run_criterion(id);
    println!("{}", outcome.line());
    assert!(outcome.pass, "{}", outcome.line());
}

#[test]
fn criterion_01_dual_basis_unimodularity() {
    check(1);
}

#[test]
fn criterion_02_pairing_oracle_agreement() {
    check(2);
}

#[test]
fn criterion_03_length_recursion() {
    check(3);
}

#[test]
fn criterion_04_perpendicular_threshold() {
    check(4);
}

#[test]
fn criterion_05_kernel_ladder_n4() {
    check(5);
}

#[test]
fn criterion_06_balance_witnesses() {
    check(6);
}

#[test]
fn criterion_07_balance_nonexistence_evidence() {
    check(7);
}

#[test]
fn criterion_08_packing_bound() {
    check(8);
}

#[test]
fn criterion_09_trap_certification() {
    check(9);
}

#[test]
fn criterion_10_construction_validity() {
    check(10);
}
