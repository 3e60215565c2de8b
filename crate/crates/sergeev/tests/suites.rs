//! Drives the named verification suites through the library entry point at
//! their natural desk scales.

use sergeev::graded::AlgebraConfig;
use sergeev::scalar;
use sergeev::suites::{run_suite, SUITE_NAMES};

const GUARD: usize = 5000;

fn expect_pass(name: &str, d: usize, l: usize) {
    let cfg = AlgebraConfig::power(d, l);
    let report = run_suite(name, &cfg, 1, GUARD).unwrap();
    assert!(
        report.pass,
        "suite {name} failed at (d,l) = ({d},{l}): {:?}",
        report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| &c.name)
            .collect::<Vec<_>>()
    );
}

#[test]
fn signs_suite() {
    expect_pass("signs", 4, 3);
}

#[test]
fn hpoly_suite_up_to_five_strands() {
    expect_pass("hpoly", 4, 2);
    expect_pass("hpoly", 5, 3);
}

#[test]
fn xcycles_suite() {
    expect_pass("xcycles", 4, 3);
    expect_pass("xcycles", 3, 2);
}

#[test]
fn cxcycles_suite_even_level() {
    // odd level carries the two known example defects; even level is clean
    expect_pass("cxcycles", 4, 2);
}

#[test]
fn oddskew_suite() {
    expect_pass("oddskew", 4, 3);
    expect_pass("oddskew", 4, 2);
}

#[test]
fn jm_suite_even_level() {
    expect_pass("jm", 3, 2);
}

#[test]
fn zbasis_and_mbasis_suites() {
    expect_pass("zbasis", 2, 3);
    expect_pass("mbasis", 2, 3);
    expect_pass("zbasis", 3, 1);
}

#[test]
fn main_theorem_suite_with_nontrivial_f() {
    let cfg = AlgebraConfig::new(
        2,
        3,
        vec![scalar::one(), scalar::zero(), scalar::from_int(1), scalar::zero()],
    )
    .unwrap();
    let report = run_suite("main-theorem", &cfg, 1, GUARD).unwrap();
    assert!(report.pass);
}

#[test]
fn unknown_suite_is_rejected() {
    let cfg = AlgebraConfig::power(2, 2);
    assert!(run_suite("bogus", &cfg, 1, GUARD).is_err());
    assert!(SUITE_NAMES.contains(&"all"));
}

#[test]
fn all_suite_aggregates() {
    let cfg = AlgebraConfig::power(2, 2);
    let report = run_suite("all", &cfg, 1, GUARD).unwrap();
    assert!(report.pass);
    assert!(report.checks.len() > 20);
}
