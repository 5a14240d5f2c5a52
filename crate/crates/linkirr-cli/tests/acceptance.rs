//! Acceptance suite: runs every check of the built-in battery (the same
//! code behind `linkirr verify-paper`) and prints one pass/fail line per
//! criterion. Each criterion asserts its frozen exact expectations; elapsed
//! time is printed for the record. The order-12 search (c5) carries the only
//! runtime contract: on budget overrun it degrades to the documented
//! reduced check and reports that, rather than failing silently.

use linkirr::verify::run_check;

fn run(id: &str) {
    let outcome = run_check(id).expect("known check id");
    println!("{}", outcome.render());
    assert!(outcome.passed, "{}", outcome.render());
}

#[test]
fn c1_catalog_counts() {
    run("c1");
}

#[test]
fn c2_small_order_hits() {
    run("c2");
}

#[test]
fn c3_no_small_regular() {
    run("c3");
}

#[test]
fn c4_counterexample_verification() {
    run("c4");
}

#[test]
fn c5_order12_regular_search() {
    run("c5");
}

#[test]
fn c6_planarity_suite() {
    run("c6");
}

#[test]
fn c7_edge_bound_sweep() {
    run("c7");
}

#[test]
fn c8_structural_theorems() {
    run("c8");
}

#[test]
fn c9_formula_spot_checks() {
    run("c9");
}

#[test]
fn c10_property_suites() {
    run("c10");
}
