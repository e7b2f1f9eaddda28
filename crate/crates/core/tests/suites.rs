use std::time::Instant;

use stratquant_core::checks::{run_suite, CheckOptions, Suite};

fn run(suite: Suite) {
    let t = Instant::now();
    let report = run_suite(suite, &CheckOptions::default());
    for p in &report.properties {
        println!("{p}");
    }
    println!("{} suite: {:.2?}", suite.name(), t.elapsed());
    assert!(report.passed, "{} suite failed", suite.name());
}

#[test]
fn poisson_suite() {
    run(Suite::Poisson);
}

#[test]
fn lierinehart_suite() {
    run(Suite::LieRinehart);
}

#[test]
fn reduction_suite() {
    run(Suite::Reduction);
}

#[test]
fn fock_suite() {
    run(Suite::Fock);
}

#[test]
fn repcount_suite() {
    run(Suite::Repcount);
}
