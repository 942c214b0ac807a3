//! Acceptance run: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`) and failing with the report on mismatch.

use kr_crystals::verify::{self, Options, Report};
use std::sync::OnceLock;
use std::time::Instant;

fn opts() -> &'static Options {
    static OPTS: OnceLock<Options> = OnceLock::new();
    OPTS.get_or_init(Options::default)
}

fn criterion(number: usize, name: &str, f: impl FnOnce(&Options) -> Report) {
    let start = Instant::now();
    let report = f(opts());
    let cases: usize = report.checks.iter().map(|c| c.cases).sum();
    println!(
        "criterion {:2} {}: {} ({} checks, {} cases, {:.1}s)",
        number,
        name,
        if report.passed { "PASS" } else { "FAIL" },
        report.checks.len(),
        cases,
        start.elapsed().as_secs_f64()
    );
    assert!(report.checks.iter().all(|c| c.cases > 0), "criterion {} has an empty check", number);
    assert!(report.passed, "criterion {} failed:\n{}", number, report.to_text());
}

#[test]
fn criterion_01_classical_decomposition() {
    criterion(1, "classical decomposition", verify::classical_suite);
}

#[test]
fn criterion_02_coenergy_formula() {
    criterion(2, "coenergy formula", verify::coenergy_suite);
}

#[test]
fn criterion_03_decomposition_identity() {
    criterion(3, "decomposition identity", verify::decomposition_suite);
}

#[test]
fn criterion_04_sigma_suite() {
    criterion(4, "sigma suite", verify::sigma_suite);
}

#[test]
fn criterion_05_energy_relations() {
    criterion(5, "energy relations", verify::energy_relations_suite);
}

#[test]
fn criterion_06_rmatrix_suite() {
    criterion(6, "R-matrix suite", verify::rmatrix_suite);
}

#[test]
fn criterion_07_splitting_suite() {
    criterion(7, "splitting suite", verify::splitting_suite);
}

#[test]
fn criterion_08_type_a_lusztig_cross_check() {
    criterion(8, "type A Lusztig cross-check", verify::type_a_lusztig_suite);
}

#[test]
fn criterion_09_x_equals_k_and_transpose() {
    criterion(9, "X = K and transpose", |o| {
        let xk = verify::x_equals_k_suite(o);
        let xk = Report::new("xk", xk.checks.into_iter().filter(|c| !c.name.starts_with("type A")).collect());
        Report::merge("xk-transpose", vec![xk, verify::transpose_suite(o)])
    });
}

#[test]
fn criterion_10_golden_fixtures() {
    criterion(10, "golden fixtures", |o| Report::new("golden", vec![verify::e0_golden(o), verify::rule_golden()]));
}

#[test]
fn criterion_11_positivity_scan() {
    criterion(11, "positivity scan", verify::positivity_suite);
}
