//! Report structure and determinism.

use kr_crystals::verify::{self, Options, Report, SUITES};

#[test]
fn reports_are_identical_across_thread_counts() {
    let one = Options { jobs: 1, ..Options::default() };
    let four = Options { jobs: 4, ..Options::default() };
    for suite in ["decomposition", "golden", "transpose"] {
        let a = verify::run_suite(suite, &one).unwrap();
        let b = verify::run_suite(suite, &four).unwrap();
        assert!(a.passed, "{}", a.to_text());
        assert_eq!(a.to_json(), b.to_json(), "{}", suite);
    }
}

#[test]
fn reports_round_trip_through_json() {
    let r = verify::golden_suite(&Options::default());
    let back: Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert_eq!(r.version, verify::REPORT_VERSION);
    assert!(r.to_text().ends_with("suite golden: PASS (3 checks, 22 cases)\n"), "{}", r.to_text());
}

#[test]
fn unknown_suites_are_rejected() {
    assert!(verify::run_suite("nonsense", &Options::default()).is_none());
    assert!(SUITES.contains(&"all"));
}

#[test]
fn failures_carry_both_sides() {
    let mut r = verify::golden_suite(&Options::default());
    r.checks[0].passed = false;
    r.checks[0].failed = 1;
    r.checks[0].failures = vec!["X̄ = q, other side = q^2".into()];
    let r = Report::new("golden", r.checks);
    assert!(!r.passed);
    assert!(r.to_text().contains("FAIL golden: e_0"));
    assert!(r.to_text().contains("other side = q^2"));
}
