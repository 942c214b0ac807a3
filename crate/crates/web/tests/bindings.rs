//! The browser operations, run natively.

use kr_web::{kr_crystal, lusztig_side, one_dim_sums};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn kr_crystal_summary() {
    let v = parse(kr_crystal("D", 4, 1, 1));
    assert_eq!(v["vertices"], 8);
    assert_eq!(v["level"], 1);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
    // Eight classical arrows and the two 0-arrows 1̄ → 2, 2̄ → 1.
    assert_eq!(v["edges"].as_array().unwrap().len(), 10);
    assert!(parse(kr_crystal("Q", 4, 1, 1))["error"].is_string());
}

#[test]
fn one_dim_sums_type_a() {
    let v = parse(one_dim_sums("A", 3, "1x1,1x1"));
    let sums = v["sums"].as_array().unwrap();
    assert_eq!(sums.len(), 2);
    assert_eq!(sums[0]["lambda"], "(1,1)");
    assert_eq!(sums[0]["sum"]["text"], "q");
}

#[test]
fn lusztig_side_agrees() {
    for (ty, rank, t, l) in [("D", 5, "1x2,1x1", "1"), ("C", 4, "1x1,1x1", ""), ("D2", 5, "2x1", "1"), ("A", 3, "1x2,1x1", "2,1")] {
        let v = parse(lusztig_side(ty, rank, t, l));
        assert_eq!(v["agree"], true, "{}", v);
    }
}
