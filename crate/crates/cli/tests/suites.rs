//! Library-level integration of the full suite runner.

use domforce_cli::report::{blocking_failures, Allowlist, Status};
use domforce_cli::suites::{run_suite, suite_passes, SuiteConfig, SuiteName};

#[test]
fn full_run_has_exactly_the_known_discrepancies() {
    let cfg = SuiteConfig {
        workers: 4,
        ..SuiteConfig::default()
    };
    let records = run_suite(&cfg);
    assert!(records.len() > 3000, "got {} records", records.len());

    // sorted by (graph_id, invariant)
    for pair in records.windows(2) {
        let a = (&pair[0].graph_id, &pair[0].invariant);
        let b = (&pair[1].graph_id, &pair[1].invariant);
        assert!(a <= b, "records must be sorted: {a:?} then {b:?}");
    }

    let failures: Vec<(&str, &str)> = records
        .iter()
        .filter(|r| r.status.is_failure())
        .map(|r| (r.graph_id.as_str(), r.invariant.as_str()))
        .collect();
    assert_eq!(
        failures,
        vec![("splitting(path:2)", "z"), ("splitting(path:5)", "fcd")],
        "exactly the two documented discrepancies"
    );

    let allow = Allowlist::builtin();
    assert!(suite_passes(&records, &allow));
    assert!(blocking_failures(&records, &allow).is_empty());
    assert!(!suite_passes(&records, &Allowlist::default()));

    // every grid witness row verified
    let witnesses = records
        .iter()
        .filter(|r| r.status == Status::WitnessVerified)
        .count();
    assert_eq!(witnesses, 27 * 28 / 2, "grids 4 <= p <= q <= 30");

    // interval rows all landed inside their intervals
    assert!(records.iter().any(|r| r.status == Status::InInterval));
    assert_eq!(
        records.iter().filter(|r| r.status == Status::SkippedBudget).count(),
        0
    );
}

#[test]
fn max_n_extends_the_families_suite() {
    let cfg = SuiteConfig {
        suites: vec![SuiteName::Families],
        max_n: Some(16),
        ..SuiteConfig::default()
    };
    let records = run_suite(&cfg);
    // helm goes to m = 7 (order 15) and the 4-cube appears
    assert!(records.iter().any(|r| r.graph_id == "helm:7"));
    assert!(records.iter().any(|r| r.graph_id == "hypercube:4"));
    assert!(records.iter().all(|r| !r.status.is_failure()));
}
