//! Verification records, their JSON-lines serialization, and the allowlist
//! of known boundary discrepancies.

use std::collections::BTreeSet;
use std::time::Instant;

use domforce_core::{
    solve, Graph, InvariantKind, Method, Outcome, Prediction, SolveBudget, SolveResult,
};
use serde::Serialize;

/// Outcome of comparing a computed value against its prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "IN_INTERVAL")]
    InInterval,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "BOUND_VIOLATION")]
    BoundViolation,
    #[serde(rename = "SKIPPED_BUDGET")]
    SkippedBudget,
    #[serde(rename = "WITNESS_VERIFIED")]
    WitnessVerified,
}

impl Status {
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Mismatch | Status::BoundViolation)
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::InInterval => "IN_INTERVAL",
            Status::Mismatch => "MISMATCH",
            Status::BoundViolation => "BOUND_VIOLATION",
            Status::SkippedBudget => "SKIPPED_BUDGET",
            Status::WitnessVerified => "WITNESS_VERIFIED",
        }
    }
}

/// Serialized form of a prediction outcome.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PredictedJson {
    Exact { value: usize },
    Interval { lo: usize, hi: usize },
    NotCovered,
}

impl From<&Outcome> for PredictedJson {
    fn from(o: &Outcome) -> Self {
        match *o {
            Outcome::Exact(value) => PredictedJson::Exact { value },
            Outcome::Interval(lo, hi) => PredictedJson::Interval { lo, hi },
            Outcome::NotCovered => PredictedJson::NotCovered,
        }
    }
}

/// Serialized form of a solver result (or constructed witness).
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ComputedJson {
    pub value: usize,
    pub witness: Vec<usize>,
    pub candidates_checked: u64,
    pub method: String,
}

impl ComputedJson {
    pub fn from_solve(r: &SolveResult) -> Self {
        ComputedJson {
            value: r.value,
            witness: r.witness.to_vec(),
            candidates_checked: r.candidates_checked,
            method: r.method.name().to_string(),
        }
    }
}

/// One row of the reproduction report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationRecord {
    pub graph_id: String,
    pub invariant: String,
    pub predicted: PredictedJson,
    pub computed: Option<ComputedJson>,
    pub status: Status,
    pub elapsed_ms: u64,
    pub theorem_tag: String,
}

impl VerificationRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize infallibly")
    }
}

/// Solves with wall-clock timing filled into the result.
pub fn timed_solve(
    g: &Graph,
    kind: InvariantKind,
    budget: &SolveBudget,
    method: Method,
) -> (domforce_core::Result<SolveResult>, u64) {
    let start = Instant::now();
    let mut result = solve(g, kind, budget, method);
    let ms = start.elapsed().as_millis() as u64;
    if let Ok(r) = result.as_mut() {
        r.elapsed = start.elapsed();
    }
    (result, ms)
}

/// Solves the predicted invariant on `g` and grades the outcome. Budget
/// overruns become `SKIPPED_BUDGET` records; other solver errors are bugs in
/// suite construction and panic.
pub fn check_record(
    graph_id: &str,
    g: &Graph,
    prediction: &Prediction,
    budget: &SolveBudget,
    method: Method,
    timings: bool,
) -> VerificationRecord {
    let (result, ms) = timed_solve(g, prediction.invariant, budget, method);
    let (computed, status) = match result {
        Ok(r) => {
            let status = match prediction.outcome {
                Outcome::Exact(v) => {
                    if r.value == v {
                        Status::Match
                    } else {
                        Status::Mismatch
                    }
                }
                Outcome::Interval(lo, hi) => {
                    if lo <= r.value && r.value <= hi {
                        Status::InInterval
                    } else {
                        Status::BoundViolation
                    }
                }
                Outcome::NotCovered => {
                    unreachable!("suites only grade covered predictions")
                }
            };
            (Some(ComputedJson::from_solve(&r)), status)
        }
        Err(domforce_core::Error::BudgetExceeded { .. }) => (None, Status::SkippedBudget),
        Err(e) => panic!("suite instance {graph_id} failed to solve: {e}"),
    };
    VerificationRecord {
        graph_id: graph_id.to_string(),
        invariant: prediction.invariant.name().to_string(),
        predicted: PredictedJson::from(&prediction.outcome),
        computed,
        status,
        elapsed_ms: if timings { ms } else { 0 },
        theorem_tag: prediction.theorem_tag.to_string(),
    }
}

/// Known boundary discrepancies: `graph_id invariant` per line,
/// `#` comments. Allowlisted mismatches keep their MISMATCH status in the
/// report but do not fail the exit status.
#[derive(Debug, Clone, Default)]
pub struct Allowlist {
    entries: BTreeSet<(String, String)>,
}

pub const DEFAULT_ALLOWLIST: &str = include_str!("../data/known_discrepancies.txt");

impl Allowlist {
    pub fn parse(text: &str) -> Allowlist {
        let mut entries = BTreeSet::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            if let (Some(id), Some(kind)) = (it.next(), it.next()) {
                entries.insert((id.to_string(), kind.to_string()));
            }
        }
        Allowlist { entries }
    }

    pub fn builtin() -> Allowlist {
        Allowlist::parse(DEFAULT_ALLOWLIST)
    }

    pub fn permits(&self, record: &VerificationRecord) -> bool {
        self.entries
            .contains(&(record.graph_id.clone(), record.invariant.clone()))
    }
}

/// Failure rows that are not allowlisted, i.e. the rows that make `verify`
/// exit nonzero.
pub fn blocking_failures<'a>(
    records: &'a [VerificationRecord],
    allowlist: &Allowlist,
) -> Vec<&'a VerificationRecord> {
    records
        .iter()
        .filter(|r| r.status.is_failure() && !allowlist.permits(r))
        .collect()
}
