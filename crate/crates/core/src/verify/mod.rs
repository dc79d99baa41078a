//! Named verification suites.
//!
//! Each suite solves a fixed, seeded set of instances and compares the
//! result with a known value or bound. A check that runs out of its
//! resource budget is reported as `capped`, never as a pass.

mod suites;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};

pub use suites::{bound_violations, instances, Expect, Instance, InstanceKind};

pub const SUITES: &[&str] = &[
    "complete-exact",
    "bipartite-exact",
    "subcubic",
    "two-trees",
    "degree4",
    "b1-characterisation",
    "recurrence-closed-form",
    "grids",
    "oracle-equivalence",
    "bounds-consistency",
];

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Include the expensive instances (K7, six-vertex enumeration).
    pub slow: bool,
    pub seed: u64,
    pub threads: Option<usize>,
    /// Wall-clock budget per solver call.
    pub budget: Option<Duration>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Capped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub status: CheckStatus,
    pub wall_ms: u64,
}

/// A measured value compared with a conjectured one; never counted as a
/// pass or a failure.
#[derive(Debug, Clone, Serialize)]
pub struct Observation {
    pub instance: String,
    pub conjectured: String,
    pub computed: String,
    pub agrees: bool,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub capped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub summary: Summary,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Observation>,
    pub wall_ms: u64,
}

impl SuiteResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite result serialises")
    }

    /// First failing or capped check, if any.
    pub fn first_problem(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status != CheckStatus::Pass)
    }
}

/// Collects checks while a suite runs.
pub(crate) struct Recorder {
    checks: Vec<Check>,
    observations: Vec<Observation>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new(), observations: Vec::new() }
    }

    /// Times `run`, which returns the computed value, whether it meets the
    /// expectation, and whether it is exact.
    pub(crate) fn check<F>(&mut self, instance: impl Into<String>, expected: impl Into<String>, run: F)
    where
        F: FnOnce() -> Result<(String, bool, bool)>,
    {
        let clock = Instant::now();
        let (computed, status) = match run() {
            Ok((c, _, false)) => (c, CheckStatus::Capped),
            Ok((c, true, true)) => (c, CheckStatus::Pass),
            Ok((c, false, true)) => (c, CheckStatus::Fail),
            Err(e @ Error::SizeLimit { .. }) => (e.to_string(), CheckStatus::Capped),
            Err(e) => (format!("error: {e}"), CheckStatus::Fail),
        };
        self.checks.push(Check {
            instance: instance.into(),
            expected: expected.into(),
            computed,
            status,
            wall_ms: clock.elapsed().as_millis() as u64,
        });
    }

    pub(crate) fn observe(&mut self, instance: impl Into<String>, conjectured: impl ToString, computed: impl ToString) {
        let (conjectured, computed) = (conjectured.to_string(), computed.to_string());
        self.observations.push(Observation {
            instance: instance.into(),
            agrees: conjectured == computed,
            conjectured,
            computed,
        });
    }
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteResult> {
    let clock = Instant::now();
    let mut rec = Recorder::new();
    match name {
        "complete-exact" => suites::complete_exact(&mut rec, opts),
        "bipartite-exact" => suites::bipartite_exact(&mut rec, opts),
        "subcubic" => suites::subcubic(&mut rec, opts),
        "two-trees" => suites::two_trees(&mut rec, opts),
        "degree4" => suites::degree4(&mut rec, opts),
        "b1-characterisation" => suites::b1(&mut rec, opts),
        "recurrence-closed-form" => suites::formulas(&mut rec),
        "grids" => suites::grids(&mut rec),
        "oracle-equivalence" => suites::oracle(&mut rec, opts),
        "bounds-consistency" => suites::sandwich(&mut rec, opts),
        _ => return Err(Error::Unknown { kind: "suite", name: name.to_string() }),
    }
    let mut summary = Summary::default();
    for c in &rec.checks {
        match c.status {
            CheckStatus::Pass => summary.passed += 1,
            CheckStatus::Fail => summary.failed += 1,
            CheckStatus::Capped => summary.capped += 1,
        }
    }
    Ok(SuiteResult {
        suite: name.to_string(),
        seed: opts.seed,
        passed: summary.failed == 0 && summary.capped == 0,
        summary,
        checks: rec.checks,
        observations: rec.observations,
        wall_ms: clock.elapsed().as_millis() as u64,
    })
}
