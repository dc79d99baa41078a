//! Acceptance run: one line per criterion, non-zero exit if any fails.
//!
//! Every criterion runs a verification suite, pins what that suite must
//! contain (instances and expected values), and enforces a wall-clock
//! limit. Values are compared exactly; there is no numeric tolerance.

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use firebreak::verify::{run_suite, CheckStatus, SuiteResult, VerifyOptions};

struct Criterion {
    id: u8,
    title: &'static str,
    suite: &'static str,
    slow: bool,
    limit: Duration,
    /// `(instance, expected)` pairs the suite must check.
    pinned: &'static [(&'static str, &'static str)],
    /// Minimum number of checks.
    min_checks: usize,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "complete graphs exact (K3..K6, K7)",
        suite: "complete-exact",
        slow: true,
        limit: secs(60 + 600),
        pinned: &[
            ("K3", "beta = 1"),
            ("K4", "beta = 2"),
            ("K5", "beta = 2"),
            ("K6", "beta = 3"),
            ("K7", "beta = 4"),
        ],
        min_checks: 5,
    },
    Criterion {
        id: 2,
        title: "complete bipartite exact and lower-bound formula",
        suite: "bipartite-exact",
        slow: false,
        limit: secs(300),
        pinned: &[("K2,2", "beta = 1"), ("K4,4", "beta = 3"), ("lower K4,4 f=1", "3"), ("lower K3,3 f=1", "3/2")],
        min_checks: 4,
    },
    Criterion {
        id: 3,
        title: "subcubic orientation burns at most 2",
        suite: "subcubic",
        slow: false,
        limit: secs(60),
        pinned: &[
            ("K4", "beta = 2"),
            ("petersen", "beta = 2"),
            ("K3,3", "beta <= 2"),
            ("prism3", "beta <= 2"),
            ("cube", "beta <= 2"),
        ],
        min_checks: 25,
    },
    Criterion {
        id: 4,
        title: "2-tree orientation burns at most 2",
        suite: "two-trees",
        slow: false,
        limit: secs(60),
        pinned: &[],
        min_checks: 20,
    },
    Criterion {
        id: 5,
        title: "degree-4 orientation burns at most 5",
        suite: "degree4",
        slow: false,
        limit: secs(300),
        pinned: &[],
        min_checks: 10,
    },
    Criterion {
        id: 6,
        title: "one burnt vertex iff at most one cycle (n <= 6)",
        suite: "b1-characterisation",
        slow: true,
        limit: secs(600),
        pinned: &[("connected graphs on 5 vertices (728)", "beta = 1 iff m <= n")],
        min_checks: 6,
    },
    Criterion {
        id: 7,
        title: "formula suite",
        suite: "recurrence-closed-form",
        slow: false,
        limit: secs(1),
        pinned: &[
            ("refined D=3 chi=3 f=1", "6"),
            ("refined D=4 chi=4 f=1", "35"),
            ("degree ladder d=3..6", "[2, 5, 17, 70]"),
        ],
        min_checks: 4,
    },
    Criterion {
        id: 8,
        title: "grid strategies",
        suite: "grids",
        slow: false,
        limit: secs(30),
        pinned: &[
            ("rect 9x9, starts at distance >= 3 from the boundary", "burned = 3"),
            ("tri 9x9, interior starts", "burned <= 6"),
            ("hex 8x8, every start", "burned <= 2"),
        ],
        min_checks: 3,
    },
    Criterion {
        id: 9,
        title: "pruned solver equals naive reference",
        suite: "oracle-equivalence",
        slow: false,
        limit: secs(300),
        pinned: &[],
        min_checks: 51,
    },
    Criterion {
        id: 10,
        title: "bounds sandwich on every solved instance",
        suite: "bounds-consistency",
        slow: true,
        limit: secs(600),
        pinned: &[],
        min_checks: 6,
    },
];

fn judge(c: &Criterion, r: &SuiteResult, elapsed: Duration) -> Result<String, String> {
    if r.checks.len() < c.min_checks {
        return Err(format!("only {} checks, need {}", r.checks.len(), c.min_checks));
    }
    for (instance, expected) in c.pinned {
        match r.checks.iter().find(|k| k.instance == *instance) {
            None => return Err(format!("no check for {instance}")),
            Some(k) if k.expected != *expected => {
                return Err(format!("{instance} expects {:?}, pinned {expected:?}", k.expected))
            }
            Some(_) => {}
        }
    }
    if let Some(bad) = r.checks.iter().find(|k| k.status != CheckStatus::Pass) {
        let how = if bad.status == CheckStatus::Capped { "capped" } else { "failed" };
        return Err(format!("{} {how}: expected {}, computed {}", bad.instance, bad.expected, bad.computed));
    }
    if elapsed > c.limit {
        return Err(format!("took {elapsed:.1?}, limit {:?}", c.limit));
    }
    Ok(format!("{} checks in {elapsed:.2?}", r.checks.len()))
}

fn main() -> ExitCode {
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let mut out = std::io::stdout().lock();
    let mut failed = 0;
    for c in CRITERIA {
        if filter.as_ref().is_some_and(|f| !c.suite.contains(f.as_str())) {
            continue;
        }
        let opts = VerifyOptions { slow: c.slow, ..Default::default() };
        let clock = Instant::now();
        let verdict = match run_suite(c.suite, &opts) {
            Ok(r) => judge(c, &r, clock.elapsed()),
            Err(e) => Err(e.to_string()),
        };
        let line = match &verdict {
            Ok(msg) => format!("criterion {:>2} PASS  {} [{}]: {msg}", c.id, c.title, c.suite),
            Err(msg) => format!("criterion {:>2} FAIL  {} [{}]: {msg}", c.id, c.title, c.suite),
        };
        failed += usize::from(verdict.is_err());
        writeln!(out, "{line}").unwrap();
    }
    writeln!(out, "acceptance: {} failed", failed).unwrap();
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
