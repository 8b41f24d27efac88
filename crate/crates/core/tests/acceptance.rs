//! Acceptance criteria, one line each. Runs without the test harness so the
//! summary is always printed; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Duration;

use qpwalks::suites::Suite;

struct Criterion {
    id: u32,
    title: &'static str,
    suite: Suite,
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        title: "classification: 79 models, 7/23/27/16/5/1, waypoints 161/153/138",
        suite: Suite::Classification,
        limit: secs(1),
    },
    Criterion {
        id: 2,
        title: "group orders: 16 x 4, 5 x 6, 2 x 8, 56 infinite, 0 undetermined",
        suite: Suite::Groups,
        limit: secs(120),
    },
    Criterion {
        id: 3,
        title: "fixed-point certificates: all tabulated rows, row-1 charpoly, no cyclotomic factor",
        suite: Suite::FixedPoints,
        limit: secs(60),
    },
    Criterion {
        id: 4,
        title: "sequence regression: totals and returns for the 23 finite models, n <= 9",
        suite: Suite::Sequences,
        limit: secs(10),
    },
    Criterion {
        id: 5,
        title: "orbit extraction equals the oracle: 19 models, i, j <= 8, n <= 12",
        suite: Suite::OrbitExtraction,
        limit: secs(120),
    },
    Criterion {
        id: 6,
        title: "functional equation on 79 models, orbit sums on 23 models",
        suite: Suite::Identities,
        limit: secs(300),
    },
    Criterion {
        id: 7,
        title: "closed forms equal the oracle for n <= 18",
        suite: Suite::ClosedForms,
        limit: secs(60),
    },
    Criterion {
        id: 8,
        title: "telescoping certificates on m <= 10, i, j <= 6",
        suite: Suite::Gosper,
        limit: secs(10),
    },
    Criterion {
        id: 9,
        title: "kernel roots, 1/K expansion, canonical factorisation",
        suite: Suite::Kernel,
        limit: secs(120),
    },
    Criterion {
        id: 10,
        title: "algebraic solutions and identities",
        suite: Suite::Algebraic,
        limit: secs(60),
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let report = c.suite.run();
        let in_time = report.elapsed <= c.limit;
        let ok = report.passed() && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {} [{}/{} checks, {:.2}s of {}s] {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            report.passed_count(),
            report.checks.len(),
            report.elapsed.as_secs_f64(),
            c.limit.as_secs(),
            c.title,
        );
        for check in report.failures() {
            println!("    failed: {} ({})", check.name, check.detail);
        }
        if !in_time {
            println!("    over the time limit");
        }
    }
    println!(
        "acceptance: {}/{} criteria pass",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
