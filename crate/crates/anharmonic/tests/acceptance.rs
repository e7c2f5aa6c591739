//! The ten acceptance criteria, one line each. Runs without the libtest
//! harness so the report is always printed; exits non-zero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use anharmonic::output::format_float;
use anharmonic::verify::{criterion, Bound, CRITERIA};

/// Wall-clock budgets in seconds.
const BUDGETS: [(u8, f64); 2] = [(1, 60.0), (2, 20.0)];

fn describe(bound: Bound) -> String {
    match bound {
        Bound::AtMost(t) => format!("<= {}", format_float(t)),
        Bound::Within { lo, hi } => format!("in [{}, {}]", format_float(lo), format_float(hi)),
    }
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (id, _) in CRITERIA {
        let start = Instant::now();
        let c = criterion(id, 1.0);
        let seconds = start.elapsed().as_secs_f64();
        let budget = BUDGETS.iter().find(|(i, _)| *i == id).map(|(_, b)| *b);
        let in_time = budget.is_none_or(|b| seconds <= b);
        let passed = c.passed() && in_time;
        if !passed {
            failed += 1;
        }
        println!("{} criterion {id:>2}: {} ({seconds:.2} s)", if passed { "PASS" } else { "FAIL" }, c.title);
        for check in &c.checks {
            let status = if check.passed() { "ok" } else { "failed" };
            println!("       {}: {} {} [{status}]", check.name, format_float(check.observed), describe(check.bound));
            if let Some(d) = &check.detail {
                println!("       error: {d}");
            }
        }
        if let Some(b) = budget {
            println!("       runtime {seconds:.2} s, budget {b} s [{}]", if in_time { "ok" } else { "failed" });
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
