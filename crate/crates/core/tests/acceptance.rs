//! The twelve acceptance criteria, one line per criterion.

use std::time::{Duration, Instant};

use tannaka::check::{render, run_suite, DEFAULT_SEED, SUITES};

/// Wall-clock budgets per criterion, where one applies.
fn budget(criterion: usize) -> Option<Duration> {
    let secs = match criterion {
        1 => 10,
        3 => 30,
        6 => 5,
        8 => 10,
        10 => 60,
        _ => return None,
    };
    Some(Duration::from_secs(secs))
}

fn main() {
    let mut failed = Vec::new();
    for name in SUITES {
        let start = Instant::now();
        let report = run_suite(name, DEFAULT_SEED).expect("known suite");
        let elapsed = start.elapsed();
        let within = budget(report.criterion).is_none_or(|b| elapsed < b);
        let ok = report.passed() && within;
        println!(
            "criterion {:>2} {:<15} {} ({} checks, {} failed, {:.2}s{})",
            report.criterion,
            report.name,
            if ok { "PASS" } else { "FAIL" },
            report.checks,
            report.failed,
            elapsed.as_secs_f64(),
            budget(report.criterion).map_or(String::new(), |b| format!(" of {}s", b.as_secs())),
        );
        if !ok {
            print!("{}", render(std::slice::from_ref(&report)));
            failed.push(report.criterion);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("{} of {} criteria passed", SUITES.len(), SUITES.len());
}
