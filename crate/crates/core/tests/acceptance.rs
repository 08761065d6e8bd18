//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines always reach stdout; exits nonzero if any criterion fails.

use std::process::ExitCode;

use tilderep::acceptance::run_all;

fn main() -> ExitCode {
    let results = run_all();
    for c in &results {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        println!("{verdict} [{}] {}: {}", c.id, c.name, c.detail);
    }
    if results.iter().all(|c| c.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
