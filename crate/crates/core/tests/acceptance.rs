//! Runs the ten acceptance criteria and prints one status line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are evaluated at full tolerance and reported
//! as FAIL when they fail; only failures outside that set make this target exit nonzero.

use std::process::ExitCode;

use symspin::acceptance::{run_all, KNOWN_UNATTAINABLE};

fn main() -> ExitCode {
    let report = match run_all() {
        Ok(r) => r,
        Err(e) => {
            eprintln!("acceptance run aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    for c in &report.criteria {
        println!("{}", c.line());
        for d in c.details.iter().take(8) {
            println!("        {d}");
        }
    }
    println!(
        "acceptance: {} passed, {} failed (known unattainable: {:?})",
        report.passed, report.failed, KNOWN_UNATTAINABLE
    );
    let unexpected = report.unexpected_failures();
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        for c in unexpected {
            eprintln!("unexpected failure: criterion {}", c.id);
        }
        ExitCode::FAILURE
    }
}
