//! The acceptance criteria, each with its own time limit. Runs without the
//! test harness so that the one-line verdicts print as they complete.

use std::process::ExitCode;

use cubic_torsion::report::{Suite, VerifyOptions, CRITERIA};

fn main() -> ExitCode {
    let mut suite = Suite::new(VerifyOptions::default());
    let mut failed = 0;
    for c in CRITERIA {
        let r = suite.run(c.id);
        println!("{}", r.line());
        if !r.passed() {
            failed += 1;
            for f in &r.failures {
                println!("    {f}");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
