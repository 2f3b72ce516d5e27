//! One line per criterion; a nonzero exit status if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use natural_hopf_cli::acceptance;

fn main() -> ExitCode {
    let mut failed = 0;
    for id in 1..=acceptance::criterion_count() {
        let start = Instant::now();
        let outcome = acceptance::run_one(id).expect("criterion exists");
        println!("{} ({:.2}s)", outcome.line(), start.elapsed().as_secs_f64());
        failed += usize::from(!outcome.passed);
    }
    println!("{} passed, {failed} failed", acceptance::criterion_count() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
