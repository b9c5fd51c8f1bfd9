//! Run the full verification suite programmatically and inspect the
//! machine-readable report.
//!
//! Run with: cargo run --example verify_suite

use supercontact::verify::{run_suite, SuiteOptions};
use supercontact::Dims;

fn main() {
    let report = run_suite(Dims::new(1, 2), &SuiteOptions::default()).unwrap();

    for check in &report.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        println!("{status} {} ({} ms)", check.name, check.elapsed_ms);
        if !check.passed {
            println!("     counterexample: {}", check.details);
        }
    }
    println!();
    println!("dim spo(2l+2|n)     = {}", report.dim_spo);
    println!("dim quadratic space = {}", report.dim_quadratic);
    println!("all passed          = {}", report.all_passed);

    // the same report as JSON, as the CLI's `verify --json` would print it
    println!();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
