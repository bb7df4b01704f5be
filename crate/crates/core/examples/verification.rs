//! Run the cross-validation suites and print their reports.
//!
//! ```bash
//! cargo run --release -p transfer-systems --example verification -- [suite ...]
//! ```
//!
//! With no arguments, runs a fast selection. Suites: tables, oracle,
//! duality, schroder, antichain, conjecture, saturated, asymptotics.

use transfer_systems::verify::{run_suite, Suite};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suites: Vec<Suite> = if args.is_empty() {
        vec![Suite::Tables, Suite::Schroder, Suite::Antichain, Suite::Asymptotics]
    } else {
        args.iter()
            .map(|s| s.parse().unwrap_or_else(|e| panic!("{e}")))
            .collect()
    };

    let mut all_passed = true;
    for suite in suites {
        let report = run_suite(suite, None).unwrap_or_else(|e| panic!("{e}"));
        print!("{}", report.render_text());
        all_passed &= report.passed;
    }
    std::process::exit(if all_passed { 0 } else { 1 });
}
