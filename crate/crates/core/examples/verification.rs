//! Run part of the randomized verification suite from code.
//!
//! `cargo run --release --example verification`

use qsd::verify::{run_verification, Suite, SuiteSelection, VerifyConfig};

fn main() -> qsd::Result<()> {
    let cfg = VerifyConfig {
        suite: SuiteSelection::Only(Suite::Frechet),
        dims: vec![2, 4],
        trials: 50,
        ..VerifyConfig::default()
    };
    let report = run_verification(&cfg)?;
    for c in &report.checks {
        println!(
            "{:<30} n={:<4} worst slack {:>10.2e}  {}",
            c.check_id,
            c.trials,
            c.worst_slack.unwrap_or(f64::NAN),
            if c.passed() { "ok" } else { "FAIL" }
        );
    }
    println!("{} violations in {:.2}s", report.violations, report.wall_time);
    Ok(())
}
