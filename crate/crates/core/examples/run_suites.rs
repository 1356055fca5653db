//! Runs every theorem suite over the default catalog and prints one line per suite,
//! with the first few failing checks if any.

use radical_lab::suites::{run_suite, suite_names, SuiteContext};

fn main() -> Result<(), radical_lab::error::Error> {
    let ctx = SuiteContext::default_catalog()?;
    for name in suite_names() {
        let report = run_suite(name, &ctx)?;
        let status = if report.passed { "PASS" } else { "FAIL" };
        println!("{status} {name}: {} checks, {} failures", report.checks, report.failures);
        for o in report.outcomes.iter().filter(|o| !o.verdict.holds).take(3) {
            let w = o.verdict.witness().map(|w| w.summary()).unwrap_or_default();
            println!("    {} / {}: {w}", o.instance, o.check);
        }
    }
    Ok(())
}
