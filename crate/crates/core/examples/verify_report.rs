//! Runs two suites in-process and prints their reports as CSV.

use coinvariant::verify::{render_report, run_suite, Format, RunConfig};

fn main() -> coinvariant::Result<()> {
    let config = RunConfig::with_n(3);
    for suite in ["ss-J", "generating-set"] {
        let reports = run_suite(suite, &config)?;
        print!("{}", render_report(&reports, Format::Csv)?);
        let failed = reports.iter().filter(|r| !r.pass).count();
        println!("{suite}: {} checks, {failed} failed\n", reports.len());
    }
    Ok(())
}
