//! Bounded enumeration of every term system and the property suites run over it.
//!
//! Suites are pure functions of their bounds: the same bounds give the same report,
//! apart from the recorded wall time.

mod enumerate;
pub mod oracle;
mod report;
mod suites;

use std::time::Instant;

pub use enumerate::{enumerate, EnumSpec, System, Term};
pub use report::SuiteReport;
pub use suites::{suite_info, Bounds, SuiteInfo, PAIR_CAP, SUITES, TRIPLE_SAMPLE};

use crate::error::Result;

/// Runs one suite. Unknown names and unusable bounds are errors; property failures are
/// reported, not raised.
pub fn check_suite(name: &str, bounds: Bounds) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut check = report::Check::default();
    let bound = suites::run(name, &mut check, bounds)?;
    Ok(SuiteReport {
        suite: name.to_string(),
        bound,
        cases: check.cases,
        failures: check.failures,
        counterexamples: check.examples,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs a suite at its default bounds.
pub fn check_suite_default(name: &str) -> Result<SuiteReport> {
    let info = suite_info(name)
        .ok_or_else(|| crate::Error::InvalidSpec(format!("unknown suite `{name}`")))?;
    check_suite(name, info.default)
}
