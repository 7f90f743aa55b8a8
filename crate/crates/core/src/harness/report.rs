use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one suite run. Counterexamples are kept up to a small limit; `failures`
/// counts all of them.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub bound: String,
    pub cases: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
    pub duration_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// One JSON record. With `timing` off the duration is written as zero, so equal
    /// configurations give identical lines.
    pub fn to_json_line(&self, timing: bool) -> String {
        let mut r = self.clone();
        if !timing {
            r.duration_ms = 0;
        }
        serde_json::to_string(&r).expect("reports serialize")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]: {} cases, {} failures, {} ms",
            if self.passed() { "ok  " } else { "FAIL" },
            self.suite,
            self.bound,
            self.cases,
            self.failures,
            self.duration_ms
        )?;
        for c in &self.counterexamples {
            write!(f, "\n    {c}")?;
        }
        Ok(())
    }
}

/// Collects case outcomes for a report.
#[derive(Default)]
pub(crate) struct Check {
    pub cases: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

pub(crate) const MAX_EXAMPLES: usize = 5;

impl Check {
    pub fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(describe());
            }
        }
    }

    /// Counts a case that failed with an error rather than a false property.
    pub fn result<T>(&mut self, r: crate::Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.case(false, || format!("{}: {e}", what()));
                None
            }
        }
    }
}
