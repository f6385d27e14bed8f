use std::fmt;
use std::time::Instant;

use serde::Serialize;

/// One failed equality: which identity, at which input, and both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of checking one or more identities over a finite grid.
///
/// `failures` is empty exactly when every case passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            cases_run: 0,
            failures: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    /// Records one comparison. Returns whether it passed.
    pub fn check<T: PartialEq + fmt::Display>(
        &mut self,
        identity: &str,
        input: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.cases_run += 1;
        if lhs == rhs {
            return true;
        }
        self.failures.push(Failure {
            identity: identity.to_string(),
            input: input(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
        false
    }

    /// Records a boolean property that is expected to hold.
    pub fn check_that(&mut self, identity: &str, input: impl FnOnce() -> String, holds: bool) {
        self.check(identity, input, &holds, &true);
    }

    /// Folds another report's cases and failures into this one.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.cases_run += other.cases_run;
        self.failures.extend(other.failures);
    }

    pub fn timed<F: FnOnce(&mut Self)>(suite: impl Into<String>, body: F) -> Self {
        let start = Instant::now();
        let mut report = Self::new(suite);
        body(&mut report);
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        report
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} cases, {} failures, {} ms",
            self.suite,
            self.cases_run,
            self.failures.len(),
            self.elapsed_ms
        )?;
        if let Some(first) = self.first_failure() {
            write!(
                f,
                " (first: {} at {}: {} != {})",
                first.identity, first.input, first.lhs, first.rhs
            )?;
        }
        Ok(())
    }
}
