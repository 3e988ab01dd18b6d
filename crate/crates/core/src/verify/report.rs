//! Verdict reports: one named check per claim, with a human-readable witness.

use std::fmt;

/// Outcome of one check inside a report. Skipped checks carry the reason a
/// claim did not apply and do not count against the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Skipped => write!(f, "skipped"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub witness: String,
}

/// The result of verifying one named claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictReport {
    pub theorem_id: String,
    pub checks: Vec<Check>,
}

impl VerdictReport {
    pub fn new(theorem_id: &str) -> Self {
        VerdictReport {
            theorem_id: theorem_id.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, name: &str, pass: bool, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: if pass {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            witness: witness.into(),
        });
    }

    pub fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            witness: reason.into(),
        });
    }

    /// Overall verdict: no failing check.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {}",
            self.theorem_id,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(f, "  {:<7} {}: {}", c.status.to_string(), c.name, c.witness)?;
        }
        Ok(())
    }
}
