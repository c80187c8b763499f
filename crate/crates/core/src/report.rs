//! Pass/fail reports shared by all verifiers.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// A witness for the failure (e.g. the basis element), when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Extra information recorded even on pass (e.g. the observed antipode
    /// order, or a comparison flagged as informational).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), pass, witness, note: None });
    }

    pub fn push_note(
        &mut self,
        name: impl Into<String>,
        pass: bool,
        witness: Option<String>,
        note: impl Into<String>,
    ) {
        self.checks.push(Check { name: name.into(), pass, witness, note: Some(note.into()) });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            write!(f, "  [{status}] {}", c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " (witness: {w})")?;
            }
            if let Some(n) = &c.note {
                write!(f, " [{n}]")?;
            }
            writeln!(f)?;
        }
        let overall = if self.all_pass() { "PASS" } else { "FAIL" };
        write!(f, "  overall: {overall}")
    }
}
