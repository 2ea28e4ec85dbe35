//! Machine-readable verification outcomes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Result of one named identity or property inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub checked: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    /// Informational checks are recorded but do not affect the status.
    #[serde(skip_serializing_if = "is_false", default)]
    pub informational: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), checked: 0, violations: 0, witness: None, informational: false }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Records one evaluated instance. The first violation seen is kept as
    /// the witness, so callers must visit tuples in lexicographic order.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    /// Folds in a partial result covering a later range of tuples.
    pub fn merge(&mut self, later: Check) {
        self.checked += later.checked;
        self.violations += later.violations;
        if self.witness.is_none() {
            self.witness = later.witness;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub task: String,
    pub status: Status,
    pub dims: BTreeMap<String, usize>,
    pub checked: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub details: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<u64>,
}

impl VerificationReport {
    pub fn new(task: impl Into<String>) -> Self {
        VerificationReport {
            task: task.into(),
            status: Status::Pass,
            dims: BTreeMap::new(),
            checked: 0,
            violations: 0,
            witness: None,
            details: Vec::new(),
            notes: Vec::new(),
            millis: None,
        }
    }

    pub fn error(task: impl Into<String>, message: impl Into<String>) -> Self {
        let mut r = Self::new(task);
        r.status = Status::Error;
        r.notes.push(message.into());
        r
    }

    pub fn with_dim(mut self, name: impl Into<String>, dim: usize) -> Self {
        self.dims.insert(name.into(), dim);
        self
    }

    pub fn dim(&mut self, name: impl Into<String>, dim: usize) {
        self.dims.insert(name.into(), dim);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Adds a sub-check and refreshes the totals.
    pub fn push(&mut self, check: Check) {
        self.details.push(check);
        self.refresh();
    }

    /// Adds a boolean property as a single-instance check.
    pub fn assert(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let mut c = Check::new(name);
        c.record(ok, witness);
        self.push(c);
    }

    /// Absorbs every sub-check of `other`, prefixing names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.details {
            c.name = format!("{prefix}.{}", c.name);
            self.details.push(c);
        }
        for (k, v) in other.dims {
            self.dims.insert(format!("{prefix}.{k}"), v);
        }
        self.notes.extend(other.notes);
        if other.status == Status::Error {
            self.status = Status::Error;
        }
        self.refresh();
    }

    fn refresh(&mut self) {
        let binding: Vec<&Check> = self.details.iter().filter(|c| !c.informational).collect();
        self.checked = binding.iter().map(|c| c.checked).sum();
        self.violations = binding.iter().map(|c| c.violations).sum();
        self.witness = binding
            .iter()
            .find(|c| !c.passed())
            .and_then(|c| c.witness.as_ref().map(|w| format!("{}: {w}", c.name)));
        if self.status != Status::Error {
            self.status = if self.violations == 0 { Status::Pass } else { Status::Fail };
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.details.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn informational_checks_do_not_fail() {
        let mut r = VerificationReport::new("t");
        let mut c = Check::new("printed").informational();
        c.record(false, || "x".into());
        r.push(c);
        assert!(r.passed());
        r.assert("real", false, || "(0,1)".into());
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.as_deref(), Some("real: (0,1)"));
    }

    #[test]
    fn merge_keeps_earliest_witness() {
        let mut a = Check::new("c");
        a.record(true, String::new);
        let mut b = Check::new("c");
        b.record(false, || "late".into());
        a.merge(b);
        assert_eq!((a.checked, a.violations), (2, 1));
        assert_eq!(a.witness.as_deref(), Some("late"));
    }
}
