//! Pass/fail reports with replayable counterexamples.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Data needed to replay one failing check in isolation.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Degrees of the operands.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degrees: Vec<usize>,
    /// Composition positions or basis indices involved.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<usize>,
    /// Operand coordinates.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub operands: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lhs: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rhs: Vec<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Witness {
    pub fn detail(detail: impl Into<String>) -> Self {
        Witness {
            detail: detail.into(),
            ..Witness::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub identity: String,
    pub status: Status,
    /// Number of instances checked.
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckEntry {
    pub fn pass(identity: impl Into<String>, checked: usize) -> Self {
        CheckEntry {
            identity: identity.into(),
            status: Status::Pass,
            checked,
            witness: None,
        }
    }

    pub fn fail(identity: impl Into<String>, checked: usize, witness: Witness) -> Self {
        CheckEntry {
            identity: identity.into(),
            status: Status::Fail,
            checked,
            witness: Some(witness),
        }
    }

    /// Pass when `witness` is `None`.
    pub fn from_outcome(identity: impl Into<String>, checked: usize, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::pass(identity, checked),
            Some(w) => Self::fail(identity, checked, w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub results: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.results.push(entry);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.results.extend(other.results);
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.results.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn entry(&self, identity: &str) -> Option<&CheckEntry> {
        self.results.iter().find(|e| e.identity == identity)
    }

    /// Sorts entries by label so that output does not depend on scheduling.
    pub fn sorted(mut self) -> Self {
        self.results.sort_by(|a, b| a.identity.cmp(&b.identity));
        self
    }

    /// Total number of checked instances.
    pub fn checked(&self) -> usize {
        self.results.iter().map(|e| e.checked).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serializes_in_documented_shape() {
        let mut r = CheckReport::new("complex");
        r.push(CheckEntry::pass("b", 3));
        r.push(CheckEntry::fail("a", 1, Witness::detail("x")));
        let r = r.sorted();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["suite"], "complex");
        assert_eq!(v["results"][0]["identity"], "a");
        assert_eq!(v["results"][0]["status"], "fail");
        assert_eq!(v["results"][0]["witness"]["detail"], "x");
        assert!(v["results"][1].get("witness").is_none());
        assert!(!r.passed());
    }
}
