//! Pass/fail records shared by every verification suite.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

/// Version tag carried by every JSON document the CLI emits.
pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyCheck {
    pub property: String,
    pub status: Status,
    /// Number of cases examined (up to and including a failing one).
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl PropertyCheck {
    pub fn from_witness(property: &str, checked: u64, witness: Option<Value>) -> Self {
        Self {
            property: property.to_string(),
            status: if witness.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            checked,
            witness,
        }
    }

    /// Runs `f` on `0..count` in parallel; the reported witness is the one
    /// with the smallest index, so the result does not depend on scheduling.
    pub fn scan<F>(property: &str, count: usize, f: F) -> Self
    where
        F: Fn(usize) -> Option<Value> + Sync + Send,
    {
        let found = (0..count).into_par_iter().map(|i| f(i).map(|w| (i, w))).find_first(|x| x.is_some());
        match found.flatten() {
            Some((i, w)) => Self::from_witness(property, i as u64 + 1, Some(w)),
            None => Self::from_witness(property, count as u64, None),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<PropertyCheck>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: PropertyCheck) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, property: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.property == property)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn scan_reports_first_failure() {
        let c = PropertyCheck::scan("odd", 100, |i| (i % 7 == 3).then(|| json!(i)));
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witness, Some(json!(3)));
        assert_eq!(c.checked, 4);
        let ok = PropertyCheck::scan("none", 10, |_| None);
        assert!(ok.passed());
        assert_eq!(ok.checked, 10);
    }
}
