//! Suite reports: deterministic, JSON-exportable, with counterexample
//! dumps. Wall time is printed in the human summary only, so the JSON
//! form is byte-identical across runs with the same seed and bounds.

use serde::Serialize;
use std::fmt;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The instance behaves as the statement predicts.
    Pass,
    /// A one-way arrow whose converse fails on this instance: recorded as
    /// content, not as an error.
    ConverseGap,
    /// The instance contradicts the statement: an implementation bug.
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceVerdict {
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl InstanceVerdict {
    pub fn pass(instance: impl Into<String>) -> Self {
        InstanceVerdict { instance: instance.into(), status: Status::Pass, detail: None, counterexample: None }
    }

    pub fn fail(instance: impl Into<String>, counterexample: impl Into<String>) -> Self {
        InstanceVerdict {
            instance: instance.into(),
            status: Status::Fail,
            detail: None,
            counterexample: Some(counterexample.into()),
        }
    }

    pub fn converse_gap(instance: impl Into<String>, detail: impl Into<String>) -> Self {
        InstanceVerdict {
            instance: instance.into(),
            status: Status::ConverseGap,
            detail: Some(detail.into()),
            counterexample: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: Option<u64>,
    pub bound: Option<u64>,
    pub instances: usize,
    pub passed: bool,
    pub verdicts: Vec<InstanceVerdict>,
    #[serde(skip)]
    pub wall: Duration,
}

impl SuiteReport {
    /// Assembles a report; verdicts are sorted by instance key so the
    /// output is independent of evaluation order.
    pub fn new(
        suite: impl Into<String>,
        seed: Option<u64>,
        bound: Option<u64>,
        mut verdicts: Vec<InstanceVerdict>,
        wall: Duration,
    ) -> Self {
        verdicts.sort_by(|a, b| a.instance.cmp(&b.instance));
        SuiteReport {
            suite: suite.into(),
            seed,
            bound,
            instances: verdicts.len(),
            passed: verdicts.iter().all(|v| v.status != Status::Fail),
            verdicts,
            wall,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceVerdict> {
        self.verdicts.iter().filter(|v| v.status == Status::Fail)
    }

    pub fn converse_gaps(&self) -> impl Iterator<Item = &InstanceVerdict> {
        self.verdicts.iter().filter(|v| v.status == Status::ConverseGap)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is total")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} — {} instances, {} failures, {} converse gaps ({:.2?})",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.instances,
            self.failures().count(),
            self.converse_gaps().count(),
            self.wall,
        )?;
        for v in self.failures() {
            writeln!(f, "  FAIL {}", v.instance)?;
            if let Some(ce) = &v.counterexample {
                writeln!(f, "       {ce}")?;
            }
        }
        for v in self.converse_gaps() {
            writeln!(f, "  gap  {} — {}", v.instance, v.detail.as_deref().unwrap_or(""))?;
        }
        Ok(())
    }
}
