use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One failed trial, with the instance in document form so it can be replayed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub trial: usize,
    pub reason: String,
    pub instance: Value,
}

/// Outcome of a suite run. `agreements + counterexamples.len() == trials`;
/// trials whose generator could not meet the suite's hypothesis are `skipped`
/// and are not counted as trials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub kind: String,
    pub schema: u64,
    pub suite: String,
    pub ring: String,
    pub seed: u64,
    pub trials: usize,
    pub agreements: usize,
    pub counterexamples: Vec<CounterexampleRecord>,
    pub skipped: usize,
    /// Trials on which the property under test held (YES verdicts).
    pub positives: usize,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.agreements == self.trials
    }

    /// Equality ignoring wall time.
    pub fn same_outcome(&self, other: &SuiteReport) -> bool {
        SuiteReport { wall_time_ms: 0, ..self.clone() } == SuiteReport { wall_time_ms: 0, ..other.clone() }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    pub fn to_string_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(v: &Value) -> serde_json::Result<Self> {
        serde_json::from_value(v.clone())
    }
}
