use subproj_core::Ring;

use crate::HarnessError;

pub const MAX_WINDOW: usize = 5;
pub const MAX_GENERATORS: usize = 3;
pub const MAX_ENTRY: u64 = 5;

/// How trials are scheduled. Results are merged by trial index either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Bounds for random instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub ring: Ring,
    /// Longest window of a random complex.
    pub max_window: usize,
    pub max_generators: usize,
    /// Integer entries are drawn from `[-bound, bound]`; ignored over `Z/m`.
    pub entry_bound: u64,
    pub trials: usize,
    pub seed: u64,
    pub execution: Execution,
}

impl TrialConfig {
    pub fn new(ring: Ring, trials: usize, seed: u64) -> Self {
        TrialConfig {
            ring,
            max_window: 3,
            max_generators: 2,
            entry_bound: 3,
            trials,
            seed,
            execution: Execution::default(),
        }
    }

    pub fn with_window(mut self, w: usize) -> Self {
        self.max_window = w;
        self
    }

    pub fn with_generators(mut self, g: usize) -> Self {
        self.max_generators = g;
        self
    }

    pub fn with_entry_bound(mut self, b: u64) -> Self {
        self.entry_bound = b;
        self
    }

    pub fn with_execution(mut self, e: Execution) -> Self {
        self.execution = e;
        self
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |msg: String| Err(HarnessError::InvalidConfig(msg));
        if self.max_window == 0 || self.max_window > MAX_WINDOW {
            return bad(format!("window length must be in 1..={MAX_WINDOW}"));
        }
        if self.max_generators > MAX_GENERATORS {
            return bad(format!("at most {MAX_GENERATORS} generators per component"));
        }
        if self.entry_bound == 0 || self.entry_bound > MAX_ENTRY {
            return bad(format!("entry bound must be in 1..={MAX_ENTRY}"));
        }
        Ok(())
    }
}
