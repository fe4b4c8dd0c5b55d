//! Verification harness for `subproj-core`: random instance generators,
//! exhaustive oracles over small finite rings, and named suites that check
//! each characterization on generated or fixed instances.

pub mod config;
pub mod oracle;
pub mod random;
pub mod report;
pub mod suites;

pub use config::{Execution, TrialConfig};
pub use report::{CounterexampleRecord, SuiteReport};
pub use suites::{run_suite, SUITES};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unsuitable ring: {0}")]
    UnsuitableRing(String),
    #[error("search space too large: {0} raw matrix tuples")]
    SearchSpaceTooLarge(u128),
    #[error(transparent)]
    Core(#[from] subproj_core::Error),
}
