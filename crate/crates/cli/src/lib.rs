//! Seeded, reproducible experiment harness on top of `taquin`.
//!
//! An [`ExperimentConfig`] fully determines the output of
//! [`run_experiment`]; trials run on a thread pool but are merged by trial
//! index. [`run_property_suite`] drives the exact and statistical checks.

pub mod config;
pub mod experiments;
pub mod properties;
pub mod report;

pub use config::{Experiment, ExperimentConfig};
pub use experiments::run_experiment;
pub use properties::{run_property_suite, Scope, Suite, SuiteConfig, SuiteReport};
pub use report::{Check, Report, Table};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] taquin::Error),
    #[error("invalid config: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
