//! Scenario files, batch runs across quantization schemes, verification
//! checks and report output. This is what the `symlab` binary drives.

mod checks;
mod report;
mod run;
mod scenario;

use std::path::PathBuf;

use thiserror::Error;

use crate::quantum::QuantumError;

pub use checks::{run_checks, CheckOutcome, CheckStatus, CheckSummary, COMMUTATOR_TOL, UNITARY_TIMES, UNITARY_TOL};
pub use report::{emit_report, format_report, Cell, Format, Metadata, PairResidual, Report, UncertaintyRow, CSV_HEADER};
pub use run::{packet_boundary_ratio, run_scenario, RunOptions, PACKET_BOUNDARY_TOL};
pub use scenario::{Checks, Fixtures, Scenario};

/// An invalid scenario field, located by its path in the document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {message}")]
pub struct ConfigError {
    pub path: String,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum LabError {
    #[error("config error at {0}")]
    Config(#[from] ConfigError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Quantum(#[from] QuantumError),
}

impl LabError {
    /// Process exit status for this error: 2 for configuration problems,
    /// 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Config(_) => 2,
            LabError::Io { .. } | LabError::Quantum(_) => 1,
        }
    }
}
