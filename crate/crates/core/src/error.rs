//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count {n} outside supported range {min}..={max}")]
    QubitCount { n: usize, min: usize, max: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("target qubit {target} out of range for {n_qubits} qubits")]
    TargetOutOfRange { target: usize, n_qubits: usize },

    #[error("duplicate target qubit {0}")]
    DuplicateTarget(usize),

    #[error("operator is not unitary (max |U\u{2020}U - I| = {0:.3e})")]
    NotUnitary(f64),

    #[error("matrix is not Hermitian (max |A - A\u{2020}| = {0:.3e})")]
    NotHermitian(f64),

    #[error("state is not normalized (|norm\u{b2} - 1| = {0:.3e})")]
    NotNormalized(f64),

    #[error("distribution is not normalized (sum = {0})")]
    NotADistribution(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("calibration data: {0}")]
    Calibration(String),

    #[error("pulse segment duration {duration:.3} exceeds the configured maximum {max:.3}")]
    SegmentTooLong { duration: f64, max: f64 },

    #[error("time integration did not reach tolerance {tol:.1e} after {refinements} substep refinements")]
    IntegrationTolerance { tol: f64, refinements: usize },

    #[error("eigensolver failed to converge")]
    EigenFailure,

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
