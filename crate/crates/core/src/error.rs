//! Crate-wide error type.

/// Errors produced by the certification toolkit.
#[derive(thiserror::Error, Debug)]
pub enum CoreError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")]
    NotPositiveSemidefinite { min_eig: f64 },

    #[error("matrix is not positive definite (min eigenvalue {min_eig:.3e})")]
    NotPositiveDefinite { min_eig: f64 },

    #[error("not dominated: kernel of Q1 is not contained in kernel of Q2")]
    NotDominated,

    #[error("form is negative: value {value:.6e} at the reported witness (grade {grade})")]
    NegativeForm {
        value: f64,
        witness_x: Vec<f64>,
        witness_y: Vec<f64>,
        grade: crate::Grade,
    },

    #[error("point is not a critical zero (value {value}, gradient norm {grad_norm})")]
    NotCriticalZero { value: String, grad_norm: String },

    #[error("family degenerate at ({p}, {q}): interpolation nullspace has dimension {dim}")]
    DegenerateFamily { p: String, q: String, dim: usize },

    #[error("parameters outside the validity region: {0}")]
    InvalidParameters(String),

    #[error("inconsistent evidence: {0}")]
    InconsistentEvidence(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CoreError {
    pub(crate) fn dims(expected: impl Into<String>, got: impl Into<String>) -> Self {
        CoreError::DimensionMismatch {
            expected: expected.into(),
            got: got.into(),
        }
    }
}
