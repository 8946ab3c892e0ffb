use thiserror::Error;

use crate::exactlin::FieldDesc;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldDesc, right: FieldDesc },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("structure constants violate the Leibniz identity on {failures} basis triple(s)")]
    NotLeibniz { failures: usize },

    #[error("{operation} is not supported over {field}; supported: {alternatives}")]
    UnsupportedField {
        operation: &'static str,
        field: FieldDesc,
        alternatives: &'static str,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumeration needs {required} subspaces, budget is {cap}")]
    BudgetExceeded { required: u128, cap: u64 },

    #[error("theorem violation detected (implementation bug): {0}")]
    TheoremViolation(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("premise violated: {premise}")]
    PremiseViolation { premise: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("reduction failed: {0}")]
    Reduction(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn ambient(left: usize, right: usize) -> Result<()> {
        if left == right {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { left, right })
        }
    }
}
