use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A model input violates its documented range.
    #[error("invalid parameter `{field}`: {reason}")]
    Parameter { field: &'static str, reason: String },

    /// Input outside the domain where the model is valid.
    #[error("{0}")]
    Domain(String),

    #[error(
        "mission infeasible at {range_mi} mi: climb and descent need {min_range_mi:.6} mi of ground distance"
    )]
    InfeasibleMission { range_mi: f64, min_range_mi: f64 },

    #[error("mass budget infeasible: payload exceeds available non-empty mass by {shortfall_kg:.6} kg")]
    InfeasibleMassBudget { shortfall_kg: f64 },

    /// An input was structurally valid but broke an operation precondition.
    #[error("contract violated: {0}")]
    Contract(String),

    /// Malformed or inconsistent dataset contents.
    #[error("data error: {0}")]
    Data(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error in `{spec}`, field `{field}`: {reason}")]
    Validation {
        spec: String,
        field: String,
        reason: String,
    },

    #[error("duplicate {list} name `{name}`")]
    Duplicate { list: &'static str, name: String },

    #[error("at ewf {ewf}, failure fraction {failure_fraction}: {source}")]
    SweepPoint {
        ewf: f64,
        failure_fraction: f64,
        source: Box<Error>,
    },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn param(field: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            field,
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
