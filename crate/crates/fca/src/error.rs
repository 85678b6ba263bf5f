//! Crate-wide error type.
//!
//! Every fallible operation reports one of the variants below. [`Error::kind`]
//! returns the stable variant name used in CLI diagnostics, which are printed
//! as `ERROR <kind>: <detail>`.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate name: {0}")]
    DuplicateName(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("names must be non-empty")]
    EmptyName,

    #[error("set was built against a different context")]
    ContextMismatch,

    #[error("concept count exceeds the limit of {limit}")]
    CapacityExceeded { limit: usize },

    #[error("operation requires at least one concept")]
    EmptyInput,

    #[error("extent and intent do not form a concept")]
    InvalidConcept,

    #[error("no scaling rule covers column: {0}")]
    UncoveredColumn(String),

    #[error("value {value} in column {column} is not covered by any bin or threshold")]
    ValueOutOfRange { column: String, value: f64 },

    #[error("unknown category {value:?} in column {column}")]
    UnknownCategory { column: String, value: String },

    #[error("invalid scaling scheme: {0}")]
    InvalidScheme(String),

    #[error("cell in row {row}, column {column} does not match the declared column kind")]
    CellKindMismatch { row: String, column: String },

    #[error("row {row} has no value in column {column}")]
    MissingCell { row: String, column: String },

    #[error("malformed scheme file, line {line}: {detail}")]
    MalformedScheme { line: usize, detail: String },

    #[error("unknown attribute: {0}")]
    UnknownAttribute(String),

    #[error("object {object} carries {marks} location marks, expected exactly 1")]
    NonPartition { object: String, marks: usize },

    #[error("malformed header: {0}")]
    MalformedHeader(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("illegal incidence character {ch:?} on line {line}")]
    IllegalIncidenceChar { line: usize, ch: char },

    #[error("row on line {line} has the wrong number of fields")]
    RaggedRow { line: usize },

    #[error("cell {value:?} in numeric column {column} is not a finite number")]
    NonNumericCell { column: String, value: String },

    #[error("empty or missing header row")]
    EmptyHeader,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-parsable name of this error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DuplicateName(_) => "DuplicateName",
            Error::UnknownName(_) => "UnknownName",
            Error::EmptyName => "EmptyName",
            Error::ContextMismatch => "ContextMismatch",
            Error::CapacityExceeded { .. } => "CapacityExceeded",
            Error::EmptyInput => "EmptyInput",
            Error::InvalidConcept => "InvalidConcept",
            Error::UncoveredColumn(_) => "UncoveredColumn",
            Error::ValueOutOfRange { .. } => "ValueOutOfRange",
            Error::UnknownCategory { .. } => "UnknownCategory",
            Error::InvalidScheme(_) => "InvalidScheme",
            Error::CellKindMismatch { .. } => "CellKindMismatch",
            Error::MissingCell { .. } => "MissingCell",
            Error::MalformedScheme { .. } => "MalformedScheme",
            Error::UnknownAttribute(_) => "UnknownAttribute",
            Error::NonPartition { .. } => "NonPartition",
            Error::MalformedHeader(_) => "MalformedHeader",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::IllegalIncidenceChar { .. } => "IllegalIncidenceChar",
            Error::RaggedRow { .. } => "RaggedRow",
            Error::NonNumericCell { .. } => "NonNumericCell",
            Error::EmptyHeader => "EmptyHeader",
            Error::Io(_) => "Io",
        }
    }
}
