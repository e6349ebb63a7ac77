use thiserror::Error;

use crate::complexes::Simplex;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation requires field coefficients, got {0}")]
    FieldRequired(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid coefficient spec {0:?} (expected z, q or p:<prime>)")]
    BadCoefficients(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index ({row}, {col}) out of bounds for a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("repeated vertex {vertex:?} in simplex")]
    RepeatedVertex { vertex: String },
    #[error("empty vertex label")]
    EmptyLabel,
    #[error("complex is empty")]
    EmptyComplex,
    #[error("unknown cover label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("empty label set")]
    EmptySigma,
    #[error("part {part:?} is not a subcomplex of the base: {simplex} missing")]
    NotSubcomplex { part: String, simplex: Simplex },
    #[error("cover misses {} simplices of the base", .0.len())]
    Uncovered(Vec<Simplex>),
    #[error("simplex {0} is not in the base complex")]
    NotInBase(Simplex),
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("relation references undeclared label {0:?}")]
    UndeclaredLabel(String),
    #[error("double complex identities violated")]
    BicomplexViolated,
    #[error("theorem falsified at k = {k}: {detail}")]
    TheoremFalsified { k: usize, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
