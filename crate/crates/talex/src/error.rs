use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("zero polynomial passed to {0}")]
    ZeroPolynomial(&'static str),

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("{0} must be prime, got {1}")]
    NotPrime(&'static str, u64),

    #[error("p and q must be distinct primes, got p = {0}, q = {1}")]
    EqualPrimes(u64, u64),

    #[error("invalid PD code: {0}")]
    InvalidPdCode(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid pretzel parameters: {0}")]
    InvalidPretzel(String),

    #[error("knot table error: {0}")]
    KnotTable(String),

    #[error("determinant vanishes: twisted homology is not torsion, polynomial undefined")]
    ZeroDeterminant,

    #[error("no nontrivial representation: {0}")]
    NoRepresentation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
