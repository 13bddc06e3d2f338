use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("coefficient at exponent {exponent} is outside the known window (hi = {hi})")]
    WindowUnderflow { exponent: i64, hi: i64 },
    #[error("invalid Kac coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("twisted gradings (r = {0}) are not supported")]
    UnsupportedTwisted(u32),
    #[error("closed formula and brute-force annihilator disagree: {0}")]
    Mismatch(String),
    #[error("containment violated: {0}")]
    ContainmentViolation(String),
    #[error("surjectivity reconstruction failed: {0}")]
    SurjectivityFailure(String),
    #[error("residue diagram does not commute: {0}")]
    DiagramMismatch(String),
    #[error("connection is not of oper shape: {0}")]
    NotOperShape(String),
    #[error("no slope certificate found: {0}")]
    NoCertificate(String),
    #[error("no cyclic vector among the basis vectors")]
    CyclicFailure,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
