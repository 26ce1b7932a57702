use num_bigint::BigUint;
use thiserror::Error;

/// Errors surfaced by the engines, enumerators and the identity registry.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An enumeration cell would exceed the configured structure cap.
    #[error("enumeration cell {cell} has {estimate} structures, above the cap of {cap}")]
    CapacityExceeded {
        cell: String,
        estimate: BigUint,
        cap: u64,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    /// Exact polynomial division left a remainder.
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
