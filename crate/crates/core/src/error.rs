use thiserror::Error;

use crate::weight::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: the rank must be at least 1")]
    InvalidRank(i64),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("division by zero: pairing against the zero weight")]
    DivisionByZero,

    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(Weight),

    #[error("weight {0} is not in the root lattice")]
    NotInRootLattice(Weight),

    #[error("weight {0} is not in the positive cone")]
    NotInPositiveCone(Weight),

    #[error("{0} is not a positive odd root")]
    NotOddRoot(Weight),

    #[error("index {value} out of range (allowed {min}..={max})")]
    OutOfRange { value: i64, min: i64, max: i64 },

    #[error("Weyl group enumeration for rank {rank} exceeds the cap {cap}")]
    EnumerationCap { rank: usize, cap: usize },

    #[error("{what} = {value} exceeds the limit {max}")]
    ResourceLimit { what: &'static str, value: u64, max: u64 },

    #[error("expansion does not terminate: {0}")]
    NonTerminatingExpansion(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::EnumerationCap { .. } | Error::ResourceLimit { .. } | Error::Overflow(_) => 4,
            _ => 2,
        }
    }
}
