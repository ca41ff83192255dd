use thiserror::Error;

use crate::lenvec::SubsetMask;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length vector is not generic: l({witness}) = l({complement})")]
    NonGeneric {
        witness: SubsetMask,
        complement: SubsetMask,
    },
    #[error("invalid length vector: {0}")]
    InvalidLengthVector(String),
    #[error("subsets {0} and {1} overlap")]
    OverlappingSets(SubsetMask, SubsetMask),
    #[error("ground set size {0} exceeds the supported maximum of {1}")]
    TooLarge(usize, usize),
    #[error("degree cap exceeded: reached degree {degree} with cap {cap}")]
    DegreeCapExceeded { degree: i64, cap: i64 },
    #[error("pair limit exceeded: more than {0} S-pairs processed")]
    PairLimitExceeded(usize),
    #[error("computation exceeded its time budget")]
    Timeout,
    #[error("r = {0} is even; the equilateral formula needs odd r")]
    EvenR(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
