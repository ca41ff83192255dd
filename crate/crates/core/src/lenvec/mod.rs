//! Length vectors, subsets of `[r]`, shuffle signs and chambers.

mod chamber;
mod mask;
mod vector;

pub use chamber::{enumerate_chambers, enumerate_chambers_checked, Chamber, ChamberEnumeration, ChamberRecord};
pub use mask::{shuffle_sign, SubsetMask, MAX_R};
pub use vector::{chamber_of, LengthVector};

