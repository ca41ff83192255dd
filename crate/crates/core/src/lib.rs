//! Computer algebra for big polygon spaces: length-vector combinatorics,
//! Gröbner bases over ℚ[t_1, …, t_r], graded free resolutions and syzygy
//! orders of equivariant cohomology modules.

pub mod acceptance;
pub mod bigpoly;
pub mod error;
pub mod gradedmod;
pub mod lenvec;
pub mod polyring;

pub use error::{Error, Result};
pub use lenvec::{Chamber, LengthVector, SubsetMask};
pub use polyring::{FreeModule, FreeModuleElement, GbConfig, Poly, PolyMatrix, Rational};
