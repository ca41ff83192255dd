//! Invariants of big polygon spaces `X_{a,b}(ℓ)`: Poincaré polynomials,
//! the cohomology ring, the map `ι` and the equivariant syzygy order.

mod equilateral;
mod iota;
mod params;
mod report;
mod ring;

pub use equilateral::{equilateral_decomposition, EquilateralDecomposition, Summand, SummandKind};
pub use iota::{
    coker_presentation, equivariant_hilbert_series, ht_syzygy_order, iota_matrix, kernel_presentation, IotaMatrix,
};
pub use params::{
    betti_sum_e, dimension, poincare_polynomial_e_equilateral, poincare_polynomial_x, IntPoly, SpaceParams,
};
pub(crate) use params::binomial;
pub use report::{analyze, Report};
pub use ring::{cohomology_basis, cup_product, pairing_matrix, ClassKind, CohomologyClass, PairingMatrix};
