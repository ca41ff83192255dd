//! Exact polynomial arithmetic over ℚ, Gröbner bases and syzygies for
//! submodules of graded free modules.

mod groebner;
mod module;
mod monomial;
mod poly;
mod rational;
mod syzygy;
mod terms;
mod text;

pub use groebner::{buchberger, buchberger_tracked, minimal_generator_indices, normal_form, GbConfig, GroebnerBasis};
pub use module::{FreeModule, FreeModuleElement, PolyMatrix};
pub use monomial::{ModuleOrderKind, Monomial, MonomialOrder, TermOrder, MAX_VARS};
pub use poly::Poly;
pub use rational::Rational;
pub use syzygy::{kernel, syzygy_module};
pub use text::MatrixJson;
