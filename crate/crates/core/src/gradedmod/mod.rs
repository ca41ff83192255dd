//! Graded modules over `ℚ[t_1, …, t_r]`: presentations, Koszul syzygies,
//! minimal free resolutions, Hilbert series and syzygy order.

mod hilbert;
mod koszul;
mod presentation;
mod resolution;
mod syzord;

pub use hilbert::HilbertSeries;
pub use koszul::{koszul_differential, koszul_syzygy_presentation, KoszulData};
pub use presentation::{GradedPresentation, PresentationJson};
pub use resolution::{hilbert_series, minimal_free_resolution, BettiEntry, BettiTable, FreeResolution};
pub use syzord::{ext_vanishes, syzygy_order};
