use serde::{Deserialize, Serialize};

use super::params::binomial;
use crate::error::Result;
use crate::gradedmod::{hilbert_series, koszul_syzygy_presentation, GradedPresentation, HilbertSeries, KoszulData};
use crate::polyring::{FreeModule, GbConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SummandKind {
    /// `R`.
    Free,
    /// The Koszul syzygy module `K_k`.
    Koszul(usize),
}

/// `multiplicity` copies of `M[shift]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub kind: SummandKind,
    pub shift: i64,
    pub multiplicity: usize,
}

/// Summand list for `H_T^*` of the equilateral space with `r = 2m + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquilateralDecomposition {
    pub m: usize,
    pub a: u32,
    pub b: u32,
    pub summands: Vec<Summand>,
}

/// `⊕_{j<m} C(r,j) R[jd] ⊕ K_m[md] ⊕ K_{m+2}[(m+1)d − d̄ + 2b − 1]
/// ⊕ ⊕_{j>m+1} C(r,j) R[jd − d̄ − 1]`.
///
/// The `K_{m+2}` generators are `Σ ±t_j^b [W_J]` with `|J| = m`, which is
/// where the `2b` comes from; for `b = 1` the shift is `(m+1)d − d̄ + 1`.
pub fn equilateral_decomposition(m: usize, a: u32, b: u32) -> EquilateralDecomposition {
    let r = 2 * m + 1;
    let d = 2 * a as i64 + 2 * b as i64 - 1;
    let dbar = 2 * a as i64 - 1;
    let mut summands = Vec::new();
    for j in 0..m {
        summands.push(Summand {
            kind: SummandKind::Free,
            shift: j as i64 * d,
            multiplicity: binomial(r, j) as usize,
        });
    }
    summands.push(Summand {
        kind: SummandKind::Koszul(m),
        shift: m as i64 * d,
        multiplicity: 1,
    });
    summands.push(Summand {
        kind: SummandKind::Koszul(m + 2),
        shift: (m as i64 + 1) * d - dbar + 2 * b as i64 - 1,
        multiplicity: 1,
    });
    for j in m + 2..=r {
        summands.push(Summand {
            kind: SummandKind::Free,
            shift: j as i64 * d - dbar - 1,
            multiplicity: binomial(r, j) as usize,
        });
    }
    EquilateralDecomposition { m, a, b, summands }
}

impl EquilateralDecomposition {
    pub fn r(&self) -> usize {
        2 * self.m + 1
    }

    fn piece(&self, s: &Summand) -> Result<GradedPresentation> {
        let r = self.r();
        let base = match s.kind {
            SummandKind::Free => GradedPresentation::free(r, FreeModule::new(vec![0])),
            SummandKind::Koszul(k) => koszul_syzygy_presentation(k, &KoszulData::new(r, self.b)?)?,
        };
        Ok(base.shifted(s.shift))
    }

    /// The direct sum as one presentation.
    pub fn presentation(&self) -> Result<GradedPresentation> {
        let mut acc = GradedPresentation::zero(self.r());
        for s in &self.summands {
            let piece = self.piece(s)?;
            for _ in 0..s.multiplicity {
                acc = acc.direct_sum(&piece)?;
            }
        }
        Ok(acc)
    }

    /// Sum of the summands' series, each computed from its own resolution.
    pub fn hilbert_series(&self, cfg: &GbConfig) -> Result<HilbertSeries> {
        let mut acc = HilbertSeries::zero(self.r());
        for s in &self.summands {
            let h = hilbert_series(&self.piece(s)?, cfg)?;
            acc = acc.add(&h.scaled(s.multiplicity as i64))?;
        }
        Ok(acc)
    }
}
