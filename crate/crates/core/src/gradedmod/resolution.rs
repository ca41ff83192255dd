use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::hilbert::HilbertSeries;
use super::presentation::GradedPresentation;
use crate::error::Result;
use crate::polyring::{kernel, FreeModule, GbConfig, MatrixJson, PolyMatrix};

/// A graded free resolution `F_0 ← F_1 ← ⋯ ← F_n` with `d_i : F_i → F_{i−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    nvars: usize,
    modules: Vec<FreeModule>,
    maps: Vec<PolyMatrix>,
    complete: bool,
}

impl FreeResolution {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `F_0, …, F_n`.
    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    /// `d_1, …, d_n`.
    pub fn maps(&self) -> &[PolyMatrix] {
        &self.maps
    }

    /// Number of nonzero differentials.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// False when the computation stopped at the requested length before
    /// reaching a zero kernel.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// True when no differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|d| !d.has_unit_entry())
    }

    /// Checks `d_i ∘ d_{i+1} = 0` symbolically.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&w[1]).is_zero())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|f| f.rank()).collect()
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, f) in self.modules.iter().enumerate() {
            for &d in &f.degrees {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    /// Alternating sum of the free modules.
    pub fn hilbert_series(&self) -> HilbertSeries {
        self.modules
            .iter()
            .enumerate()
            .fold(HilbertSeries::zero(self.nvars), |acc, (i, f)| {
                let s = HilbertSeries::of_free(self.nvars, f).scaled(if i % 2 == 0 { 1 } else { -1 });
                acc.add(&s).expect("same ring")
            })
    }

    pub fn to_json(&self) -> Vec<MatrixJson> {
        self.maps.iter().map(MatrixJson::from).collect()
    }
}

/// Graded Betti numbers: `(homological degree, internal degree) → rank`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), usize>,
}

/// One CSV row of a Betti table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub homological_degree: usize,
    pub internal_degree: i64,
    pub rank: usize,
}

impl BettiTable {
    pub fn rows(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, d), &rank)| BettiEntry {
                homological_degree: i,
                internal_degree: d,
                rank,
            })
            .collect()
    }

    /// Total rank in each homological degree.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; n];
        for (&(i, _), &k) in &self.entries {
            out[i] += k;
        }
        out
    }
}

/// Minimal graded free resolution of `coker P`, stopping after `max_len`
/// differentials.
pub fn minimal_free_resolution(p: &GradedPresentation, max_len: usize, cfg: &GbConfig) -> Result<FreeResolution> {
    let p = p.minimize(cfg)?;
    let mut res = FreeResolution {
        nvars: p.nvars(),
        modules: vec![p.generators().clone()],
        maps: Vec::new(),
        complete: true,
    };
    if p.num_relations() == 0 {
        return Ok(res);
    }
    res.maps.push(p.relations().clone());
    res.modules.push(p.relations().source.clone());
    loop {
        let k = kernel(res.maps.last().expect("nonempty"), cfg)?;
        if k.ncols() == 0 {
            break;
        }
        if res.maps.len() >= max_len {
            res.complete = false;
            break;
        }
        res.modules.push(k.source.clone());
        res.maps.push(k);
    }
    Ok(res)
}

/// Hilbert series of `coker P` from its minimal free resolution.
pub fn hilbert_series(p: &GradedPresentation, cfg: &GbConfig) -> Result<HilbertSeries> {
    Ok(minimal_free_resolution(p, usize::MAX, cfg)?.hilbert_series())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedmod::koszul::{koszul_syzygy_presentation, KoszulData};

    #[test]
    fn koszul_resolution_is_minimal() {
        let data = KoszulData::new(3, 1).unwrap();
        let p = koszul_syzygy_presentation(0, &data).unwrap();
        let res = minimal_free_resolution(&p, 10, &GbConfig::default()).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 3, 1]);
        assert!(res.is_minimal() && res.is_complex() && res.is_complete());
        assert_eq!(res.betti_table().entries.get(&(3, 6)), Some(&1));
    }

    #[test]
    fn koszul_hilbert_numerator() {
        let data = KoszulData::new(2, 1).unwrap();
        let p = koszul_syzygy_presentation(0, &data).unwrap();
        let h = hilbert_series(&p, &GbConfig::default()).unwrap();
        assert_eq!(h, HilbertSeries::from_numerator(2, [(0, 1), (2, -2), (4, 1)]));
    }

    #[test]
    fn free_module_has_length_zero() {
        let p = GradedPresentation::free(3, FreeModule::new(vec![0, 4]));
        let res = minimal_free_resolution(&p, 10, &GbConfig::default()).unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(hilbert_series(&p, &GbConfig::default()).unwrap(), HilbertSeries::from_numerator(3, [(0, 1), (4, 1)]));
    }
}
