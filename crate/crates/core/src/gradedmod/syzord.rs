//! Ext-vanishing and syzygy order.
//!
//! `M` is a `k`-th syzygy iff `Ext^i(Tr M, R) = 0` for `1 ≤ i ≤ k`, where
//! `Tr M` is the Auslander–Bridger transpose of a minimal presentation.

use super::presentation::GradedPresentation;
use crate::error::Result;
use crate::polyring::{buchberger, kernel, FreeModuleElement, GbConfig, PolyMatrix};

/// A free resolution of a presented module, extended one step at a time.
struct LazyResolution<'a> {
    maps: Vec<PolyMatrix>,
    complete: bool,
    cfg: &'a GbConfig,
}

impl<'a> LazyResolution<'a> {
    fn new(p: &GradedPresentation, cfg: &'a GbConfig) -> Self {
        let complete = p.num_relations() == 0;
        let maps = if complete { Vec::new() } else { vec![p.relations().clone()] };
        LazyResolution { maps, complete, cfg }
    }

    /// Ensures `d_1, …, d_n` are available (or the resolution is complete).
    fn ensure(&mut self, n: usize) -> Result<()> {
        while !self.complete && self.maps.len() < n {
            let k = kernel(self.maps.last().expect("nonempty"), self.cfg)?;
            if k.ncols() == 0 {
                self.complete = true;
            } else {
                self.maps.push(k);
            }
        }
        Ok(())
    }

    /// `Ext^i(M, R) = ker d_{i+1}^T / im d_i^T`, tested by reducing
    /// generators of the kernel modulo a Gröbner basis of the image.
    fn ext_vanishes(&mut self, i: usize) -> Result<bool> {
        self.ensure(i + 1)?;
        if i > self.maps.len() {
            return Ok(true);
        }
        let di = &self.maps[i - 1];
        let cycles: Vec<FreeModuleElement> = match self.maps.get(i) {
            Some(next) => kernel(&next.transpose(), self.cfg)?.columns,
            None => (0..di.ncols()).map(FreeModuleElement::basis).collect(),
        };
        if cycles.is_empty() {
            return Ok(true);
        }
        let image = di.transpose();
        let gb = buchberger(&image.columns, &image.target, self.cfg)?;
        Ok(cycles.iter().all(|c| gb.contains(c)))
    }
}

/// Whether `Ext^i(coker P, R)` vanishes, for `i ≥ 1`.
pub fn ext_vanishes(p: &GradedPresentation, i: usize, cfg: &GbConfig) -> Result<bool> {
    assert!(i >= 1, "Ext index starts at 1");
    let p = p.minimize(cfg)?;
    LazyResolution::new(&p, cfg).ext_vanishes(i)
}

/// Largest `k ≤ r` such that `coker P` is a `k`-th syzygy; free modules
/// (no relations after minimalization) have order `r`.
pub fn syzygy_order(p: &GradedPresentation, cfg: &GbConfig) -> Result<usize> {
    let r = p.nvars();
    let m = p.minimize(cfg)?;
    if m.num_relations() == 0 {
        return Ok(r);
    }
    let tr = m.auslander_transpose();
    let mut res = LazyResolution::new(&tr, cfg);
    for i in 1..=r {
        if !res.ext_vanishes(i)? {
            return Ok(i - 1);
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedmod::koszul::{koszul_syzygy_presentation, KoszulData};
    use crate::polyring::{FreeModule, Poly};

    #[test]
    fn ext_of_artinian_quotient() {
        let data = KoszulData::new(2, 1).unwrap();
        let k0 = koszul_syzygy_presentation(0, &data).unwrap();
        let cfg = GbConfig::default();
        assert!(ext_vanishes(&k0, 1, &cfg).unwrap());
        assert!(!ext_vanishes(&k0, 2, &cfg).unwrap());
        let free = GradedPresentation::free(2, FreeModule::uniform(2, 0));
        assert!(ext_vanishes(&free, 1, &cfg).unwrap());
        assert!(ext_vanishes(&free, 3, &cfg).unwrap());
    }

    #[test]
    fn transpose_ext_of_k1() {
        let data = KoszulData::new(2, 1).unwrap();
        let k1 = koszul_syzygy_presentation(1, &data).unwrap();
        let tr = k1.minimize(&GbConfig::default()).unwrap().auslander_transpose();
        let cfg = GbConfig::default();
        assert!(ext_vanishes(&tr, 1, &cfg).unwrap());
        assert!(!ext_vanishes(&tr, 2, &cfg).unwrap());
    }

    #[test]
    fn koszul_orders_small() {
        let cfg = GbConfig::default();
        for r in 1..=3 {
            let data = KoszulData::new(r, 1).unwrap();
            for k in 0..=r {
                let p = koszul_syzygy_presentation(k, &data).unwrap();
                assert_eq!(syzygy_order(&p, &cfg).unwrap(), k, "r={r} k={k}");
            }
        }
    }

    #[test]
    fn torsion_module_has_order_zero() {
        let m = PolyMatrix::from_rows(
            FreeModule::new(vec![0]),
            FreeModule::new(vec![2]),
            &[vec![Poly::var_pow(1, 1)]],
        )
        .unwrap();
        let p = GradedPresentation::new(2, m).unwrap();
        assert_eq!(syzygy_order(&p, &GbConfig::default()).unwrap(), 0);
    }
}
