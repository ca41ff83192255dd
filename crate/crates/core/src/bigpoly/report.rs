use serde::{Deserialize, Serialize};

use super::iota::ht_syzygy_order;
use super::params::{betti_sum_e, poincare_polynomial_x, IntPoly, SpaceParams};
use super::ring::pairing_matrix;
use crate::error::Result;
use crate::lenvec::LengthVector;
use crate::polyring::GbConfig;

/// Invariants of one `(ℓ, a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub representative: LengthVector,
    pub chamber_id: String,
    pub a: u32,
    pub b: u32,
    pub mu: usize,
    pub syzord: usize,
    /// `syzord = μ − 1`.
    pub conjecture_ok: bool,
    #[serde(rename = "poincare_X")]
    pub poincare_x: IntPoly,
    #[serde(rename = "betti_sum_E")]
    pub betti_sum_e: i64,
    pub pairing_perfect: bool,
}

pub fn analyze(p: &SpaceParams, cfg: &GbConfig) -> Result<Report> {
    let l = p.lengths();
    let mu = l.mu()?;
    let syzord = ht_syzygy_order(p, cfg)?;
    Ok(Report {
        representative: l.clone(),
        chamber_id: l.chamber()?.id(),
        a: p.a(),
        b: p.b(),
        mu,
        syzord,
        conjecture_ok: syzord + 1 == mu,
        poincare_x: poincare_polynomial_x(p),
        betti_sum_e: betti_sum_e(l)?,
        pairing_perfect: pairing_matrix(p).is_signed_permutation(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_report_round_trips() {
        let p = SpaceParams::new(LengthVector::from_integers(&[1, 1, 1]).unwrap(), 1, 1).unwrap();
        let rep = analyze(&p, &GbConfig::default()).unwrap();
        assert_eq!((rep.syzord, rep.mu, rep.conjecture_ok), (1, 2, true));
        let js = serde_json::to_string(&rep).unwrap();
        assert!(js.contains("\"poincare_X\":[1,0,0,3,3,0,0,1]"));
        let back: Report = serde_json::from_str(&js).unwrap();
        assert_eq!(back, rep);
    }
}
