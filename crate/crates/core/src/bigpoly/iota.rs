//! The map `ι : H^T_*(X^c) → H^T_*(X)` on the bases `[V_J], [W_J]` and its
//! cokernel and kernel.
//!
//! Homological degrees are negated so that every module is graded in the
//! usual (cohomological) way with `deg t_j = 2`: `[V_J]` sits in degree
//! `−|J| d` and `[W_J]` in degree `−|J| d − d̄`.

use super::params::SpaceParams;
use crate::error::Result;
use crate::gradedmod::{hilbert_series, syzygy_order, GradedPresentation, HilbertSeries};
use crate::lenvec::{shuffle_sign, SubsetMask};
use crate::polyring::{kernel, FreeModule, FreeModuleElement, GbConfig, Monomial, PolyMatrix, Rational};

/// `ι` together with the labels of its rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaMatrix {
    /// Row labels `[V_J]`, all `J` in `(|J|, lexicographic)` order.
    pub rows: Vec<SubsetMask>,
    /// Short subsets labelling both the `[V_J]` and the `[W_J]` columns.
    pub short: Vec<SubsetMask>,
    /// Columns `[V_J]` (J short) followed by `[W_J]` (J short).
    pub matrix: PolyMatrix,
}

fn w_column(j: SubsetMask, b: u32, row_of: impl Fn(SubsetMask) -> Option<usize>) -> FreeModuleElement {
    let r = j.r();
    FreeModuleElement::from_terms((1..=r).filter(|&i| !j.contains(i)).filter_map(|i| {
        let row = row_of(j.with(i))?;
        let sign = shuffle_sign(j, SubsetMask::singleton(r, i)).expect("disjoint");
        Some((Rational::from_integer(sign as i64), Monomial::var_pow(i - 1, b), row))
    }))
}

/// `ι[V_J] = [V_J]`, `ι[W_J] = Σ_{j ∉ J} ε(J, j) t_j^b [V_{J ∪ j}]`.
pub fn iota_matrix(p: &SpaceParams) -> Result<IotaMatrix> {
    let r = p.r();
    let (d, dbar, b) = (p.d(), p.dbar(), p.b());
    let rows = SubsetMask::all_graded(r);
    let short: Vec<SubsetMask> = rows.iter().copied().filter(|&j| p.is_short(j)).collect();
    let row_of = |j: SubsetMask| rows.iter().position(|&x| x == j);
    let target = FreeModule::new(rows.iter().map(|j| -(j.len() as i64) * d).collect());
    let mut degrees = Vec::new();
    let mut columns = Vec::new();
    for &j in &short {
        degrees.push(-(j.len() as i64) * d);
        columns.push(FreeModuleElement::basis(row_of(j).expect("row")));
    }
    for &j in &short {
        degrees.push(-(j.len() as i64) * d - dbar);
        columns.push(w_column(j, b, row_of));
    }
    let matrix = PolyMatrix::new(target, FreeModule::new(degrees), columns)?;
    Ok(IotaMatrix { rows, short, matrix })
}

/// `coker ι`: generators `[V_J]` for long `J`, one relation per short `J`
/// (the `[W_J]` column restricted to long rows), zero relations dropped.
pub fn coker_presentation(p: &SpaceParams) -> Result<GradedPresentation> {
    let r = p.r();
    let (d, dbar, b) = (p.d(), p.dbar(), p.b());
    let all = SubsetMask::all_graded(r);
    let long: Vec<SubsetMask> = all.iter().copied().filter(|&j| !p.is_short(j)).collect();
    let short: Vec<SubsetMask> = all.iter().copied().filter(|&j| p.is_short(j)).collect();
    let row_of = |j: SubsetMask| long.iter().position(|&x| x == j);
    let target = FreeModule::new(long.iter().map(|j| -(j.len() as i64) * d).collect());
    let source = FreeModule::new(short.iter().map(|j| -(j.len() as i64) * d - dbar).collect());
    let columns = short.iter().map(|&j| w_column(j, b, row_of)).collect();
    GradedPresentation::new(r, PolyMatrix::new(target, source, columns)?)
}

/// `ker ι` as a presented module: minimal generators of the kernel, with
/// their own syzygies as relations.
pub fn kernel_presentation(p: &SpaceParams, cfg: &GbConfig) -> Result<GradedPresentation> {
    let iota = iota_matrix(p)?;
    let k = kernel(&iota.matrix, cfg)?;
    let rel = kernel(&k, cfg)?;
    GradedPresentation::new(p.r(), rel)
}

/// Syzygy order of `H_T^*(X)`, computed as that of `coker ι`.
pub fn ht_syzygy_order(p: &SpaceParams, cfg: &GbConfig) -> Result<usize> {
    syzygy_order(&coker_presentation(p)?, cfg)
}

/// `HS(coker ι) · x^{rd} + HS(ker ι) · x^{rd − 1}`.
pub fn equivariant_hilbert_series(p: &SpaceParams, cfg: &GbConfig) -> Result<HilbertSeries> {
    let rd = p.r() as i64 * p.d();
    let coker = hilbert_series(&coker_presentation(p)?, cfg)?.shifted(rd);
    let ker = hilbert_series(&kernel_presentation(p, cfg)?, cfg)?.shifted(rd - 1);
    coker.add(&ker)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lenvec::LengthVector;
    use crate::polyring::Poly;

    fn params(xs: &[i64], a: u32, b: u32) -> SpaceParams {
        SpaceParams::new(LengthVector::from_integers(xs).unwrap(), a, b).unwrap()
    }

    #[test]
    fn iota_small_cases() {
        let i = iota_matrix(&params(&[1], 1, 2)).unwrap();
        assert_eq!(i.matrix.to_rows(), vec![vec![Poly::one(), Poly::zero()], vec![Poly::zero(), Poly::var_pow(1, 2)]]);
        let i = iota_matrix(&params(&[0, 1], 1, 1)).unwrap();
        // short sets: {}, {1}; the [W_∅] column is t1 [V_1] + t2 [V_2]
        let w = i.matrix.columns[2].clone();
        assert_eq!(w.coordinate(1), Poly::var_pow(1, 1));
        assert_eq!(w.coordinate(2), Poly::var_pow(2, 1));
        assert_eq!(w.coordinate(0), Poly::zero());
    }

    #[test]
    fn coker_shapes() {
        let c = coker_presentation(&params(&[1], 1, 1)).unwrap();
        assert_eq!((c.num_generators(), c.num_relations()), (1, 1));
        assert_eq!(c.relations().entry(0, 0), Poly::var_pow(1, 1));
        // The relation of the empty set has no long rows and is dropped.
        let c = coker_presentation(&params(&[1, 1, 1], 1, 1)).unwrap();
        assert_eq!((c.num_generators(), c.num_relations()), (4, 3));
        let c = coker_presentation(&params(&[0, 0, 1], 1, 1)).unwrap();
        assert_eq!(c.num_generators(), 4);
    }

    #[test]
    fn small_syzygy_orders() {
        let cfg = GbConfig::default();
        assert_eq!(ht_syzygy_order(&params(&[1], 1, 1), &cfg).unwrap(), 0);
        assert_eq!(ht_syzygy_order(&params(&[0, 0, 1], 1, 1), &cfg).unwrap(), 0);
        for b in 1..=2 {
            assert_eq!(ht_syzygy_order(&params(&[1, 1, 1], 1, b), &cfg).unwrap(), 1);
        }
    }

    #[test]
    fn kernel_is_free() {
        let cfg = GbConfig::default();
        let k = kernel_presentation(&params(&[1, 1, 1], 1, 1), &cfg).unwrap();
        assert_eq!(k.num_relations(), 0);
    }
}
