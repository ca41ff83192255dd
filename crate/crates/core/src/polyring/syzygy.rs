//! Schreyer syzygies and kernels of homogeneous maps.

use super::groebner::{self, Basis, GbConfig, GroebnerBasis};
use super::module::{FreeModule, FreeModuleElement, PolyMatrix, CANON};
use super::monomial::Monomial;
use super::rational::Rational;
use super::terms::{self, Term};
use crate::error::Result;

/// S-pair syzygies of a Gröbner basis, each lifted through `rep_of`.
///
/// Pairs with a strict chain-criterion witness are skipped: their syzygy is
/// a combination of pairs with strictly smaller lcm.
fn schreyer_lifts(
    gb: &GroebnerBasis,
    basis: &Basis,
    rep_of: &dyn Fn(usize) -> Vec<Term>,
    cfg: &GbConfig,
) -> Result<Vec<Vec<Term>>> {
    let lts = gb.leading_terms();
    let mut out = Vec::new();
    for j in 0..lts.len() {
        for i in 0..j {
            if lts[i].1 != lts[j].1 {
                continue;
            }
            let lcm = lts[i].0.lcm(&lts[j].0);
            let witnessed = (0..lts.len()).any(|k| {
                k != i
                    && k != j
                    && lts[k].1 == lts[i].1
                    && lts[k].0.divides(&lcm)
                    && lts[k].0.lcm(&lts[i].0) != lcm
                    && lts[k].0.lcm(&lts[j].0) != lcm
            });
            if witnessed {
                continue;
            }
            cfg.check_deadline()?;
            let mi = lcm.div(&lts[i].0).expect("lcm");
            let mj = lcm.div(&lts[j].0).expect("lcm");
            let (ei, ej) = (&gb.elems()[i], &gb.elems()[j]);
            let minus = Rational::from_integer(-1);
            let p = terms::scale(&ei.terms, &Rational::ONE, &mi);
            let p = terms::add_scaled(&p, &ej.terms, &minus, &mj, gb.order());
            let rep = terms::scale(&rep_of(i), &Rational::ONE, &mi);
            let rep = terms::add_scaled(&rep, &rep_of(j), &minus, &mj, CANON);
            let (rem, rep) = basis.reduce_with(p, rep, true, None, rep_of, true);
            debug_assert!(rem.is_empty(), "S-pair of a Gröbner basis must reduce to zero");
            if !rep.is_empty() {
                out.push(rep);
            }
        }
    }
    Ok(out)
}

/// Generators of the syzygies among the elements of `gb`: the kernel of
/// `F' → F` sending the `k`-th generator of `F'` (in the degree of the
/// `k`-th basis element) to that element.
pub fn syzygy_module(gb: &GroebnerBasis, cfg: &GbConfig) -> Result<Vec<FreeModuleElement>> {
    let basis = gb.as_basis();
    let unit = |k: usize| vec![Term::new(Monomial::ONE, k, Rational::ONE)];
    let syz = schreyer_lifts(gb, &basis, &unit, cfg)?;
    let elems: Vec<FreeModuleElement> = syz.into_iter().map(FreeModuleElement::from_sorted_terms).collect();
    let module = FreeModule::new(gb.degrees());
    let keep = groebner::minimal_generator_indices(&elems, &module, cfg)?;
    Ok(keep.into_iter().map(|k| elems[k].clone()).collect())
}

/// Minimal homogeneous generators of `ker m`, returned as a map into
/// `m.source` whose columns are those generators.
pub fn kernel(m: &PolyMatrix, cfg: &GbConfig) -> Result<PolyMatrix> {
    let gb = groebner::buchberger_tracked(&m.columns, &m.target, cfg)?;
    let basis = gb.as_basis();
    let rep_of = |k: usize| basis.elems[k].rep.clone();
    let mut cands: Vec<FreeModuleElement> = schreyer_lifts(&gb, &basis, &rep_of, cfg)?
        .into_iter()
        .map(FreeModuleElement::from_sorted_terms)
        .collect();
    for (k, col) in m.columns.iter().enumerate() {
        let e_k = vec![Term::new(Monomial::ONE, k, Rational::ONE)];
        if col.is_zero() {
            cands.push(FreeModuleElement::from_sorted_terms(e_k));
            continue;
        }
        let p = terms::resort(col.terms.clone(), gb.order());
        let (rem, rep) = basis.reduce_with(p, e_k, true, None, &rep_of, true);
        debug_assert!(rem.is_empty(), "column must lie in its own image");
        if !rep.is_empty() {
            cands.push(FreeModuleElement::from_sorted_terms(rep));
        }
    }
    let keep = groebner::minimal_generator_indices(&cands, &m.source, cfg)?;
    let columns: Vec<FreeModuleElement> = keep.into_iter().map(|k| cands[k].clone()).collect();
    let degrees = columns
        .iter()
        .map(|c| c.degree(&m.source).expect("syzygies are homogeneous"))
        .collect();
    PolyMatrix::new(m.source.clone(), FreeModule::new(degrees), columns)
}
