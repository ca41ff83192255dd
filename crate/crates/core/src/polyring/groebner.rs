//! Homogeneous Buchberger algorithm for submodules of graded free modules.
//!
//! Inputs are processed degree by degree: all S-pairs of degree `D` are
//! reduced before the input generators of degree `D`, so an input generator
//! that reduces to zero is redundant and the survivors form a minimal
//! generating set. Pairs are pruned with the Gebauer–Möller criteria; the
//! coprime-leading-term criterion is only applied for ideals (rank one).

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::module::{FreeModule, FreeModuleElement, CANON};
use super::monomial::{Monomial, TermOrder};
use super::rational::Rational;
use super::terms::{self, Term};
use crate::error::{Error, Result};

/// Resource limits and term order for a Gröbner computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbConfig {
    pub order: TermOrder,
    /// Largest polynomial degree (cohomological units) of an S-pair lcm or
    /// input leading monomial before giving up.
    pub degree_cap: Option<i64>,
    /// Largest number of S-pairs reduced in one run.
    pub pair_limit: Option<usize>,
    #[serde(skip)]
    pub deadline: Option<Instant>,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            order: TermOrder::DEGREVLEX_TOP,
            degree_cap: Some(64),
            pair_limit: None,
            deadline: None,
        }
    }
}

impl GbConfig {
    pub fn with_order(order: TermOrder) -> Self {
        GbConfig {
            order,
            ..GbConfig::default()
        }
    }

    pub fn unlimited() -> Self {
        GbConfig {
            degree_cap: None,
            ..GbConfig::default()
        }
    }

    fn check_degree(&self, mono: &Monomial) -> Result<()> {
        match self.degree_cap {
            Some(cap) if mono.cohomological_degree() > cap => Err(Error::DegreeCapExceeded {
                degree: mono.cohomological_degree(),
                cap,
            }),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub terms: Vec<Term>,
    /// Coordinates with respect to the input generators (empty when not
    /// tracking).
    pub rep: Vec<Term>,
    pub deg: i64,
}

impl Elem {
    fn lt(&self) -> &Term {
        &self.terms[0]
    }

    fn make_monic(&mut self) {
        let lc = self.terms[0].coeff.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            terms::scale_in_place(&mut self.terms, &inv);
            terms::scale_in_place(&mut self.rep, &inv);
        }
    }
}

pub(crate) struct Basis {
    pub elems: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
    pub order: TermOrder,
    track: bool,
}

impl Basis {
    pub fn new(rank: usize, order: TermOrder, track: bool) -> Self {
        Basis {
            elems: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            order,
            track,
        }
    }

    pub fn push(&mut self, e: Elem) -> usize {
        let k = self.elems.len();
        self.by_comp[e.lt().comp].push(k);
        self.elems.push(e);
        k
    }

    fn find_divisor(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        self.by_comp[t.comp]
            .iter()
            .copied()
            .find(|&k| Some(k) != skip && self.elems[k].lt().mono.divides(&t.mono))
    }

    /// Reduces `p` while maintaining `rep` alongside; `rep_of(k)` is the
    /// representation attached to basis element `k`. With `full` every term
    /// is reduced, otherwise only the leading term.
    pub fn reduce_with(
        &self,
        mut p: Vec<Term>,
        mut rep: Vec<Term>,
        full: bool,
        skip: Option<usize>,
        rep_of: &dyn Fn(usize) -> Vec<Term>,
        track: bool,
    ) -> (Vec<Term>, Vec<Term>) {
        let mut rem = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let t = &p[start];
            match self.find_divisor(t, skip) {
                Some(k) => {
                    let g = &self.elems[k];
                    let m = t.mono.div(&g.lt().mono).expect("divisor");
                    let c = -(&t.coeff / &g.lt().coeff);
                    p = terms::add_scaled(&p[start..], &g.terms, &c, &m, self.order);
                    start = 0;
                    if track {
                        rep = terms::add_scaled(&rep, &rep_of(k), &c, &m, CANON);
                    }
                }
                None if full => {
                    rem.push(p[start].clone());
                    start += 1;
                }
                None => break,
            }
        }
        if full {
            (rem, rep)
        } else {
            p.drain(..start);
            (p, rep)
        }
    }

    fn reduce(&self, p: Vec<Term>, rep: Vec<Term>, full: bool, skip: Option<usize>) -> (Vec<Term>, Vec<Term>) {
        let rep_of = |k: usize| self.elems[k].rep.clone();
        self.reduce_with(p, rep, full, skip, &rep_of, self.track)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

pub(crate) struct Run {
    pub basis: Basis,
    /// Input indices that survived as minimal generators.
    pub minimal: Vec<usize>,
}

fn s_poly(basis: &Basis, pair: &Pair) -> (Vec<Term>, Vec<Term>) {
    let (gi, gj) = (&basis.elems[pair.i], &basis.elems[pair.j]);
    let mi = pair.lcm.div(&gi.lt().mono).expect("lcm");
    let mj = pair.lcm.div(&gj.lt().mono).expect("lcm");
    let ci = gi.lt().coeff.recip();
    let cj = -gj.lt().coeff.recip();
    let a = terms::scale(&gi.terms, &ci, &mi);
    let p = terms::add_scaled(&a, &gj.terms, &cj, &mj, basis.order);
    let rep = if basis.track {
        let a = terms::scale(&gi.rep, &ci, &mi);
        terms::add_scaled(&a, &gj.rep, &cj, &mj, CANON)
    } else {
        Vec::new()
    };
    (p, rep)
}

/// Gebauer–Möller update after basis element `k` was added.
fn update_pairs(basis: &Basis, k: usize, pairs: &mut BTreeMap<i64, Vec<Pair>>, ideal: bool, shifts: &FreeModule) {
    let lt_k = basis.elems[k].lt().clone();
    let lcm_with = |i: usize| basis.elems[i].lt().mono.lcm(&lt_k.mono);
    // Existing pairs made redundant by the new leading term.
    for v in pairs.values_mut() {
        v.retain(|p| {
            let comp = basis.elems[p.i].lt().comp;
            !(comp == lt_k.comp
                && lt_k.mono.divides(&p.lcm)
                && lcm_with(p.i) != p.lcm
                && lcm_with(p.j) != p.lcm)
        });
    }
    pairs.retain(|_, v| !v.is_empty());

    let cands: Vec<(usize, Monomial, bool)> = basis.by_comp[lt_k.comp]
        .iter()
        .copied()
        .filter(|&i| i != k)
        .map(|i| {
            let mi = basis.elems[i].lt().mono;
            (i, mi.lcm(&lt_k.mono), ideal && mi.is_coprime(&lt_k.mono))
        })
        .collect();
    let n = cands.len();
    let mut pending = vec![true; n];
    let mut kept = vec![false; n];
    for a in 0..n {
        pending[a] = false;
        let (_, lcm_a, coprime_a) = cands[a];
        let dominated = (0..n).any(|b| b != a && (pending[b] || kept[b]) && cands[b].1.divides(&lcm_a));
        kept[a] = coprime_a || !dominated;
    }
    for (a, &(i, lcm, coprime)) in cands.iter().enumerate() {
        if !kept[a] || coprime {
            continue;
        }
        let deg = lcm.cohomological_degree() + shifts.degrees[lt_k.comp];
        pairs.entry(deg).or_default().push(Pair { i, j: k, lcm });
    }
}

/// Runs the homogeneous Buchberger algorithm on `gens` inside `module`.
pub(crate) fn run(gens: &[FreeModuleElement], module: &FreeModule, cfg: &GbConfig, track: bool) -> Result<Run> {
    let order = cfg.order;
    let ideal = module.rank() == 1;
    let mut inputs: Vec<(i64, usize, Vec<Term>)> = Vec::new();
    for (idx, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if g.support_len() > module.rank() {
            return Err(Error::Shape(format!("generator {idx} leaves the ambient module")));
        }
        let deg = g
            .degree(module)
            .ok_or_else(|| Error::Shape(format!("generator {idx} is not homogeneous")))?;
        inputs.push((deg, idx, terms::resort(g.terms.clone(), order)));
    }
    inputs.sort_by_key(|(d, i, _)| (*d, *i));

    let mut basis = Basis::new(module.rank(), order, track);
    let mut pairs: BTreeMap<i64, Vec<Pair>> = BTreeMap::new();
    let mut minimal = Vec::new();
    let mut next_input = 0;
    let mut processed = 0usize;

    loop {
        let pair_deg = pairs.keys().next().copied();
        let gen_deg = inputs.get(next_input).map(|(d, _, _)| *d);
        let d = match (pair_deg, gen_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if pair_deg == Some(d) {
            let mut batch = pairs.remove(&d).unwrap_or_default();
            batch.sort_by_key(|p| (p.i, p.j));
            for pair in batch {
                cfg.check_degree(&pair.lcm)?;
                processed += 1;
                if let Some(limit) = cfg.pair_limit {
                    if processed > limit {
                        return Err(Error::PairLimitExceeded(limit));
                    }
                }
                if processed.is_multiple_of(64) {
                    cfg.check_deadline()?;
                }
                let (p, rep) = s_poly(&basis, &pair);
                let (p, rep) = basis.reduce(p, rep, false, None);
                if !p.is_empty() {
                    let mut e = Elem { terms: p, rep, deg: d };
                    e.make_monic();
                    let k = basis.push(e);
                    update_pairs(&basis, k, &mut pairs, ideal, module);
                }
            }
        }
        while let Some((gd, idx, _)) = inputs.get(next_input) {
            if *gd != d {
                break;
            }
            let idx = *idx;
            let p = std::mem::take(&mut inputs[next_input].2);
            next_input += 1;
            cfg.check_degree(&p[0].mono)?;
            let rep = if track {
                vec![Term::new(Monomial::ONE, idx, Rational::ONE)]
            } else {
                Vec::new()
            };
            let (p, rep) = basis.reduce(p, rep, false, None);
            if !p.is_empty() {
                minimal.push(idx);
                let mut e = Elem { terms: p, rep, deg: d };
                e.make_monic();
                let k = basis.push(e);
                update_pairs(&basis, k, &mut pairs, ideal, module);
            }
        }
        cfg.check_deadline()?;
    }

    // Leading terms are already pairwise non-dividing; reduce the tails.
    for k in 0..basis.elems.len() {
        let e = std::mem::replace(
            &mut basis.elems[k],
            Elem {
                terms: Vec::new(),
                rep: Vec::new(),
                deg: 0,
            },
        );
        let lead = e.terms[0].clone();
        let (tail, rep) = basis.reduce(e.terms[1..].to_vec(), e.rep, true, Some(k));
        let mut t = Vec::with_capacity(tail.len() + 1);
        t.push(lead);
        t.extend(tail);
        basis.elems[k] = Elem { terms: t, rep, deg: e.deg };
    }
    Ok(Run { basis, minimal })
}

/// A reduced, monic Gröbner basis of a submodule of a graded free module.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    module: FreeModule,
    elems: Vec<Elem>,
    tracked: bool,
    num_generators: usize,
}

impl GroebnerBasis {
    pub(crate) fn from_run(run: Run, module: FreeModule, num_generators: usize) -> Self {
        GroebnerBasis {
            order: run.basis.order,
            tracked: run.basis.track,
            elems: run.basis.elems,
            module,
            num_generators,
        }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> Vec<FreeModuleElement> {
        self.elems
            .iter()
            .map(|e| FreeModuleElement::from_order(e.terms.clone(), self.order))
            .collect()
    }

    /// Degrees of the basis elements in the ambient grading.
    pub fn degrees(&self) -> Vec<i64> {
        self.elems.iter().map(|e| e.deg).collect()
    }

    /// Leading terms as `(monomial, basis index)`.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elems.iter().map(|e| (e.lt().mono, e.lt().comp)).collect()
    }

    /// Coordinates of each basis element in terms of the input generators,
    /// when the basis was computed with tracking.
    pub fn transform(&self) -> Option<Vec<FreeModuleElement>> {
        self.tracked.then(|| {
            self.elems
                .iter()
                .map(|e| FreeModuleElement::from_sorted_terms(e.rep.clone()))
                .collect()
        })
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub(crate) fn as_basis(&self) -> Basis {
        let mut b = Basis::new(self.module.rank(), self.order, self.tracked);
        for e in &self.elems {
            b.push(e.clone());
        }
        b
    }

    pub(crate) fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn normal_form(&self, f: &FreeModuleElement) -> FreeModuleElement {
        let b = self.as_basis();
        let p = terms::resort(f.terms.clone(), self.order);
        let (r, _) = b.reduce_with(p, Vec::new(), true, None, &|_| Vec::new(), false);
        FreeModuleElement::from_order(r, self.order)
    }

    pub fn contains(&self, f: &FreeModuleElement) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Elements sorted by leading term: a canonical form for comparing
    /// reduced bases computed under the same order.
    pub fn canonical_elements(&self) -> Vec<FreeModuleElement> {
        let mut idx: Vec<usize> = (0..self.elems.len()).collect();
        let order = self.order;
        idx.sort_by(|&a, &b| order.cmp(self.elems[b].lt().key(), self.elems[a].lt().key()));
        idx.into_iter()
            .map(|k| FreeModuleElement::from_order(self.elems[k].terms.clone(), order))
            .collect()
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.module == other.module
            && self.canonical_elements() == other.canonical_elements()
    }
}

/// Reduced Gröbner basis of the submodule generated by homogeneous `gens`.
pub fn buchberger(gens: &[FreeModuleElement], module: &FreeModule, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let run = run(gens, module, cfg, false)?;
    Ok(GroebnerBasis::from_run(run, module.clone(), gens.len()))
}

/// As [`buchberger`], also recording each basis element as a combination of
/// the inputs.
pub fn buchberger_tracked(gens: &[FreeModuleElement], module: &FreeModule, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let run = run(gens, module, cfg, true)?;
    Ok(GroebnerBasis::from_run(run, module.clone(), gens.len()))
}

/// Indices of a minimal homogeneous generating subset of `gens`, in input
/// order.
pub fn minimal_generator_indices(gens: &[FreeModuleElement], module: &FreeModule, cfg: &GbConfig) -> Result<Vec<usize>> {
    let mut idx = run(gens, module, cfg, false)?.minimal;
    idx.sort_unstable();
    Ok(idx)
}

/// Division of `f` by the list `g` (not necessarily a Gröbner basis) under
/// `order`: the remainder has no term divisible by a leading term of `g`.
pub fn normal_form(f: &FreeModuleElement, g: &[FreeModuleElement], order: TermOrder) -> FreeModuleElement {
    let rank = g
        .iter()
        .chain(std::iter::once(f))
        .map(|e| e.support_len())
        .max()
        .unwrap_or(0);
    let mut b = Basis::new(rank, order, false);
    for e in g.iter().filter(|e| !e.is_zero()) {
        b.push(Elem {
            terms: terms::resort(e.terms.clone(), order),
            rep: Vec::new(),
            deg: 0,
        });
    }
    let p = terms::resort(f.terms.clone(), order);
    let (r, _) = b.reduce_with(p, Vec::new(), true, None, &|_| Vec::new(), false);
    FreeModuleElement::from_order(r, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly::Poly;

    fn t(j: usize, e: u32) -> Poly {
        Poly::var_pow(j, e)
    }

    fn ideal(ps: &[Poly]) -> Vec<FreeModuleElement> {
        ps.iter().map(|p| FreeModuleElement::from_poly(p, 0)).collect()
    }

    #[test]
    fn pure_powers_are_already_a_basis() {
        let gens = ideal(&[t(1, 2), t(2, 2), t(3, 2)]);
        let gb = buchberger(&gens, &FreeModule::uniform(1, 0), &GbConfig::default()).unwrap();
        assert_eq!(gb.len(), 3);
        let mut els = gb.elements();
        els.sort_by_key(|e| e.to_string());
        let mut exp = gens.clone();
        exp.sort_by_key(|e| e.to_string());
        assert_eq!(els, exp);
    }

    #[test]
    fn linear_reduction() {
        let gens = ideal(&[t(1, 1), &t(1, 1) + &t(2, 1)]);
        let gb = buchberger(&gens, &FreeModule::uniform(1, 0), &GbConfig::default()).unwrap();
        assert_eq!(gb.canonical_elements(), ideal(&[t(1, 1), t(2, 1)]));
    }

    #[test]
    fn nf_examples() {
        let o = TermOrder::DEGREVLEX_TOP;
        let g = ideal(&[t(1, 1)]);
        let f = FreeModuleElement::from_poly(&t(1, 2), 0);
        assert!(normal_form(&f, &g, o).is_zero());
        let f = FreeModuleElement::from_poly(&(&(&t(1, 1) * &t(2, 1)) + &t(3, 1)), 0);
        assert_eq!(normal_form(&f, &g, o), FreeModuleElement::from_poly(&t(3, 1), 0));
    }

    #[test]
    fn twisted_cubic_basis_size() {
        // Ideal of the twisted cubic: three quadrics that already form a
        // degrevlex Gröbner basis.
        let x = t(1, 1);
        let y = t(2, 1);
        let z = t(3, 1);
        let w = t(4, 1);
        let gens = ideal(&[
            &(&x * &z) - &(&y * &y),
            &(&x * &w) - &(&y * &z),
            &(&y * &w) - &(&z * &z),
        ]);
        let gb = buchberger(&gens, &FreeModule::uniform(1, 0), &GbConfig::default()).unwrap();
        assert_eq!(gb.len(), 3);
        // Redundant generator is detected.
        let mut more = gens.clone();
        more.push(FreeModuleElement::from_poly(&(&(&x * &z) - &(&y * &y)).mul_monomial(&Rational::ONE, &Monomial::var_pow(0, 1)), 0));
        more.push(gens[1].scale(&Rational::from_integer(3)));
        let idx = minimal_generator_indices(&more, &FreeModule::uniform(1, 0), &GbConfig::default()).unwrap();
        assert_eq!(idx, vec![0, 1, 2]);
    }

    #[test]
    fn degree_cap_fails_loudly() {
        let gens = ideal(&[&t(1, 3) - &t(2, 3), &(&t(1, 2) * &t(2, 1)) - &t(3, 3)]);
        let cfg = GbConfig {
            degree_cap: Some(6),
            ..GbConfig::default()
        };
        let r = buchberger(&gens, &FreeModule::uniform(1, 0), &cfg);
        assert!(matches!(r, Err(Error::DegreeCapExceeded { .. })));
    }

    #[test]
    fn tracking_reproduces_basis() {
        let x = t(1, 1);
        let y = t(2, 1);
        let gens = ideal(&[&(&x * &x) + &(&x * &y), &(&y * &y) - &(&x * &y)]);
        let module = FreeModule::uniform(1, 0);
        let gb = buchberger_tracked(&gens, &module, &GbConfig::default()).unwrap();
        let tr = gb.transform().unwrap();
        for (g, rep) in gb.elements().iter().zip(&tr) {
            let mut acc = FreeModuleElement::zero();
            for (c, m, i) in rep.terms() {
                acc = acc.add_scaled(&gens[i], c, m);
            }
            assert_eq!(&acc, g);
        }
    }
}
