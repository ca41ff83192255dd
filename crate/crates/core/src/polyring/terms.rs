//! Sparse term lists: the shared representation under polynomials and
//! free-module elements. Lists are sorted strictly descending under some
//! [`TermOrder`] and never hold zero coefficients.

use std::cmp::Ordering;

use super::monomial::{Monomial, TermOrder};
use super::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub mono: Monomial,
    pub comp: usize,
    pub coeff: Rational,
}

impl Term {
    pub fn new(mono: Monomial, comp: usize, coeff: Rational) -> Self {
        Term { mono, comp, coeff }
    }

    pub(crate) fn key(&self) -> (&Monomial, usize) {
        (&self.mono, self.comp)
    }
}

/// Sorts and combines like terms, dropping zeros.
pub fn normalize(mut terms: Vec<Term>, order: TermOrder) -> Vec<Term> {
    terms.sort_by(|a, b| order.cmp(b.key(), a.key()));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.mono == t.mono && last.comp == t.comp => {
                last.coeff = &last.coeff + &t.coeff;
            }
            _ => out.push(t),
        }
        if out.last().is_some_and(|t| t.coeff.is_zero()) {
            out.pop();
        }
    }
    out
}

/// `a + coef * mono * b`. Both inputs must be sorted under `order`.
pub fn add_scaled(
    a: &[Term],
    b: &[Term],
    coef: &Rational,
    mono: &Monomial,
    order: TermOrder,
) -> Vec<Term> {
    if coef.is_zero() || b.is_empty() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<Term> = None;
    let scaled = |t: &Term| Term {
        mono: t.mono.mul(mono),
        comp: t.comp,
        coeff: coef * &t.coeff,
    };
    loop {
        if bj.is_none() && j < b.len() {
            bj = Some(scaled(&b[j]));
            j += 1;
        }
        match (a.get(i), bj.as_ref()) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(_)) => out.push(bj.take().unwrap()),
            (Some(x), Some(y)) => match order.cmp(x.key(), y.key()) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => out.push(bj.take().unwrap()),
                Ordering::Equal => {
                    let c = &x.coeff + &y.coeff;
                    if !c.is_zero() {
                        out.push(Term::new(x.mono, x.comp, c));
                    }
                    i += 1;
                    bj = None;
                }
            },
        }
    }
    out
}

pub fn scale(a: &[Term], coef: &Rational, mono: &Monomial) -> Vec<Term> {
    if coef.is_zero() {
        return Vec::new();
    }
    a.iter()
        .map(|t| Term::new(t.mono.mul(mono), t.comp, coef * &t.coeff))
        .collect()
}

/// Multiplies every term by `coef` in place.
pub fn scale_in_place(a: &mut [Term], coef: &Rational) {
    for t in a {
        t.coeff = &t.coeff * coef;
    }
}

/// Re-sorts a list that was sorted under a different order.
pub fn resort(mut terms: Vec<Term>, order: TermOrder) -> Vec<Term> {
    terms.sort_by(|a, b| order.cmp(b.key(), a.key()));
    terms
}
