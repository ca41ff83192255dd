//! Graded free modules, their elements, and homogeneous maps between them.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, TermOrder};
use super::poly::Poly;
use super::rational::Rational;
use super::terms::{self, Term};
use crate::error::{Error, Result};

pub(crate) const CANON: TermOrder = TermOrder::DEGREVLEX_TOP;

/// A graded free module `⊕ R[d_i]`: generator `i` sits in degree `d_i`
/// (cohomological grading, `t_j` has degree 2).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct FreeModule {
    pub degrees: Vec<i64>,
}

impl FreeModule {
    pub fn new(degrees: Vec<i64>) -> Self {
        FreeModule { degrees }
    }

    pub fn zero() -> Self {
        FreeModule::default()
    }

    /// `rank` copies of `R[degree]`.
    pub fn uniform(rank: usize, degree: i64) -> Self {
        FreeModule {
            degrees: vec![degree; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    /// Dual module `Hom(F, R)`, generator degrees negated.
    pub fn dual(&self) -> FreeModule {
        FreeModule {
            degrees: self.degrees.iter().map(|d| -d).collect(),
        }
    }

    pub fn shifted(&self, by: i64) -> FreeModule {
        FreeModule {
            degrees: self.degrees.iter().map(|d| d + by).collect(),
        }
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        FreeModule { degrees }
    }
}

/// An element of a free module, stored as a sparse list of `c · m · e_i`
/// terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeModuleElement {
    pub(crate) terms: Vec<Term>,
}

impl FreeModuleElement {
    pub fn zero() -> Self {
        FreeModuleElement { terms: Vec::new() }
    }

    /// The basis vector `e_i` (0-based).
    pub fn basis(i: usize) -> Self {
        FreeModuleElement {
            terms: vec![Term::new(Monomial::ONE, i, Rational::ONE)],
        }
    }

    /// `p · e_i`.
    pub fn from_poly(p: &Poly, i: usize) -> Self {
        FreeModuleElement {
            terms: p
                .terms
                .iter()
                .map(|t| Term::new(t.mono, i, t.coeff.clone()))
                .collect(),
        }
    }

    pub fn from_polys(coords: &[Poly]) -> Self {
        let ts = coords
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms.iter().map(move |t| Term::new(t.mono, i, t.coeff.clone())))
            .collect();
        FreeModuleElement {
            terms: terms::normalize(ts, CANON),
        }
    }

    pub fn from_terms(ts: impl IntoIterator<Item = (Rational, Monomial, usize)>) -> Self {
        let ts = ts.into_iter().map(|(c, m, i)| Term::new(m, i, c)).collect();
        FreeModuleElement {
            terms: terms::normalize(ts, CANON),
        }
    }

    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Self {
        FreeModuleElement { terms }
    }

    /// Builds an element from terms sorted under some other order.
    pub(crate) fn from_order(terms: Vec<Term>, order: TermOrder) -> Self {
        if order == CANON {
            FreeModuleElement { terms }
        } else {
            FreeModuleElement {
                terms: terms::resort(terms, CANON),
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Monomial, usize)> {
        self.terms.iter().map(|t| (&t.coeff, &t.mono, t.comp))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coordinate(&self, i: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp == i)
                .map(|t| Term::new(t.mono, 0, t.coeff.clone()))
                .collect(),
        }
    }

    pub fn to_polys(&self, rank: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); rank];
        for t in &self.terms {
            out[t.comp].terms.push(Term::new(t.mono, 0, t.coeff.clone()));
        }
        out
    }

    /// Largest basis index used, plus one.
    pub fn support_len(&self) -> usize {
        self.terms.iter().map(|t| t.comp + 1).max().unwrap_or(0)
    }

    /// Degree of a homogeneous element in `module`; `None` if zero or
    /// inhomogeneous.
    pub fn degree(&self, module: &FreeModule) -> Option<i64> {
        let mut it = self
            .terms
            .iter()
            .map(|t| t.mono.cohomological_degree() + module.degrees[t.comp]);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, module: &FreeModule) -> bool {
        self.is_zero() || self.degree(module).is_some()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FreeModuleElement {
            terms: terms::scale(&self.terms, c, &Monomial::ONE),
        }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Self {
        FreeModuleElement {
            terms: terms::scale(&self.terms, c, m),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        let mut acc = Vec::new();
        for t in &p.terms {
            acc = terms::add_scaled(&acc, &self.terms, &t.coeff, &t.mono, CANON);
        }
        FreeModuleElement { terms: acc }
    }

    pub fn add_scaled(&self, other: &Self, c: &Rational, m: &Monomial) -> Self {
        FreeModuleElement {
            terms: terms::add_scaled(&self.terms, &other.terms, c, m, CANON),
        }
    }

    /// Renumbers basis indices through `f`; `f` must be injective on the
    /// support.
    pub fn map_components(&self, f: impl Fn(usize) -> usize) -> Self {
        let ts = self
            .terms
            .iter()
            .map(|t| Term::new(t.mono, f(t.comp), t.coeff.clone()))
            .collect();
        FreeModuleElement {
            terms: terms::normalize(ts, CANON),
        }
    }

    /// Does some coordinate contain a nonzero constant?
    pub fn has_unit_entry(&self) -> bool {
        self.terms.iter().any(|t| t.mono.is_one())
    }
}

impl<'a> Add<&'a FreeModuleElement> for &'a FreeModuleElement {
    type Output = FreeModuleElement;
    fn add(self, rhs: &FreeModuleElement) -> FreeModuleElement {
        self.add_scaled(rhs, &Rational::ONE, &Monomial::ONE)
    }
}

impl<'a> Sub<&'a FreeModuleElement> for &'a FreeModuleElement {
    type Output = FreeModuleElement;
    fn sub(self, rhs: &FreeModuleElement) -> FreeModuleElement {
        self.add_scaled(rhs, &Rational::from_integer(-1), &Monomial::ONE)
    }
}

impl Neg for &FreeModuleElement {
    type Output = FreeModuleElement;
    fn neg(self) -> FreeModuleElement {
        self.scale(&Rational::from_integer(-1))
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.support_len();
        let coords: Vec<String> = self.to_polys(rank).iter().map(|p| p.to_string()).collect();
        write!(f, "({})", coords.join(", "))
    }
}

impl fmt::Debug for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A homogeneous map `source → target` between graded free modules; column
/// `j` is the image of the `j`-th source generator.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyMatrix {
    pub target: FreeModule,
    pub source: FreeModule,
    pub columns: Vec<FreeModuleElement>,
}

impl PolyMatrix {
    /// Builds a map, checking shapes and homogeneity: every nonzero column
    /// must have the degree of its source generator.
    pub fn new(target: FreeModule, source: FreeModule, columns: Vec<FreeModuleElement>) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::Shape(format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        for (j, c) in columns.iter().enumerate() {
            if c.support_len() > target.rank() {
                return Err(Error::Shape(format!("column {j} leaves the target module")));
            }
            if !c.is_zero() && c.degree(&target) != Some(source.degrees[j]) {
                return Err(Error::Shape(format!(
                    "column {j} is not homogeneous of degree {}",
                    source.degrees[j]
                )));
            }
        }
        Ok(PolyMatrix { target, source, columns })
    }

    /// Builds a map from row-major entries; entry `(i, j)` must be
    /// homogeneous of degree `source[j] - target[i]`.
    pub fn from_rows(target: FreeModule, source: FreeModule, rows: &[Vec<Poly>]) -> Result<Self> {
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Shape("row-major entries do not match the module ranks".into()));
        }
        let columns = (0..source.rank())
            .map(|j| {
                let col: Vec<Poly> = rows.iter().map(|r| r[j].clone()).collect();
                FreeModuleElement::from_polys(&col)
            })
            .collect();
        PolyMatrix::new(target, source, columns)
    }

    pub fn zero(target: FreeModule, source: FreeModule) -> Self {
        let columns = vec![FreeModuleElement::zero(); source.rank()];
        PolyMatrix { target, source, columns }
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        self.columns[j].coordinate(i)
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        let cols: Vec<Vec<Poly>> = self.columns.iter().map(|c| c.to_polys(self.nrows())).collect();
        (0..self.nrows())
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn has_unit_entry(&self) -> bool {
        self.columns.iter().any(|c| c.has_unit_entry())
    }

    /// Image of a source element.
    pub fn apply(&self, v: &FreeModuleElement) -> FreeModuleElement {
        let mut acc = Vec::new();
        for t in &v.terms {
            acc = terms::add_scaled(&acc, &self.columns[t.comp].terms, &t.coeff, &t.mono, CANON);
        }
        FreeModuleElement { terms: acc }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.source.rank(), other.target.rank(), "composable shapes");
        PolyMatrix {
            target: self.target.clone(),
            source: other.source.clone(),
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    /// The dual map `target* → source*`.
    pub fn transpose(&self) -> PolyMatrix {
        let mut cols: Vec<Vec<Term>> = vec![Vec::new(); self.nrows()];
        for (j, c) in self.columns.iter().enumerate() {
            for t in &c.terms {
                cols[t.comp].push(Term::new(t.mono, j, t.coeff.clone()));
            }
        }
        PolyMatrix {
            target: self.source.dual(),
            source: self.target.dual(),
            columns: cols
                .into_iter()
                .map(|ts| FreeModuleElement {
                    terms: terms::normalize(ts, CANON),
                })
                .collect(),
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        let off = self.nrows();
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().map(|c| c.map_components(|i| i + off)));
        PolyMatrix {
            target: self.target.direct_sum(&other.target),
            source: self.source.direct_sum(&other.source),
            columns,
        }
    }

    pub fn shifted(&self, by: i64) -> PolyMatrix {
        PolyMatrix {
            target: self.target.shifted(by),
            source: self.source.shifted(by),
            columns: self.columns.clone(),
        }
    }

    /// Drops zero columns.
    pub fn without_zero_columns(&self) -> PolyMatrix {
        let keep: Vec<usize> = (0..self.ncols()).filter(|&j| !self.columns[j].is_zero()).collect();
        PolyMatrix {
            target: self.target.clone(),
            source: FreeModule::new(keep.iter().map(|&j| self.source.degrees[j]).collect()),
            columns: keep.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    /// Number of variables actually used by the entries.
    pub fn support_len(&self) -> usize {
        self.columns
            .iter()
            .flat_map(|c| c.terms.iter().map(|t| t.mono.support_len()))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_twice_is_identity() {
        let t1 = Poly::var_pow(1, 1);
        let t2 = Poly::var_pow(2, 1);
        let m = PolyMatrix::from_rows(
            FreeModule::uniform(1, 0),
            FreeModule::uniform(2, 2),
            &[vec![t1.clone(), t2.clone()]],
        )
        .unwrap();
        let tt = m.transpose().transpose();
        assert_eq!(tt, m);
        assert_eq!(m.transpose().source.degrees, vec![0]);
        assert_eq!(m.transpose().target.degrees, vec![-2, -2]);
    }

    #[test]
    fn rejects_inhomogeneous_columns() {
        let t1 = Poly::var_pow(1, 1);
        let r = PolyMatrix::from_rows(
            FreeModule::uniform(2, 0),
            FreeModule::uniform(1, 2),
            &[vec![t1.clone()], vec![t1.pow(2)]],
        );
        assert!(matches!(r, Err(Error::Shape(_))));
    }

    #[test]
    fn composition() {
        let t1 = Poly::var_pow(1, 1);
        let t2 = Poly::var_pow(2, 1);
        let d1 = PolyMatrix::from_rows(
            FreeModule::uniform(1, 0),
            FreeModule::uniform(2, 2),
            &[vec![t1.clone(), t2.clone()]],
        )
        .unwrap();
        let d2 = PolyMatrix::from_rows(
            FreeModule::uniform(2, 2),
            FreeModule::uniform(1, 4),
            &[vec![t2.clone()], vec![-&t1]],
        )
        .unwrap();
        assert!(d1.compose(&d2).is_zero());
    }
}
