use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{Monomial, TermOrder, MAX_VARS};
use super::rational::Rational;
use super::terms::{self, Term};

const ORDER: TermOrder = TermOrder::DEGREVLEX_TOP;

/// A sparse polynomial over ℚ, terms sorted descending in degrevlex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    pub(crate) terms: Vec<Term>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![Term::new(m, 0, c)],
            }
        }
    }

    /// `t_j^e` for a 1-based variable index `j`.
    pub fn var_pow(j: usize, e: u32) -> Self {
        assert!((1..=MAX_VARS).contains(&j), "variable index out of range");
        Poly::monomial(Rational::ONE, Monomial::var_pow(j - 1, e))
    }

    pub fn from_terms(ts: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let ts = ts.into_iter().map(|(c, m)| Term::new(m, 0, c)).collect();
        Poly {
            terms: terms::normalize(ts, ORDER),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &Monomial)> {
        self.terms.iter().map(|t| (&t.coeff, &t.mono))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .last()
            .filter(|t| t.mono.is_one())
            .map(|t| t.coeff.clone())
            .unwrap_or(Rational::ZERO)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Polynomial degree in the cohomological grading, `None` for zero or
    /// inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let d = self.terms.first()?.mono.degree();
        self.terms
            .iter()
            .all(|t| t.mono.degree() == d)
            .then_some(2 * d as i64)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Number of variables actually used (highest index appearing).
    pub fn support_len(&self) -> usize {
        self.terms.iter().map(|t| t.mono.support_len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly {
            terms: terms::scale(&self.terms, c, &Monomial::ONE),
        }
    }

    pub fn mul_monomial(&self, c: &Rational, m: &Monomial) -> Poly {
        Poly {
            terms: terms::scale(&self.terms, c, m),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::ZERO;
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..t.mono.exp(i) {
                    v = &v * x;
                }
            }
            acc = &acc + &v;
        }
        acc
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly {
            terms: terms::add_scaled(&self.terms, &rhs.terms, &Rational::ONE, &Monomial::ONE, ORDER),
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly {
            terms: terms::add_scaled(
                &self.terms,
                &rhs.terms,
                &Rational::from_integer(-1),
                &Monomial::ONE,
                ORDER,
            ),
        }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut acc = Vec::new();
        for t in &rhs.terms {
            acc = terms::add_scaled(&acc, &self.terms, &t.coeff, &t.mono, ORDER);
        }
        Poly { terms: acc }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Rational::from_integer(-1))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono)?;
            } else {
                write!(f, "{abs}*{}", t.mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
