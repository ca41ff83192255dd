use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lenvec::{LengthVector, SubsetMask};

/// Parameters of a big polygon space `X_{a,b}(ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceParams {
    a: u32,
    b: u32,
    l: LengthVector,
}

impl SpaceParams {
    pub fn new(l: LengthVector, a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Shape("a and b must be at least 1".into()));
        }
        l.require_generic()?;
        Ok(SpaceParams { a, b, l })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn lengths(&self) -> &LengthVector {
        &self.l
    }

    pub fn r(&self) -> usize {
        self.l.r()
    }

    /// `d = 2a + 2b − 1`.
    pub fn d(&self) -> i64 {
        2 * self.a as i64 + 2 * self.b as i64 - 1
    }

    /// `d̄ = 2a − 1`.
    pub fn dbar(&self) -> i64 {
        2 * self.a as i64 - 1
    }

    pub fn dimension(&self) -> i64 {
        dimension(self.r(), self.a, self.b)
    }

    pub(crate) fn is_short(&self, j: SubsetMask) -> bool {
        self.l.is_short(j).expect("generic")
    }
}

/// `(2a + 2b − 1) r − 2a`.
pub fn dimension(r: usize, a: u32, b: u32) -> i64 {
    (2 * a as i64 + 2 * b as i64 - 1) * r as i64 - 2 * a as i64
}

/// A polynomial in `x` with integer coefficients, stored densely by
/// exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn monomial(c: i64, e: usize) -> Self {
        let mut p = IntPoly::zero();
        p.add_term(c, e);
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn add_term(&mut self, c: i64, e: usize) {
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, 0);
        }
        self.coeffs[e] += c;
        self.trim();
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> i64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `x^n P(1/x) = P(x)`.
    pub fn is_palindromic(&self, n: usize) -> bool {
        self.coeffs.len() <= n + 1 && (0..=n).all(|e| self.coeff(e) == self.coeff(n - e))
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut p = self.clone();
        for (e, &c) in other.coeffs.iter().enumerate() {
            p.add_term(c, e);
        }
        p
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![0; (self.coeffs.len() + other.coeffs.len()).saturating_sub(1)];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn pow(&self, n: u32) -> IntPoly {
        (0..n).fold(IntPoly::monomial(1, 0), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{e}")?,
                (_, 1) => write!(f, "{a}x")?,
                _ => write!(f, "{a}x^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Σ_{J short} x^{|J|d} + Σ_{J long} x^{|J|d − d̄ − 1}`.
pub fn poincare_polynomial_x(p: &SpaceParams) -> IntPoly {
    let (d, dbar) = (p.d(), p.dbar());
    let mut out = IntPoly::zero();
    for j in SubsetMask::all_graded(p.r()) {
        let k = j.len() as i64;
        let e = if p.is_short(j) { k * d } else { k * d - dbar - 1 };
        out.add_term(1, e as usize);
    }
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Poincaré polynomial of the equilateral polygon space `E_{2a}(1, …, 1)`
/// for odd `r = 2m + 1`.
pub fn poincare_polynomial_e_equilateral(a: u32, r: usize) -> Result<IntPoly> {
    if r.is_multiple_of(2) {
        return Err(Error::EvenR(r));
    }
    let m = (r - 1) / 2;
    let dbar = 2 * a as usize - 1;
    let mut out = IntPoly::zero();
    if m == 0 {
        return Ok(out);
    }
    for j in 0..m {
        let c = binomial(r, j);
        out.add_term(c, j * dbar);
        out.add_term(c, (2 * m - j) * dbar - 1);
    }
    let c = binomial(2 * m, m - 1);
    out.add_term(c, m * dbar);
    out.add_term(c, m * dbar - 1);
    Ok(out)
}

/// Total Betti number of the polygon space: four times the number of short
/// subsets containing `r`.
pub fn betti_sum_e(l: &LengthVector) -> Result<i64> {
    let r = l.r();
    let n = l
        .short_subsets()?
        .into_iter()
        .filter(|j| j.contains(r))
        .count();
    Ok(4 * n as i64)
}
