use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::FreeModule;

/// A Hilbert series `N(x) / (1 − x^2)^r` with `N` a Laurent polynomial with
/// integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: BTreeMap<i64, i64>,
}

impl HilbertSeries {
    pub fn zero(nvars: usize) -> Self {
        HilbertSeries {
            nvars,
            numerator: BTreeMap::new(),
        }
    }

    /// Builds a series from `(exponent, coefficient)` pairs.
    pub fn from_numerator(nvars: usize, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut s = HilbertSeries::zero(nvars);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    /// Series of a free module: `Σ x^{d_i}` over the generator degrees.
    pub fn of_free(nvars: usize, f: &FreeModule) -> Self {
        HilbertSeries::from_numerator(nvars, f.degrees.iter().map(|&d| (d, 1)))
    }

    fn add_term(&mut self, e: i64, c: i64) {
        let v = self.numerator.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.numerator.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Nonzero numerator coefficients by exponent.
    pub fn numerator(&self) -> &BTreeMap<i64, i64> {
        &self.numerator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn add(&self, other: &HilbertSeries) -> Result<HilbertSeries> {
        if self.nvars != other.nvars {
            return Err(Error::Shape("series over different rings".into()));
        }
        let mut s = self.clone();
        for (&e, &c) in &other.numerator {
            s.add_term(e, c);
        }
        Ok(s)
    }

    pub fn scaled(&self, k: i64) -> HilbertSeries {
        HilbertSeries::from_numerator(self.nvars, self.numerator.iter().map(|(&e, &c)| (e, c * k)))
    }

    /// `x^l · H`.
    pub fn shifted(&self, l: i64) -> HilbertSeries {
        HilbertSeries {
            nvars: self.nvars,
            numerator: self.numerator.iter().map(|(&e, &c)| (e + l, c)).collect(),
        }
    }

    /// Power-series coefficients of `x^e` for `e ≤ max_degree`.
    pub fn expand(&self, max_degree: i64) -> BTreeMap<i64, i128> {
        // 1/(1−x^2)^r = Σ_k C(k+r−1, r−1) x^{2k}
        let mut out = BTreeMap::new();
        for (&e, &c) in &self.numerator {
            if self.nvars == 0 {
                if e <= max_degree {
                    *out.entry(e).or_insert(0i128) += c as i128;
                }
                continue;
            }
            let mut k = 0i64;
            while e + 2 * k <= max_degree {
                let coeff = binomial(k as u64 + self.nvars as u64 - 1, self.nvars as u64 - 1);
                *out.entry(e + 2 * k).or_insert(0i128) += c as i128 * coeff as i128;
                k += 1;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let grouped = self.numerator.len() > 1;
        if self.numerator.is_empty() {
            write!(f, "0")?;
        }
        if grouped {
            write!(f, "(")?;
        }
        for (&e, &c) in &self.numerator {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
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
        if grouped {
            write!(f, ")")?;
        }
        write!(f, " / (1-x^2)^{}", self.nvars)
    }
}
