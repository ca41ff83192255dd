//! Text forms: polynomials as `3/2*t1^2*t3 - t2^2`, matrices as row-major
//! JSON.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::module::{FreeModule, PolyMatrix};
use super::monomial::{Monomial, MAX_VARS};
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

fn parse_factor(f: &str, coeff: &mut Rational, exps: &mut [u32; MAX_VARS]) -> Result<()> {
    let bad = || Error::Parse(format!("bad factor `{f}`"));
    if let Some(rest) = f.strip_prefix('t') {
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
            None => (rest, 1),
        };
        let j: usize = var.parse().map_err(|_| bad())?;
        if !(1..=MAX_VARS).contains(&j) {
            return Err(bad());
        }
        exps[j - 1] += exp;
    } else {
        let c: Rational = f.parse().map_err(|_| bad())?;
        *coeff = &*coeff * &c;
    }
    Ok(())
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut pieces = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'+' => (false, &piece[1..]),
                b'-' => (true, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            let mut coeff = if neg { Rational::from_integer(-1) } else { Rational::ONE };
            let mut exps = [0u32; MAX_VARS];
            for f in body.split('*') {
                parse_factor(f, &mut coeff, &mut exps)?;
            }
            terms.push((coeff, Monomial::from_exponents(&exps)));
        }
        Ok(Poly::from_terms(terms))
    }
}

/// Serialized form of a homogeneous matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub target_degrees: Vec<i64>,
    pub source_degrees: Vec<i64>,
    pub rows: Vec<Vec<String>>,
}

impl From<&PolyMatrix> for MatrixJson {
    fn from(m: &PolyMatrix) -> Self {
        MatrixJson {
            target_degrees: m.target.degrees.clone(),
            source_degrees: m.source.degrees.clone(),
            rows: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<&MatrixJson> for PolyMatrix {
    type Error = Error;

    fn try_from(j: &MatrixJson) -> Result<PolyMatrix> {
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<Poly>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(
            FreeModule::new(j.target_degrees.clone()),
            FreeModule::new(j.source_degrees.clone()),
            &rows,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: Poly = "3/2*t1^2*t3 - t2^2".parse().unwrap();
        assert_eq!(p.to_string(), "3/2*t1^2*t3 - t2^2");
        let q: Poly = "-t1 + 2*t2 - 0.5".parse().unwrap();
        assert_eq!(q.to_string(), "-t1 + 2*t2 - 1/2");
        let z: Poly = "t1 - t1".parse().unwrap();
        assert!(z.is_zero());
        assert!("t0".parse::<Poly>().is_err());
        assert!("t1 +".parse::<Poly>().is_err());
        assert!("".parse::<Poly>().is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let m = PolyMatrix::from_rows(
            FreeModule::uniform(1, 0),
            FreeModule::uniform(2, 2),
            &[vec!["t1".parse().unwrap(), "-t2".parse().unwrap()]],
        )
        .unwrap();
        let j = MatrixJson::from(&m);
        let s = serde_json::to_string(&j).unwrap();
        let back: MatrixJson = serde_json::from_str(&s).unwrap();
        assert_eq!(PolyMatrix::try_from(&back).unwrap(), m);
    }
}
