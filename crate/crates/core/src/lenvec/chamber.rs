use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::mask::SubsetMask;
use super::vector::{chamber_of, LengthVector};
use crate::error::{Error, Result};

pub(crate) fn sigma_bits(is_short: impl Fn(u32) -> bool, j: u32) -> usize {
    let mut count = 0;
    let mut rest = j;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        if is_short(j & !bit) {
            count += 1;
        }
        rest &= rest - 1;
    }
    count
}

pub(crate) fn mu_bits(r: usize, is_short: impl Fn(u32) -> bool) -> usize {
    (0..1u32 << r)
        .filter(|&b| !is_short(b))
        .map(|b| sigma_bits(&is_short, b))
        .filter(|&s| s > 0)
        .min()
        .expect("a minimal long set has positive sigma")
}

/// The combinatorial type of a generic length vector: its family of short
/// subsets.
///
/// Two chambers are equal when their short families agree; the canonical
/// encoding is the sorted list of bitmasks of the minimal long subsets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Chamber {
    r: usize,
    minimal_long: Vec<u32>,
    short_family: Vec<u32>,
    representative: Option<LengthVector>,
}

impl Chamber {
    pub(crate) fn from_short_bits(r: usize, short: &[u32], representative: Option<LengthVector>) -> Self {
        let mut is_short = vec![false; 1 << r];
        for &b in short {
            is_short[b as usize] = true;
        }
        let minimal_long = (0..1u32 << r)
            .filter(|&b| !is_short[b as usize])
            .filter(|&b| sigma_bits(|x| is_short[x as usize], b) == b.count_ones() as usize)
            .collect();
        Chamber {
            r,
            minimal_long,
            short_family: short.to_vec(),
            representative,
        }
    }

    /// Rebuilds a chamber from its canonical encoding, checking that it
    /// describes a valid short family (complementary halves, down-closed).
    pub fn from_encoding(r: usize, minimal_long: &[u32]) -> Result<Self> {
        if r == 0 {
            return Err(Error::Shape("a chamber needs r >= 1".into()));
        }
        if r > super::mask::MAX_R {
            return Err(Error::TooLarge(r, super::mask::MAX_R));
        }
        let short: Vec<u32> = (0..1u32 << r)
            .filter(|&b| !minimal_long.iter().any(|&m| m & !b == 0))
            .collect();
        let full = (1u32 << r) - 1;
        let valid = short.len() == 1 << (r - 1) && short.iter().all(|&b| !short.contains(&(full & !b)));
        if !valid {
            return Err(Error::Shape("encoding is not a chamber".into()));
        }
        let c = Chamber::from_short_bits(r, &short, None);
        if c.minimal_long != minimal_long {
            return Err(Error::Shape("encoding is not a sorted antichain".into()));
        }
        Ok(c)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Canonical encoding: sorted bitmasks of the minimal long subsets.
    pub fn encoding(&self) -> &[u32] {
        &self.minimal_long
    }

    /// Stable textual identifier built from the encoding, e.g. `3:3.5.6`.
    pub fn id(&self) -> String {
        let parts: Vec<String> = self.minimal_long.iter().map(|b| b.to_string()).collect();
        format!("{}:{}", self.r, parts.join("."))
    }

    pub fn short_family(&self) -> Vec<SubsetMask> {
        self.short_family
            .iter()
            .map(|&b| SubsetMask::new_unchecked(self.r, b))
            .collect()
    }

    pub fn minimal_long_sets(&self) -> Vec<SubsetMask> {
        self.minimal_long
            .iter()
            .map(|&b| SubsetMask::new_unchecked(self.r, b))
            .collect()
    }

    pub fn num_short(&self) -> usize {
        self.short_family.len()
    }

    pub fn representative(&self) -> Option<&LengthVector> {
        self.representative.as_ref()
    }

    pub(crate) fn is_short_bits(&self, b: u32) -> bool {
        !self.minimal_long.iter().any(|&m| m & !b == 0)
    }

    pub fn is_short(&self, j: SubsetMask) -> bool {
        self.is_short_bits(j.bits())
    }

    pub fn is_long(&self, j: SubsetMask) -> bool {
        !self.is_short(j)
    }

    pub fn sigma(&self, j: SubsetMask) -> usize {
        sigma_bits(|b| self.is_short_bits(b), j.bits())
    }

    pub fn mu(&self) -> usize {
        mu_bits(self.r, |b| self.is_short_bits(b))
    }
}

impl PartialEq for Chamber {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.minimal_long == other.minimal_long
    }
}

impl Eq for Chamber {}

impl Hash for Chamber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.r.hash(state);
        self.minimal_long.hash(state);
    }
}

impl PartialOrd for Chamber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Chamber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.r, &self.minimal_long).cmp(&(other.r, &other.minimal_long))
    }
}

/// Weakly increasing integer vectors of length `r` with entries in
/// `0..=max_entry`, in lexicographic order.
fn for_each_candidate(r: usize, max_entry: i64, mut f: impl FnMut(&[i64])) {
    let mut v = vec![0i64; r];
    loop {
        f(&v);
        let Some(i) = (0..r).rev().find(|&i| v[i] < max_entry) else {
            return;
        };
        let x = v[i] + 1;
        for y in &mut v[i..] {
            *y = x;
        }
    }
}

/// All chambers realized by generic weakly increasing integer vectors with
/// entries in `0..=max_entry`, sorted by canonical encoding. Each chamber
/// keeps the lexicographically first such vector as its representative.
pub fn enumerate_chambers(r: usize, max_entry: i64) -> Result<Vec<Chamber>> {
    if r == 0 || max_entry < 1 {
        return Err(Error::InvalidLengthVector("need r >= 1 and max_entry >= 1".into()));
    }
    if r > super::mask::MAX_R {
        return Err(Error::TooLarge(r, super::mask::MAX_R));
    }
    let mut found: BTreeMap<Vec<u32>, Chamber> = BTreeMap::new();
    let mut err = None;
    for_each_candidate(r, max_entry, |v| {
        if err.is_some() {
            return;
        }
        match LengthVector::from_integers(v) {
            Ok(l) if l.is_generic() => {
                let c = chamber_of(&l).expect("generic");
                found.entry(c.minimal_long.clone()).or_insert(c);
            }
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(found.into_values().collect()),
    }
}

/// Result of an enumeration together with its stabilization check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChamberEnumeration {
    pub r: usize,
    pub entry_bound: i64,
    /// Whether raising the bound by 2 found no further chambers.
    pub stabilized: bool,
    pub chambers: Vec<Chamber>,
}

pub fn enumerate_chambers_checked(r: usize, entry_bound: i64) -> Result<ChamberEnumeration> {
    let chambers = enumerate_chambers(r, entry_bound)?;
    let wider = enumerate_chambers(r, entry_bound + 2)?;
    Ok(ChamberEnumeration {
        r,
        entry_bound,
        stabilized: wider == chambers,
        chambers,
    })
}

/// One row of the chamber database export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberRecord {
    pub r: usize,
    pub chamber_id: String,
    pub representative: String,
    pub num_short: usize,
    pub mu: usize,
}

impl From<&Chamber> for ChamberRecord {
    fn from(c: &Chamber) -> Self {
        ChamberRecord {
            r: c.r(),
            chamber_id: c.id(),
            representative: c.representative().map(|l| l.to_string()).unwrap_or_default(),
            num_short: c.num_short(),
            mu: c.mu(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(xs: &[i64]) -> Chamber {
        LengthVector::from_integers(xs).unwrap().chamber().unwrap()
    }

    #[test]
    fn same_and_different_chambers() {
        assert_eq!(ch(&[1, 1, 1]), ch(&[2, 3, 4]));
        assert_eq!(ch(&[0, 0, 1]), ch(&[1, 1, 3]));
        assert_ne!(ch(&[1, 1, 1]), ch(&[0, 0, 1]));
    }

    #[test]
    fn encoding_round_trip() {
        let c = ch(&[1, 2, 2, 2, 3, 3]);
        let d = Chamber::from_encoding(6, c.encoding()).unwrap();
        assert_eq!(c, d);
        assert_eq!(d.short_family(), c.short_family());
        assert_eq!(ch(&[1, 1, 1]).id(), "3:3.5.6");
        assert!(Chamber::from_encoding(3, &[1, 2]).is_err());
        assert!(Chamber::from_encoding(0, &[]).is_err());
        assert!(matches!(Chamber::from_encoding(17, &[1]), Err(Error::TooLarge(17, _))));
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_chambers(1, 1).unwrap().len(), 1);
        assert_eq!(enumerate_chambers(2, 2).unwrap().len(), 1);
        assert_eq!(enumerate_chambers(3, 3).unwrap().len(), 2);
        let e = enumerate_chambers_checked(4, 4).unwrap();
        assert!(e.stabilized);
        assert_eq!(e.chambers.len(), 3);
    }

    #[test]
    fn record_fields() {
        let rec = ChamberRecord::from(&ch(&[1, 1, 1]));
        assert_eq!(rec.num_short, 4);
        assert_eq!(rec.mu, 2);
        assert_eq!(rec.representative, "1,1,1");
    }
}
