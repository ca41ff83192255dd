use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::chamber::{self, Chamber};
use super::mask::{SubsetMask, MAX_R};
use crate::error::{Error, Result};
use crate::polyring::Rational;

/// A weakly increasing vector of nonnegative exact lengths.
///
/// Subset sums are compared on an integer rescaling, so genericity is
/// decided exactly.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct LengthVector {
    entries: Vec<Rational>,
    scaled: Vec<i128>,
    total: i128,
    tie: Option<SubsetMask>,
}

impl LengthVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        let r = entries.len();
        if r == 0 {
            return Err(Error::InvalidLengthVector("need at least one entry".into()));
        }
        if r > MAX_R {
            return Err(Error::TooLarge(r, MAX_R));
        }
        if let Some(x) = entries.iter().find(|x| x.is_negative()) {
            return Err(Error::InvalidLengthVector(format!("negative entry {x}")));
        }
        if let Some(w) = entries.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::InvalidLengthVector(format!(
                "entries must be weakly increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        let den = entries
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
        let overflow = || Error::InvalidLengthVector("entries too large to compare exactly".into());
        let scaled = entries
            .iter()
            .map(|x| (x.numer() * (&den / x.denom())).to_i128().ok_or_else(overflow))
            .collect::<Result<Vec<i128>>>()?;
        let total = scaled
            .iter()
            .try_fold(0i128, |acc, &x| acc.checked_add(x))
            .filter(|t| t.checked_mul(2).is_some())
            .ok_or_else(overflow)?;
        let mut v = LengthVector {
            entries,
            scaled,
            total,
            tie: None,
        };
        v.tie = v.find_tie();
        Ok(v)
    }

    pub fn from_integers(xs: &[i64]) -> Result<Self> {
        LengthVector::new(xs.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// `ℓ(J) = Σ_{j ∈ J} ℓ_j`.
    pub fn subset_sum(&self, j: SubsetMask) -> Rational {
        j.elements()
            .fold(Rational::ZERO, |acc, i| &acc + &self.entries[i - 1])
    }

    pub(crate) fn scaled_sum(&self, bits: u32) -> i128 {
        let mut s = 0;
        let mut rest = bits;
        while rest != 0 {
            s += self.scaled[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        s
    }

    /// Smallest mask `J` with `ℓ(J) = ℓ(J^c)`. Any tie pair has one side
    /// without the element `r`, and that side is the smaller bitmask.
    fn find_tie(&self) -> Option<SubsetMask> {
        let r = self.r();
        (0..1u32 << (r - 1))
            .find(|&b| 2 * self.scaled_sum(b) == self.total)
            .map(|b| SubsetMask::new_unchecked(r, b))
    }

    pub fn is_generic(&self) -> bool {
        self.tie.is_none()
    }

    /// The tying pair `(J, J^c)` for a non-generic vector.
    pub fn tie(&self) -> Option<(SubsetMask, SubsetMask)> {
        self.tie.map(|j| (j, j.complement()))
    }

    pub fn require_generic(&self) -> Result<()> {
        match self.tie() {
            None => Ok(()),
            Some((witness, complement)) => Err(Error::NonGeneric { witness, complement }),
        }
    }

    pub(crate) fn is_short_bits(&self, bits: u32) -> bool {
        2 * self.scaled_sum(bits) < self.total
    }

    pub fn is_long(&self, j: SubsetMask) -> Result<bool> {
        self.require_generic()?;
        Ok(!self.is_short_bits(j.bits()))
    }

    pub fn is_short(&self, j: SubsetMask) -> Result<bool> {
        self.is_long(j).map(|l| !l)
    }

    /// `σ_ℓ(J) = #{j ∈ J : J ∖ j short}`.
    pub fn sigma(&self, j: SubsetMask) -> Result<usize> {
        self.require_generic()?;
        Ok(chamber::sigma_bits(|b| self.is_short_bits(b), j.bits()))
    }

    /// `μ(ℓ) = min{σ_ℓ(J) : J long, σ_ℓ(J) > 0}`.
    pub fn mu(&self) -> Result<usize> {
        self.require_generic()?;
        Ok(chamber::mu_bits(self.r(), |b| self.is_short_bits(b)))
    }

    /// All short subsets, in increasing bitmask order.
    pub fn short_subsets(&self) -> Result<Vec<SubsetMask>> {
        self.require_generic()?;
        let r = self.r();
        Ok((0..1u32 << r)
            .filter(|&b| self.is_short_bits(b))
            .map(|b| SubsetMask::new_unchecked(r, b))
            .collect())
    }

    pub fn chamber(&self) -> Result<Chamber> {
        chamber_of(self)
    }
}

/// The chamber of a generic length vector, with `l` as representative.
pub fn chamber_of(l: &LengthVector) -> Result<Chamber> {
    l.require_generic()?;
    let r = l.r();
    let short: Vec<u32> = (0..1u32 << r).filter(|&b| l.is_short_bits(b)).collect();
    Ok(Chamber::from_short_bits(r, &short, Some(l.clone())))
}

impl TryFrom<Vec<Rational>> for LengthVector {
    type Error = Error;
    fn try_from(v: Vec<Rational>) -> Result<Self> {
        LengthVector::new(v)
    }
}

impl From<LengthVector> for Vec<Rational> {
    fn from(l: LengthVector) -> Self {
        l.entries
    }
}

impl FromStr for LengthVector {
    type Err = Error;

    /// Parses a comma-separated list such as `1,2,2` or `0, 1/2, 1`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|x| x.trim().parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        LengthVector::new(entries)
    }
}

impl fmt::Display for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LengthVector({self})")
    }
}
