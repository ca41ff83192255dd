use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground set `[r]`.
pub const MAX_R: usize = 16;

/// A subset `J ⊆ [r] = {1, …, r}`, stored as a bitmask (element `j` is bit
/// `j - 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubsetMask {
    bits: u32,
    r: u8,
}

impl SubsetMask {
    pub fn from_bits(r: usize, bits: u32) -> Result<Self> {
        if r > MAX_R {
            return Err(Error::TooLarge(r, MAX_R));
        }
        if bits >> r != 0 {
            return Err(Error::Shape(format!("mask {bits:#b} does not fit in [{r}]")));
        }
        Ok(SubsetMask { bits, r: r as u8 })
    }

    pub(crate) fn new_unchecked(r: usize, bits: u32) -> Self {
        debug_assert!(r <= MAX_R && bits >> r == 0);
        SubsetMask { bits, r: r as u8 }
    }

    /// Builds `J` from 1-based elements.
    pub fn from_elements(r: usize, elems: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &j in elems {
            if j == 0 || j > r {
                return Err(Error::Shape(format!("element {j} outside [{r}]")));
            }
            bits |= 1 << (j - 1);
        }
        SubsetMask::from_bits(r, bits)
    }

    pub fn empty(r: usize) -> Self {
        SubsetMask::new_unchecked(r, 0)
    }

    pub fn full(r: usize) -> Self {
        SubsetMask::new_unchecked(r, ((1u64 << r) - 1) as u32)
    }

    pub fn singleton(r: usize, j: usize) -> Self {
        assert!((1..=r).contains(&j), "element outside the ground set");
        SubsetMask::new_unchecked(r, 1 << (j - 1))
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn r(self) -> usize {
        self.r as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, j: usize) -> bool {
        j >= 1 && j <= self.r() && self.bits & (1 << (j - 1)) != 0
    }

    pub fn complement(self) -> Self {
        SubsetMask::new_unchecked(self.r(), !self.bits & SubsetMask::full(self.r()).bits)
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask::new_unchecked(self.r(), self.bits | other.bits)
    }

    pub fn intersection(self, other: Self) -> Self {
        SubsetMask::new_unchecked(self.r(), self.bits & other.bits)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn with(self, j: usize) -> Self {
        self.union(SubsetMask::singleton(self.r(), j))
    }

    pub fn without(self, j: usize) -> Self {
        SubsetMask::new_unchecked(self.r(), self.bits & !(1 << (j - 1)))
    }

    /// Elements in increasing order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (1..=self.r()).filter(move |j| bits & (1 << (j - 1)) != 0)
    }

    /// All `2^r` subsets ordered by `(|J|, lexicographic)`.
    pub fn all_graded(r: usize) -> Vec<SubsetMask> {
        let mut v: Vec<SubsetMask> = (0..1u32 << r).map(|b| SubsetMask::new_unchecked(r, b)).collect();
        v.sort_by_key(|m| m.graded_key());
        v
    }

    /// Sort key for the `(|J|, lexicographic)` order.
    pub fn graded_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.elements().collect())
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements().map(|j| j.to_string()).collect();
        write!(f, "{{{}}}", els.join(","))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ε(J, K) = (−1)^{#{(j, k) ∈ J × K : j > k}}` for disjoint `J`, `K`.
pub fn shuffle_sign(j: SubsetMask, k: SubsetMask) -> Result<i32> {
    if !j.is_disjoint(k) {
        return Err(Error::OverlappingSets(j, k));
    }
    Ok(shuffle_sign_bits(j.bits, k.bits))
}

pub(crate) fn shuffle_sign_bits(j: u32, k: u32) -> i32 {
    let mut inversions = 0u32;
    let mut rest = j;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        inversions += (k & ((1u32 << bit) - 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(r: usize, e: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(r, e).unwrap()
    }

    #[test]
    fn complement_and_display() {
        let j = s(4, &[1, 3]);
        assert_eq!(j.complement(), s(4, &[2, 4]));
        assert_eq!(j.complement().complement(), j);
        assert_eq!(j.len() + j.complement().len(), 4);
        assert_eq!(j.to_string(), "{1,3}");
        assert_eq!(SubsetMask::empty(3).to_string(), "{}");
        assert!(SubsetMask::from_elements(3, &[4]).is_err());
    }

    #[test]
    fn graded_order() {
        let all = SubsetMask::all_graded(3);
        let shown: Vec<String> = all.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn shuffle_sign_examples() {
        assert_eq!(shuffle_sign(s(2, &[1]), s(2, &[2])).unwrap(), 1);
        assert_eq!(shuffle_sign(s(2, &[2]), s(2, &[1])).unwrap(), -1);
        assert_eq!(shuffle_sign(s(4, &[2, 4]), s(4, &[1, 3])).unwrap(), -1);
        assert!(matches!(
            shuffle_sign(s(3, &[1, 2]), s(3, &[2])),
            Err(Error::OverlappingSets(_, _))
        ));
    }
}
