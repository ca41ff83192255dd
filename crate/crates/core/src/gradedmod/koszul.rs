//! The Koszul complex of `t_1^b, …, t_r^b` and its syzygy modules `K_k`.

use crate::error::{Error, Result};
use crate::lenvec::{shuffle_sign, SubsetMask};
use crate::polyring::{FreeModule, FreeModuleElement, Monomial, PolyMatrix, Rational};

use super::presentation::GradedPresentation;

/// Exterior-algebra bookkeeping for the Koszul complex over
/// `ℚ[t_1, …, t_r]` with `N` concentrated in degree `2b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulData {
    r: usize,
    b: u32,
    labels: Vec<SubsetMask>,
}

impl KoszulData {
    pub fn new(r: usize, b: u32) -> Result<Self> {
        if r == 0 || b == 0 {
            return Err(Error::Shape("Koszul data needs r >= 1 and b >= 1".into()));
        }
        if r > crate::polyring::MAX_VARS {
            return Err(Error::TooLarge(r, crate::polyring::MAX_VARS));
        }
        Ok(KoszulData {
            r,
            b,
            labels: SubsetMask::all_graded(r),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// All basis labels `e_J`, ordered by `(|J|, lexicographic)`.
    pub fn labels(&self) -> &[SubsetMask] {
        &self.labels
    }

    /// Labels of the `k`-th exterior power.
    pub fn labels_of(&self, k: usize) -> Vec<SubsetMask> {
        self.labels.iter().copied().filter(|j| j.len() == k).collect()
    }

    fn index_in(&self, k: usize, j: SubsetMask) -> usize {
        self.labels_of(k).iter().position(|&x| x == j).expect("label")
    }
}

/// `δ_k : R ⊗ Λ^k N → R ⊗ Λ^{k−1} N`, sending `e_J` to
/// `Σ_{j ∈ J} ε(J ∖ j, j) t_j^b e_{J ∖ j}`. Generators of `Λ^k N` sit in
/// degree `2bk`.
pub fn koszul_differential(k: usize, data: &KoszulData) -> Result<PolyMatrix> {
    if k == 0 || k > data.r {
        return Err(Error::Shape(format!("Koszul differential index {k} outside 1..={}", data.r)));
    }
    let deg = 2 * data.b as i64;
    let rows = data.labels_of(k - 1);
    let cols = data.labels_of(k);
    let columns = cols
        .iter()
        .map(|&j| {
            FreeModuleElement::from_terms(j.elements().map(|i| {
                let rest = j.without(i);
                let sign = shuffle_sign(rest, SubsetMask::singleton(data.r, i)).expect("disjoint");
                (
                    Rational::from_integer(sign as i64),
                    Monomial::var_pow(i - 1, data.b),
                    data.index_in(k - 1, rest),
                )
            }))
        })
        .collect();
    PolyMatrix::new(
        FreeModule::uniform(rows.len(), deg * (k as i64 - 1)),
        FreeModule::uniform(cols.len(), deg * k as i64),
        columns,
    )
}

/// Presentation of `K_k = im δ_k`, shifted to be generated in degree 0:
/// `C(r, k)` generators with relation matrix `δ_{k+1}`.
pub fn koszul_syzygy_presentation(k: usize, data: &KoszulData) -> Result<GradedPresentation> {
    let r = data.r;
    if k > r + 1 {
        return Err(Error::Shape(format!("Koszul syzygy index {k} outside 0..={}", r + 1)));
    }
    if k == r + 1 {
        return Ok(GradedPresentation::zero(r));
    }
    if k == r {
        return Ok(GradedPresentation::free(r, FreeModule::uniform(1, 0)));
    }
    let d = koszul_differential(k + 1, data)?;
    GradedPresentation::new(r, d.shifted(-2 * data.b as i64 * k as i64))
}
