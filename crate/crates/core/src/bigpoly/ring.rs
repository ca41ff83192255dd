//! The cohomology ring of `X_{a,b}(ℓ)` on the basis `α_J` (J short),
//! `β_J` (J long).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::params::SpaceParams;
use crate::error::{Error, Result};
use crate::lenvec::{shuffle_sign, SubsetMask};
use crate::polyring::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Alpha,
    Beta,
}

/// A scalar multiple of a basis class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyClass {
    pub kind: ClassKind,
    pub set: SubsetMask,
    pub coeff: Rational,
}

impl CohomologyClass {
    /// `α_J`; requires `J` short.
    pub fn alpha(j: SubsetMask, p: &SpaceParams) -> Result<Self> {
        if !p.is_short(j) {
            return Err(Error::Shape(format!("alpha class needs a short set, {j} is long")));
        }
        Ok(CohomologyClass {
            kind: ClassKind::Alpha,
            set: j,
            coeff: Rational::ONE,
        })
    }

    /// `β_J`; requires `J` long.
    pub fn beta(j: SubsetMask, p: &SpaceParams) -> Result<Self> {
        if p.is_short(j) {
            return Err(Error::Shape(format!("beta class needs a long set, {j} is short")));
        }
        Ok(CohomologyClass {
            kind: ClassKind::Beta,
            set: j,
            coeff: Rational::ONE,
        })
    }

    /// `|J| d` for `α_J`, `|J| d − d̄ − 1` for `β_J`.
    pub fn degree(&self, p: &SpaceParams) -> i64 {
        let k = self.set.len() as i64;
        match self.kind {
            ClassKind::Alpha => k * p.d(),
            ClassKind::Beta => k * p.d() - p.dbar() - 1,
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        CohomologyClass {
            coeff: &self.coeff * c,
            ..self.clone()
        }
    }

    fn same_basis(&self, other: &Self) -> bool {
        self.kind == other.kind && self.set == other.set
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ClassKind::Alpha => "α",
            ClassKind::Beta => "β",
        };
        if self.coeff.is_one() {
            write!(f, "{name}{}", self.set)
        } else {
            write!(f, "{}·{name}{}", self.coeff, self.set)
        }
    }
}

/// The basis `α_J` (J short) followed by `β_J` (J long), each in
/// `(|J|, lexicographic)` order.
pub fn cohomology_basis(p: &SpaceParams) -> Vec<CohomologyClass> {
    let all = SubsetMask::all_graded(p.r());
    let alphas = all.iter().filter(|&&j| p.is_short(j)).map(|&j| CohomologyClass {
        kind: ClassKind::Alpha,
        set: j,
        coeff: Rational::ONE,
    });
    let betas = all.iter().filter(|&&j| !p.is_short(j)).map(|&j| CohomologyClass {
        kind: ClassKind::Beta,
        set: j,
        coeff: Rational::ONE,
    });
    alphas.chain(betas).collect()
}

/// Cup product of two classes; `None` is the zero class.
pub fn cup_product(x: &CohomologyClass, y: &CohomologyClass, p: &SpaceParams) -> Option<CohomologyClass> {
    if !x.set.is_disjoint(y.set) {
        return None;
    }
    let u = x.set.union(y.set);
    let kind = match (x.kind, y.kind) {
        (ClassKind::Alpha, ClassKind::Alpha) if p.is_short(u) => ClassKind::Alpha,
        (ClassKind::Alpha, ClassKind::Alpha) | (ClassKind::Beta, ClassKind::Beta) => return None,
        _ => ClassKind::Beta,
    };
    let sign = shuffle_sign(x.set, y.set).expect("disjoint");
    let coeff = &(&x.coeff * &y.coeff) * &Rational::from_integer(sign as i64);
    if coeff.is_zero() {
        return None;
    }
    Some(CohomologyClass { kind, set: u, coeff })
}

/// The top-degree pairing on the basis of [`cohomology_basis`]: entry
/// `(x, y)` is the coefficient of `β_{[r]}` in `x ∪ y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingMatrix {
    pub basis: Vec<CohomologyClass>,
    pub entries: Vec<Vec<i32>>,
}

impl PairingMatrix {
    /// Exactly one `±1` in every row and column.
    pub fn is_signed_permutation(&self) -> bool {
        let n = self.entries.len();
        let unit_line = |it: &mut dyn Iterator<Item = i32>| {
            let nz: Vec<i32> = it.filter(|&v| v != 0).collect();
            nz.len() == 1 && nz[0].abs() == 1
        };
        (0..n).all(|i| unit_line(&mut self.entries[i].iter().copied()))
            && (0..n).all(|j| unit_line(&mut self.entries.iter().map(|row| row[j])))
    }
}

pub fn pairing_matrix(p: &SpaceParams) -> PairingMatrix {
    let basis = cohomology_basis(p);
    let top = CohomologyClass {
        kind: ClassKind::Beta,
        set: SubsetMask::full(p.r()),
        coeff: Rational::ONE,
    };
    let entries = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| match cup_product(x, y, p) {
                    Some(z) if z.same_basis(&top) => z.coeff.to_i64().expect("sign") as i32,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    PairingMatrix { basis, entries }
}
