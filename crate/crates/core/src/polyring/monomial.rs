use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest number of ring variables supported by the dense exponent layout.
pub const MAX_VARS: usize = 16;

/// A monomial `t_1^{e_1} ⋯ t_n^{e_n}`; unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    /// The power `t_var^exp` (variables are 0-based here).
    pub fn var_pow(var: usize, exp: u32) -> Self {
        assert!(var < MAX_VARS, "variable index out of range");
        let mut m = Monomial::ONE;
        m.exps[var] = u16::try_from(exp).expect("exponent overflow");
        m.deg = exp;
        m
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// Degree in the cohomological grading, where each `t_j` has degree 2.
    pub fn cohomological_degree(&self) -> i64 {
        2 * self.deg as i64
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        m.deg += other.deg;
        m
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_sub(*b)?;
        }
        m.deg -= other.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "t{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders on `k[t_1, …, t_n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Degree reverse lexicographic with `t_1 > t_2 > ⋯`.
    #[default]
    DegRevLex,
    /// Pure lexicographic with `t_1 > t_2 > ⋯`.
    Lex,
    /// Degree lexicographic.
    DegLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegLex => a.deg.cmp(&b.deg).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::DegRevLex => a.deg.cmp(&b.deg).then_with(|| {
                for i in (0..MAX_VARS).rev() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// How monomial and basis position combine into an order on module terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleOrderKind {
    /// Term over position: compare monomials first.
    #[default]
    Top,
    /// Position over term: compare basis positions first.
    Pot,
}

/// A monomial order on a free module `⊕ R e_i`; among equal monomials
/// (resp. under POT) a smaller basis index is the larger term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TermOrder {
    pub monomial: MonomialOrder,
    pub kind: ModuleOrderKind,
}

impl TermOrder {
    pub const DEGREVLEX_TOP: TermOrder = TermOrder {
        monomial: MonomialOrder::DegRevLex,
        kind: ModuleOrderKind::Top,
    };
    pub const LEX_TOP: TermOrder = TermOrder {
        monomial: MonomialOrder::Lex,
        kind: ModuleOrderKind::Top,
    };

    pub fn new(monomial: MonomialOrder, kind: ModuleOrderKind) -> Self {
        TermOrder { monomial, kind }
    }

    pub fn cmp(&self, (ma, ca): (&Monomial, usize), (mb, cb): (&Monomial, usize)) -> Ordering {
        match self.kind {
            ModuleOrderKind::Top => self.monomial.cmp(ma, mb).then_with(|| cb.cmp(&ca)),
            ModuleOrderKind::Pot => cb.cmp(&ca).then_with(|| self.monomial.cmp(ma, mb)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // t1 > t2 > t3
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // t1*t3 < t2^2 in degrevlex, but > in lex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert_eq!(a.lcm(&b).div(&a), Some(m(&[0, 2, 1])));
        assert_eq!(a.div(&b), None);
        assert!(m(&[1, 1]).divides(&m(&[2, 1])));
        assert!(!m(&[1, 1]).divides(&m(&[2, 0])));
        assert_eq!(m(&[2, 0, 1]).to_string(), "t1^2*t3");
        assert_eq!(m(&[2, 0, 1]).cohomological_degree(), 6);
    }

    #[test]
    fn module_orders() {
        let top = TermOrder::DEGREVLEX_TOP;
        let x = m(&[1, 0]);
        let y = m(&[0, 1]);
        assert_eq!(top.cmp((&x, 1), (&y, 0)), Ordering::Greater);
        assert_eq!(top.cmp((&x, 0), (&x, 1)), Ordering::Greater);
        let pot = TermOrder::new(MonomialOrder::DegRevLex, ModuleOrderKind::Pot);
        assert_eq!(pot.cmp((&y, 0), (&x, 1)), Ordering::Greater);
    }
}
