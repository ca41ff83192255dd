//! The end-to-end acceptance checks, shared by the `acceptance` test target
//! and the `selftest` command.

use std::fmt;
use std::time::{Duration, Instant};

use crate::bigpoly::{
    betti_sum_e, coker_presentation, cohomology_basis, cup_product, equilateral_decomposition,
    equivariant_hilbert_series, ht_syzygy_order, pairing_matrix, poincare_polynomial_e_equilateral,
    poincare_polynomial_x, CohomologyClass, IntPoly, SpaceParams,
};
use crate::error::{Error, Result};
use crate::gradedmod::{
    hilbert_series, koszul_syzygy_presentation, minimal_free_resolution, syzygy_order, GradedPresentation,
    KoszulData,
};
use crate::lenvec::{enumerate_chambers_checked, Chamber, LengthVector};
use crate::polyring::{buchberger, GbConfig, Rational, TermOrder};

/// Tunables for [`run_all`].
#[derive(Clone, Copy, Debug)]
pub struct AcceptanceConfig {
    pub gb: GbConfig,
    /// Wall-clock budget for the `r = 5` part of the conjecture sweep.
    pub sweep_budget: Duration,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            gb: GbConfig::default(),
            sweep_budget: Duration::from_secs(600),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// What was checked on success, the first failure otherwise.
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({}; {:.2?})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed
        )
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "Koszul syzygy orders"),
    (2, "equilateral syzygy orders"),
    (3, "product and special-family syzygy orders"),
    (4, "conjecture sweep r <= 5"),
    (5, "Poincare polynomials"),
    (6, "polygon-space Betti numbers"),
    (7, "ring structure and pairing"),
    (8, "engine properties"),
    (9, "equilateral decomposition"),
];

/// Runs criterion `id` (1 to 9).
pub fn run_criterion(id: u8, cfg: &AcceptanceConfig) -> CriterionResult {
    let start = Instant::now();
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| *n)
        .unwrap_or("unknown");
    let outcome = match id {
        1 => koszul_orders(&cfg.gb),
        2 => equilateral_orders(&cfg.gb),
        3 => product_orders(&cfg.gb),
        4 => conjecture_sweep(cfg),
        5 => poincare_checks(),
        6 => polygon_betti(),
        7 => ring_structure(),
        8 => engine_properties(&cfg.gb),
        9 => decomposition(&cfg.gb),
        _ => Err(Error::Shape(format!("no criterion {id}"))),
    };
    let (passed, detail) = match outcome {
        Ok(Ok(s)) => (true, s),
        Ok(Err(s)) => (false, s),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all(cfg: &AcceptanceConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|&(id, _)| run_criterion(id, cfg)).collect()
}

/// `Ok(Ok(summary))` on success, `Ok(Err(first failure))` on a mismatch.
type Outcome = Result<std::result::Result<String, String>>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(xs: &[i64], a: u32, b: u32) -> Result<SpaceParams> {
    SpaceParams::new(LengthVector::from_integers(xs)?, a, b)
}

fn chambers(r: usize) -> Result<Vec<Chamber>> {
    let e = enumerate_chambers_checked(r, 2 * r as i64)?;
    if !e.stabilized {
        return Err(Error::Shape(format!("chamber enumeration for r={r} did not stabilize")));
    }
    Ok(e.chambers)
}

fn representative(c: &Chamber) -> Result<LengthVector> {
    c.representative()
        .cloned()
        .ok_or_else(|| Error::Shape(format!("chamber {} has no representative", c.id())))
}

fn koszul_orders(gb: &GbConfig) -> Outcome {
    let mut n = 0;
    for r in 2..=4 {
        for b in 1..=2 {
            let data = KoszulData::new(r, b)?;
            for k in 0..=r {
                let s = syzygy_order(&koszul_syzygy_presentation(k, &data)?, gb)?;
                if s != k {
                    return Ok(Err(format!("r={r} b={b}: syzord K_{k} = {s}")));
                }
                n += 1;
            }
        }
    }
    Ok(Ok(format!("{n} modules")))
}

fn expect_orders(cases: &[(&[i64], u32, usize)], gb: &GbConfig) -> Outcome {
    for &(xs, b, want) in cases {
        let got = ht_syzygy_order(&params(xs, 1, b)?, gb)?;
        if got != want {
            return Ok(Err(format!("{xs:?} b={b}: syzord {got}, expected {want}")));
        }
    }
    Ok(Ok(format!("{} cases", cases.len())))
}

fn equilateral_orders(gb: &GbConfig) -> Outcome {
    let cases: [(&[i64], u32, usize); 4] = [
        (&[1, 1, 1], 1, 1),
        (&[1, 1, 1], 2, 1),
        (&[1, 1, 1, 1, 1], 1, 2),
        (&[1, 1, 1, 1, 1], 2, 2),
    ];
    expect_orders(&cases, gb)
}

fn product_orders(gb: &GbConfig) -> Outcome {
    let cases: [(&[i64], u32, usize); 3] = [
        (&[0, 1, 1, 1], 1, 1),
        (&[0, 0, 0, 1, 1, 1], 1, 1),
        (&[1, 2, 2, 2, 3, 3], 1, 0),
    ];
    expect_orders(&cases, gb)
}

fn conjecture_sweep(cfg: &AcceptanceConfig) -> Outcome {
    let mut n = 0;
    let mut budget_start = None;
    for r in 1..=5 {
        if r == 5 {
            budget_start = Some(Instant::now());
        }
        for c in chambers(r)? {
            if let Some(t) = budget_start {
                if t.elapsed() > cfg.sweep_budget {
                    return Ok(Err(format!("r=5 sweep exceeded its {:?} budget after {n} chambers", cfg.sweep_budget)));
                }
            }
            let l = representative(&c)?;
            let s = ht_syzygy_order(&SpaceParams::new(l.clone(), 1, 1)?, &cfg.gb)?;
            if s + 1 != c.mu() {
                return Ok(Err(format!("chamber {} ({l}): syzord {s}, mu {}", c.id(), c.mu())));
            }
            n += 1;
        }
    }
    Ok(Ok(format!("{n} chambers")))
}

fn poincare_checks() -> Outcome {
    let mut n = 0;
    for r in 1..=6 {
        for c in chambers(r)? {
            let l = representative(&c)?;
            for (a, b) in [(1, 1), (2, 1), (1, 2)] {
                let p = SpaceParams::new(l.clone(), a, b)?;
                let poly = poincare_polynomial_x(&p);
                if let Err(e) = ensure(poly.eval_at_one() == 1 << r, || format!("{l} a={a} b={b}: P(1) = {}", poly.eval_at_one()))
                    .and_then(|_| ensure(poly.is_palindromic(p.dimension() as usize), || format!("{l} a={a} b={b}: {poly} not palindromic")))
                {
                    return Ok(Err(e));
                }
                n += 1;
            }
        }
    }
    let tri = poincare_polynomial_x(&params(&[1, 1, 1], 1, 1)?);
    if tri.to_string() != "1 + 3x^3 + 3x^4 + x^7" {
        return Ok(Err(format!("(1,1,1): {tri}")));
    }
    for r in 1..=6 {
        for (a, b) in [(1, 1), (2, 1), (1, 2)] {
            let mut xs = vec![0; r];
            xs[r - 1] = 1;
            let p = params(&xs, a, b)?;
            let d = p.d() as usize;
            let want = IntPoly::from_coeffs(one_plus_x(d))
                .pow(r as u32 - 1)
                .mul(&IntPoly::from_coeffs(one_plus_x(2 * b as usize - 1)));
            let got = poincare_polynomial_x(&p);
            if got != want {
                return Ok(Err(format!("{xs:?} a={a} b={b}: {got}, expected {want}")));
            }
        }
    }
    Ok(Ok(format!("{n} (chamber, a, b) triples plus cross-checks")))
}

fn one_plus_x(e: usize) -> Vec<i64> {
    let mut v = vec![0; e + 1];
    v[0] += 1;
    v[e] += 1;
    v
}

fn polygon_betti() -> Outcome {
    for r in [3usize, 5, 7] {
        let m = (r - 1) / 2;
        let central = crate::bigpoly::binomial(2 * m, m);
        let want = (1i64 << r) - 2 * central;
        let got = poincare_polynomial_e_equilateral(1, r)?.eval_at_one();
        let sum = betti_sum_e(&LengthVector::from_integers(&vec![1; r])?)?;
        if got != want || sum != want {
            return Ok(Err(format!("r={r}: P(1) = {got}, betti_sum = {sum}, expected {want}")));
        }
    }
    Ok(Ok("r = 3, 5, 7".into()))
}

fn same_class(x: &Option<CohomologyClass>, y: &Option<CohomologyClass>) -> bool {
    x == y
}

fn ring_structure() -> Outcome {
    let mut triples = 0usize;
    for r in 1..=4 {
        for c in chambers(r)? {
            let p = SpaceParams::new(representative(&c)?, 1, 1)?;
            let basis = cohomology_basis(&p);
            for x in &basis {
                for y in &basis {
                    let xy = cup_product(x, y, &p);
                    let sign = if (x.degree(&p) * y.degree(&p)) % 2 == 0 { 1 } else { -1 };
                    let yx = cup_product(y, x, &p).map(|z| z.scaled(&Rational::from_integer(sign)));
                    if !same_class(&xy, &yx) {
                        return Ok(Err(format!("chamber {}: {x} and {y} do not graded-commute", c.id())));
                    }
                    for z in &basis {
                        let left = xy.as_ref().and_then(|xy| cup_product(xy, z, &p));
                        let right = cup_product(y, z, &p).and_then(|yz| cup_product(x, &yz, &p));
                        if !same_class(&left, &right) {
                            return Ok(Err(format!("chamber {}: ({x} {y}) {z} not associative", c.id())));
                        }
                        triples += 1;
                    }
                }
            }
        }
    }
    let mut pairings = 0;
    for r in 1..=5 {
        for c in chambers(r)? {
            let p = SpaceParams::new(representative(&c)?, 1, 1)?;
            if !pairing_matrix(&p).is_signed_permutation() {
                return Ok(Err(format!("chamber {}: pairing is not perfect", c.id())));
            }
            pairings += 1;
        }
    }
    Ok(Ok(format!("{triples} triples, {pairings} pairings")))
}

/// Presentations the engine checks run over: Koszul syzygies and cokernels
/// of `ι` for every chamber with `r ≤ max_r`.
fn engine_instances(max_r: usize) -> Result<Vec<(String, GradedPresentation)>> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for b in 1..=2 {
            let data = KoszulData::new(r, b)?;
            for k in 0..=r + 1 {
                out.push((format!("K_{k} r={r} b={b}"), koszul_syzygy_presentation(k, &data)?));
            }
            for c in chambers(r)? {
                let p = SpaceParams::new(representative(&c)?, 1, b)?;
                out.push((format!("coker {} b={b}", c.id()), coker_presentation(&p)?));
            }
        }
    }
    Ok(out)
}

fn engine_properties(gb: &GbConfig) -> Outcome {
    let instances = engine_instances(4)?;
    for (name, p) in &instances {
        let res = minimal_free_resolution(p, usize::MAX, gb)?;
        if let Err(e) = ensure(res.is_complex(), || format!("{name}: d∘d ≠ 0"))
            .and_then(|_| ensure(res.length() <= p.nvars(), || format!("{name}: length {}", res.length())))
            .and_then(|_| ensure(res.is_minimal(), || format!("{name}: resolution not minimal")))
        {
            return Ok(Err(e));
        }
        let cols = &p.relations().columns;
        if !cols.is_empty() {
            let mut rev = cols.clone();
            rev.reverse();
            let g1 = buchberger(cols, p.generators(), gb)?;
            let g2 = buchberger(&rev, p.generators(), gb)?;
            if g1 != g2 {
                return Ok(Err(format!("{name}: reduced GB depends on generator order")));
            }
        }
    }
    let lex = GbConfig { order: TermOrder::LEX_TOP, ..*gb };
    let mut compared = 0;
    for (name, p) in instances.iter().filter(|(_, p)| p.nvars() <= 3) {
        let a = minimal_free_resolution(p, usize::MAX, gb)?.betti_table();
        let b = minimal_free_resolution(p, usize::MAX, &lex)?.betti_table();
        if a != b {
            return Ok(Err(format!("{name}: Betti table differs between degrevlex and lex")));
        }
        compared += 1;
    }
    for r in 1..=4 {
        for b in 1..=2u32 {
            let h = hilbert_series(&koszul_syzygy_presentation(0, &KoszulData::new(r, b)?)?, gb)?;
            let want = IntPoly::from_coeffs({
                let mut v = vec![0; 2 * b as usize + 1];
                v[0] = 1;
                v[2 * b as usize] = -1;
                v
            })
            .pow(r as u32);
            let got: Vec<i64> = (0..=want.degree().unwrap_or(0) as i64)
                .map(|e| h.numerator().get(&e).copied().unwrap_or(0))
                .collect();
            let extra = h.numerator().keys().any(|&e| e < 0 || e > want.degree().unwrap_or(0) as i64);
            if IntPoly::from_coeffs(got) != want || extra {
                return Ok(Err(format!("HS(K_0) r={r} b={b} = {h}")));
            }
        }
    }
    Ok(Ok(format!("{} resolutions, {compared} order comparisons", instances.len())))
}

fn decomposition(gb: &GbConfig) -> Outcome {
    for m in 1..=2 {
        for (a, b) in [(1, 1), (1, 2)] {
            let p = params(&vec![1; 2 * m + 1], a, b)?;
            let ours = equivariant_hilbert_series(&p, gb)?;
            let theirs = equilateral_decomposition(m, a, b).hilbert_series(gb)?;
            if ours != theirs {
                return Ok(Err(format!("r={} a={a} b={b}: {ours} vs {theirs}", 2 * m + 1)));
            }
        }
    }
    Ok(Ok("r = 3, 5 with (a, b) = (1, 1), (1, 2)".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_criterion_fails() {
        let r = run_criterion(42, &AcceptanceConfig::default());
        assert!(!r.passed);
        assert!(r.to_string().starts_with("[FAIL] criterion 42"));
    }
}
