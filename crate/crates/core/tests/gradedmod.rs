use std::collections::BTreeMap;

use bps_core::gradedmod::{
    ext_vanishes, hilbert_series, koszul_differential, koszul_syzygy_presentation, minimal_free_resolution,
    syzygy_order, GradedPresentation, HilbertSeries, KoszulData, PresentationJson,
};
use bps_core::polyring::{FreeModule, GbConfig, Monomial, Poly, PolyMatrix, Rational, TermOrder};
use proptest::prelude::*;

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn t(j: usize) -> Poly {
    Poly::var_pow(j, 1)
}

fn koszul(r: usize, b: u32, k: usize) -> GradedPresentation {
    koszul_syzygy_presentation(k, &KoszulData::new(r, b).unwrap()).unwrap()
}

fn presentation(nvars: usize, target: Vec<i64>, source: Vec<i64>, rows: &[Vec<Poly>]) -> GradedPresentation {
    let m = PolyMatrix::from_rows(FreeModule::new(target), FreeModule::new(source), rows).unwrap();
    GradedPresentation::new(nvars, m).unwrap()
}

/// Exponent vectors of total degree `deg` in `n` variables.
fn monomials(n: usize, deg: i64) -> Vec<Vec<u32>> {
    if deg < 0 {
        return Vec::new();
    }
    if n == 0 {
        return if deg == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for e in 0..=deg {
        for mut rest in monomials(n - 1, deg - e) {
            rest.insert(0, e as u32);
            out.push(rest);
        }
    }
    out
}

/// Rank of a list of sparse vectors over ℚ by Gaussian elimination.
fn rank(mut rows: Vec<BTreeMap<(usize, Vec<u32>), Rational>>) -> usize {
    let mut rank = 0;
    while let Some(pos) = rows.iter().position(|r| !r.is_empty()) {
        let pivot_row = rows.swap_remove(pos);
        let (key, pivot) = pivot_row.iter().next().map(|(k, v)| (k.clone(), v.clone())).unwrap();
        for r in rows.iter_mut() {
            if let Some(v) = r.get(&key).cloned() {
                let f = &v / &pivot;
                for (k, x) in &pivot_row {
                    let e = r.entry(k.clone()).or_default();
                    *e = &*e - &(&f * x);
                    if e.is_zero() {
                        r.remove(k);
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim_ℚ (coker P)_n` by linear algebra on monomial multiples of the
/// relation columns.
fn hilbert_function(p: &GradedPresentation, n: i64) -> i128 {
    let r = p.nvars();
    let gens = p.generators();
    let free: i64 = (0..gens.rank())
        .map(|i| {
            let d = n - gens.degree(i);
            if d >= 0 && d % 2 == 0 {
                monomials(r, d / 2).len() as i64
            } else {
                0
            }
        })
        .sum();
    let rels = p.relations();
    let mut vectors = Vec::new();
    for (j, col) in rels.columns.iter().enumerate() {
        let d = n - rels.source.degree(j);
        if d < 0 || d % 2 != 0 {
            continue;
        }
        for m in monomials(r, d / 2) {
            let mut v = BTreeMap::new();
            for (c, mono, comp) in col.terms() {
                let e: Vec<u32> = mono.exponents(r).iter().zip(&m).map(|(a, b)| a + b).collect();
                v.insert((comp, e), c.clone());
            }
            vectors.push(v);
        }
    }
    (free - rank(vectors) as i64) as i128
}

fn assert_hilbert_matches_oracle(p: &GradedPresentation, span: i64) {
    let h = hilbert_series(p, &cfg()).unwrap();
    let lo = p.generators().degrees.iter().copied().min().unwrap_or(0);
    let series = h.expand(lo + span);
    for n in lo..=lo + span {
        let want = hilbert_function(p, n);
        assert_eq!(series.get(&n).copied().unwrap_or(0), want, "degree {n} of {h}");
    }
}

#[test]
fn hilbert_series_matches_linear_algebra() {
    for r in 1..=3 {
        for b in 1..=2 {
            for k in 0..=r + 1 {
                assert_hilbert_matches_oracle(&koszul(r, b, k), 12);
            }
        }
    }
    let p = presentation(
        3,
        vec![0, 2],
        vec![2, 4, 4],
        &[vec![t(1), &t(2) * &t(3), Poly::zero()], vec![Poly::zero(), t(1), t(3)]],
    );
    assert_hilbert_matches_oracle(&p, 10);
}

#[test]
fn koszul_differentials() {
    let d = KoszulData::new(2, 1).unwrap();
    assert_eq!(koszul_differential(1, &d).unwrap().to_rows(), vec![vec![t(1), t(2)]]);
    assert_eq!(koszul_differential(2, &d).unwrap().to_rows(), vec![vec![t(2)], vec![-&t(1)]]);
    let d = KoszulData::new(3, 2).unwrap();
    let d1 = koszul_differential(1, &d).unwrap();
    let d2 = koszul_differential(2, &d).unwrap();
    assert_eq!((d2.nrows(), d2.ncols()), (3, 3));
    assert!(d1.compose(&d2).is_zero());
    for row in d2.to_rows() {
        for e in row {
            assert!(e.is_zero() || (e.num_terms() == 1 && e.homogeneous_degree() == Some(4)));
        }
    }
}

#[test]
fn koszul_presentations() {
    assert_eq!(koszul(3, 1, 3).num_relations(), 0);
    assert_eq!(koszul(3, 1, 4).num_generators(), 0);
    let k0 = koszul(3, 2, 0);
    assert_eq!(k0.num_generators(), 1);
    assert_eq!(k0.relations().to_rows()[0], vec![Poly::var_pow(1, 2), Poly::var_pow(2, 2), Poly::var_pow(3, 2)]);
    let res = minimal_free_resolution(&koszul(3, 1, 0), 10, &cfg()).unwrap();
    assert_eq!(res.ranks(), vec![1, 3, 3, 1]);
    assert!(res.is_complete() && res.is_minimal() && res.is_complex());
    let top = res.betti_table().rows().into_iter().find(|e| e.homological_degree == 3).unwrap();
    assert_eq!((top.internal_degree, top.rank), (6, 1));
    let h = hilbert_series(&koszul(2, 1, 0), &cfg()).unwrap();
    assert_eq!(h, HilbertSeries::from_numerator(2, [(0, 1), (2, -2), (4, 1)]));
}

#[test]
fn free_modules_and_shifts() {
    let r = GradedPresentation::free(3, FreeModule::new(vec![0]));
    assert_eq!(hilbert_series(&r, &cfg()).unwrap(), HilbertSeries::from_numerator(3, [(0, 1)]));
    assert_eq!(hilbert_series(&r.shifted(5), &cfg()).unwrap(), HilbertSeries::from_numerator(3, [(5, 1)]));
    assert_eq!(minimal_free_resolution(&r, 5, &cfg()).unwrap().length(), 0);
    assert_eq!(syzygy_order(&r, &cfg()).unwrap(), 3);
    assert!(r.auslander_transpose().num_generators() == 0);
    for i in 1..=3 {
        assert!(ext_vanishes(&r, i, &cfg()).unwrap());
    }
}

#[test]
fn transposes_and_ext() {
    let p = presentation(2, vec![0], vec![2], &[vec![t(1)]]);
    let tr = p.auslander_transpose();
    assert_eq!(tr.relations().to_rows(), vec![vec![t(1)]]);
    assert_eq!(syzygy_order(&p, &cfg()).unwrap(), 0);
    let k0 = koszul(2, 1, 0);
    assert!(ext_vanishes(&k0, 1, &cfg()).unwrap());
    assert!(!ext_vanishes(&k0, 2, &cfg()).unwrap());
    let k1 = koszul(2, 1, 1).auslander_transpose();
    assert!(ext_vanishes(&k1, 1, &cfg()).unwrap());
    assert!(!ext_vanishes(&k1, 2, &cfg()).unwrap());
}

#[test]
fn syzygy_orders_of_sums() {
    let r = GradedPresentation::free(3, FreeModule::new(vec![0]));
    let sum = r.direct_sum(&koszul(3, 1, 1)).unwrap();
    assert_eq!(syzygy_order(&sum, &cfg()).unwrap(), 1);
    for k in 0..=3 {
        assert_eq!(syzygy_order(&koszul(3, 1, k), &cfg()).unwrap(), k);
    }
}

#[test]
fn presentation_json_round_trips() {
    let p = koszul(3, 2, 1).shifted(-7);
    let js = serde_json::to_string(&p.to_json()).unwrap();
    let back: PresentationJson = serde_json::from_str(&js).unwrap();
    assert_eq!(GradedPresentation::try_from(&back).unwrap(), p);
}

/// An elementary graded change of basis on generators (`row`) or relations.
#[derive(Clone, Debug)]
struct Op {
    row: bool,
    i: usize,
    k: usize,
    var: usize,
    coeff: i64,
}

fn ops() -> impl Strategy<Value = Vec<Op>> {
    prop::collection::vec(
        (any::<bool>(), 0usize..64, 0usize..64, 0usize..3, prop_oneof![-2i64..=-1, 1i64..=2])
            .prop_map(|(row, i, k, var, coeff)| Op { row, i, k, var, coeff }),
        0..8,
    )
}

/// Applies `ops` to the relation matrix; each one is invertible, so the
/// cokernel is unchanged up to isomorphism.
fn conjugate(p: &GradedPresentation, ops: &[Op]) -> GradedPresentation {
    let rel = p.relations();
    let (tdeg, sdeg) = (rel.target.degrees.clone(), rel.source.degrees.clone());
    let mut rows = rel.to_rows();
    let scaled = |f: &Poly, op: &Op, diff: i64| {
        f.mul_monomial(&Rational::from_integer(op.coeff), &Monomial::var_pow(op.var, (diff / 2) as u32))
    };
    for op in ops {
        if op.row {
            let n = tdeg.len();
            if n < 2 {
                continue;
            }
            let (i, k) = (op.i % n, op.k % n);
            let diff = tdeg[k] - tdeg[i];
            if i == k || diff < 0 || diff % 2 != 0 {
                continue;
            }
            let add: Vec<Poly> = rows[k].iter().map(|f| scaled(f, op, diff)).collect();
            for (x, y) in rows[i].iter_mut().zip(&add) {
                *x = &*x + y;
            }
        } else {
            let n = sdeg.len();
            if n < 2 {
                continue;
            }
            let (j, l) = (op.i % n, op.k % n);
            let diff = sdeg[j] - sdeg[l];
            if j == l || diff < 0 || diff % 2 != 0 {
                continue;
            }
            for row in rows.iter_mut() {
                let add = scaled(&row[l], op, diff);
                row[j] = &row[j] + &add;
            }
        }
    }
    presentation(p.nvars(), tdeg, sdeg, &rows)
}

fn piece() -> impl Strategy<Value = GradedPresentation> {
    (1u32..=2, 0usize..=4, -4i64..=4).prop_map(|(b, k, s)| koszul(3, b, k).shifted(2 * s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn syzygy_order_of_a_sum_is_the_minimum(m in piece(), n in piece(), o in ops()) {
        let sm = syzygy_order(&m, &cfg()).unwrap();
        let sn = syzygy_order(&n, &cfg()).unwrap();
        let sum = m.direct_sum(&n).unwrap();
        let want = if n.num_generators() == 0 { sm } else if m.num_generators() == 0 { sn } else { sm.min(sn) };
        prop_assert_eq!(syzygy_order(&sum, &cfg()).unwrap(), want);
        // The split extension 0 → M → M ⊕ N → N → 0 with syzord N > syzord M
        // keeps syzord M after an arbitrary change of basis.
        let twisted = conjugate(&sum, &o);
        prop_assert_eq!(syzygy_order(&twisted, &cfg()).unwrap(), want);
        prop_assert_eq!(hilbert_series(&twisted, &cfg()).unwrap(), hilbert_series(&sum, &cfg()).unwrap());
        prop_assert_eq!(
            minimal_free_resolution(&twisted, 8, &cfg()).unwrap().betti_table(),
            minimal_free_resolution(&sum, 8, &cfg()).unwrap().betti_table()
        );
    }

    #[test]
    fn hilbert_series_is_additive(m in piece(), n in piece()) {
        let sum = hilbert_series(&m.direct_sum(&n).unwrap(), &cfg()).unwrap();
        let parts = hilbert_series(&m, &cfg()).unwrap().add(&hilbert_series(&n, &cfg()).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn betti_tables_do_not_depend_on_the_order(m in piece(), n in piece(), o in ops()) {
        let p = conjugate(&m.direct_sum(&n).unwrap(), &o);
        let lex = GbConfig::with_order(TermOrder::LEX_TOP);
        let a = minimal_free_resolution(&p, 8, &cfg()).unwrap();
        let b = minimal_free_resolution(&p, 8, &lex).unwrap();
        prop_assert_eq!(a.betti_table(), b.betti_table());
        prop_assert!(a.is_complex() && b.is_complex());
        prop_assert!(a.length() <= 3 && a.is_minimal());
    }
}

#[test]
fn k0_numerators() {
    for r in 1..=4 {
        for b in 1..=2u32 {
            let h = hilbert_series(&koszul(r, b, 0), &cfg()).unwrap();
            // (1 − x^{2b})^r by the binomial theorem.
            let mut want = Vec::new();
            let mut c = 1i64;
            for i in 0..=r as i64 {
                want.push((2 * b as i64 * i, if i % 2 == 0 { c } else { -c }));
                c = c * (r as i64 - i) / (i + 1);
            }
            assert_eq!(h, HilbertSeries::from_numerator(r, want), "r={r} b={b}");
        }
    }
}
