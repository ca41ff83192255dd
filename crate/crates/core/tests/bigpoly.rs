use bps_core::bigpoly::{
    analyze, betti_sum_e, coker_presentation, cohomology_basis, cup_product, dimension, equilateral_decomposition,
    equivariant_hilbert_series, ht_syzygy_order, iota_matrix, kernel_presentation, pairing_matrix,
    poincare_polynomial_e_equilateral, poincare_polynomial_x, ClassKind, IntPoly, Report, SpaceParams, SummandKind,
};
use bps_core::gradedmod::{hilbert_series, koszul_syzygy_presentation, syzygy_order, GradedPresentation, HilbertSeries, KoszulData};
use bps_core::lenvec::{chamber_of, enumerate_chambers, shuffle_sign, SubsetMask};
use bps_core::polyring::FreeModule;
use bps_core::{GbConfig, LengthVector, Rational};
use proptest::prelude::*;

fn params(xs: &[i64], a: u32, b: u32) -> SpaceParams {
    SpaceParams::new(LengthVector::from_integers(xs).unwrap(), a, b).unwrap()
}

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn generic(max_r: usize) -> impl Strategy<Value = Vec<i64>> {
    (1usize..=max_r)
        .prop_flat_map(|r| prop::collection::vec(0i64..=9, r))
        .prop_map(|mut xs| {
            xs.sort_unstable();
            xs
        })
        .prop_filter("generic", |xs| LengthVector::from_integers(xs).map(|l| l.is_generic()).unwrap_or(false))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poincare_polynomial_is_palindromic(xs in generic(7), a in 1u32..=3, b in 1u32..=3) {
        let p = params(&xs, a, b);
        let poly = poincare_polynomial_x(&p);
        prop_assert_eq!(poly.eval_at_one(), 1 << xs.len());
        prop_assert!(poly.is_palindromic(p.dimension() as usize));
        prop_assert!(poly.coeffs().iter().all(|&c| c >= 0));
    }

    #[test]
    fn syzygy_order_bounds_and_chamber_invariance(xs in generic(5), b in 1u32..=2) {
        let p = params(&xs, 1, b);
        let l = p.lengths();
        let s = ht_syzygy_order(&p, &cfg()).unwrap();
        prop_assert!(s < l.mu().unwrap());
        prop_assert!(2 * s < xs.len());
        let rep = chamber_of(l).unwrap().representative().unwrap().clone();
        prop_assert_eq!(ht_syzygy_order(&SpaceParams::new(rep, 2, b).unwrap(), &cfg()).unwrap(), s);
    }

    #[test]
    fn prepending_a_zero_keeps_the_syzygy_order(xs in generic(4)) {
        let s = ht_syzygy_order(&params(&xs, 1, 1), &cfg()).unwrap();
        let mut ys = vec![0];
        ys.extend(&xs);
        prop_assume!(LengthVector::from_integers(&ys).unwrap().is_generic());
        prop_assert_eq!(ht_syzygy_order(&params(&ys, 1, 1), &cfg()).unwrap(), s);
    }

    #[test]
    fn iota_is_homogeneous(xs in generic(5), a in 1u32..=2, b in 1u32..=2) {
        let p = params(&xs, a, b);
        let iota = iota_matrix(&p).unwrap();
        let m = &iota.matrix;
        let n = iota.short.len();
        for (j, col) in m.columns.iter().enumerate() {
            prop_assert!(col.is_homogeneous(&m.target));
            prop_assert_eq!(col.degree(&m.target), Some(m.source.degree(j)));
            if j >= n {
                for (c, mono, _) in col.terms() {
                    prop_assert_eq!(c.abs(), Rational::ONE);
                    prop_assert_eq!(mono.degree(), b);
                    prop_assert_eq!(mono.exponents(xs.len()).iter().filter(|&&e| e > 0).count(), 1);
                }
            }
        }
        let coker = coker_presentation(&p).unwrap();
        prop_assert_eq!(coker.num_generators(), (1 << xs.len()) - n);
    }
}

#[test]
fn dimensions_and_poincare_examples() {
    assert_eq!(dimension(3, 1, 1), 7);
    assert_eq!(dimension(1, 1, 1), 1);
    assert_eq!(dimension(3, 2, 1), 11);
    assert_eq!(poincare_polynomial_x(&params(&[1, 1, 1], 1, 1)).to_string(), "1 + 3x^3 + 3x^4 + x^7");
    let x3 = IntPoly::from_coeffs(vec![1, 0, 0, 1]);
    let want = x3.mul(&x3).mul(&IntPoly::from_coeffs(vec![1, 1]));
    assert_eq!(poincare_polynomial_x(&params(&[0, 0, 1], 1, 1)), want);
}

#[test]
fn polygon_space_examples() {
    assert_eq!(poincare_polynomial_e_equilateral(1, 3).unwrap().to_string(), "2 + 2x");
    assert_eq!(poincare_polynomial_e_equilateral(1, 5).unwrap().eval_at_one(), 20);
    assert_eq!(poincare_polynomial_e_equilateral(2, 3).unwrap().eval_at_one(), 4);
    let tri = LengthVector::from_integers(&[1, 1, 1]).unwrap();
    assert_eq!(betti_sum_e(&tri).unwrap(), 4);
    assert_eq!(betti_sum_e(&LengthVector::from_integers(&[0, 0, 1]).unwrap()).unwrap(), 0);
    // (0, 1, …, 1) with 2m + 2 entries doubles the equilateral count.
    for m in 1..=3usize {
        let mut xs = vec![1i64; 2 * m + 2];
        xs[0] = 0;
        let odd = poincare_polynomial_e_equilateral(1, 2 * m + 1).unwrap().eval_at_one();
        assert_eq!(betti_sum_e(&LengthVector::from_integers(&xs).unwrap()).unwrap(), 2 * odd);
    }
}

#[test]
fn ring_examples() {
    let p = params(&[1, 1, 1], 1, 1);
    let s = |e: &[usize]| SubsetMask::from_elements(3, e).unwrap();
    let alpha = |e: &[usize]| bps_core::bigpoly::CohomologyClass::alpha(s(e), &p).unwrap();
    let beta = |e: &[usize]| bps_core::bigpoly::CohomologyClass::beta(s(e), &p).unwrap();
    assert_eq!(cup_product(&alpha(&[1]), &alpha(&[2]), &p), None);
    assert_eq!(cup_product(&alpha(&[1]), &beta(&[2, 3]), &p), Some(beta(&[1, 2, 3])));
    assert_eq!(cup_product(&beta(&[1, 2]), &beta(&[1, 3]), &p), None);
    assert_eq!(cup_product(&alpha(&[]), &alpha(&[3]), &p), Some(alpha(&[3])));
}

#[test]
fn pairing_entries() {
    for c in enumerate_chambers(4, 8).unwrap() {
        let p = SpaceParams::new(c.representative().unwrap().clone(), 1, 2).unwrap();
        let m = pairing_matrix(&p);
        let dim = p.dimension();
        for (i, x) in m.basis.iter().enumerate() {
            for (j, y) in m.basis.iter().enumerate() {
                let e = m.entries[i][j];
                if x.degree(&p) + y.degree(&p) != dim {
                    assert_eq!(e, 0);
                }
                if x.kind == ClassKind::Alpha && y.kind == ClassKind::Beta && x.set == y.set.complement() {
                    assert_eq!(e, shuffle_sign(x.set, y.set).unwrap());
                }
            }
        }
        assert!(m.is_signed_permutation());
        assert_eq!(cohomology_basis(&p).len(), 16);
    }
}

#[test]
fn iota_examples() {
    let i = iota_matrix(&params(&[1], 1, 2)).unwrap();
    assert_eq!(i.rows.len(), 2);
    assert_eq!(i.matrix.columns[1].coordinate(1), bps_core::Poly::var_pow(1, 2));
    assert_eq!(i.matrix.columns[1].coordinate(0), bps_core::Poly::zero());
    let i = iota_matrix(&params(&[0, 1], 1, 1)).unwrap();
    let w = &i.matrix.columns[i.short.len()];
    assert_eq!(w.coordinate(1), bps_core::Poly::var_pow(1, 1));
    assert_eq!(w.coordinate(2), bps_core::Poly::var_pow(2, 1));
}

#[test]
fn coker_examples() {
    let c = coker_presentation(&params(&[1], 1, 2)).unwrap();
    assert_eq!((c.num_generators(), c.num_relations()), (1, 1));
    assert_eq!(syzygy_order(&c, &cfg()).unwrap(), 0);
    assert_eq!(syzygy_order(&coker_presentation(&params(&[0, 0, 1], 1, 1)).unwrap(), &cfg()).unwrap(), 0);
    // coker for (1,1,1) is K_1 on the three pairs plus a free summand on [3].
    for b in 1..=2 {
        let p = params(&[1, 1, 1], 1, b);
        let d = p.d();
        let coker = coker_presentation(&p).unwrap();
        assert_eq!(coker.num_generators(), 4);
        let k1 = koszul_syzygy_presentation(1, &KoszulData::new(3, b).unwrap()).unwrap().shifted(-2 * d);
        let free = GradedPresentation::free(3, FreeModule::new(vec![-3 * d]));
        let want = hilbert_series(&k1.direct_sum(&free).unwrap(), &cfg()).unwrap();
        assert_eq!(hilbert_series(&coker, &cfg()).unwrap(), want);
        assert_eq!(syzygy_order(&coker, &cfg()).unwrap(), 1);
    }
}

#[test]
fn syzygy_order_examples() {
    for (xs, want) in [(&[1, 1, 1][..], 1), (&[1, 2, 2, 2, 3, 3][..], 0), (&[0, 0, 0, 1, 1, 1][..], 1)] {
        for a in 1..=2 {
            for b in 1..=2 {
                assert_eq!(ht_syzygy_order(&params(xs, a, b), &cfg()).unwrap(), want, "{xs:?} a={a} b={b}");
            }
        }
    }
}

#[test]
fn circle_factor_series() {
    // X for ℓ = (1) is S^{2b−1} with a free circle action: H_T = R/(t^b).
    for b in 1..=3 {
        let h = equivariant_hilbert_series(&params(&[1], 1, b), &cfg()).unwrap();
        assert_eq!(h, HilbertSeries::from_numerator(1, [(0, 1), (2 * b as i64, -1)]));
        assert_eq!(kernel_presentation(&params(&[1], 1, b), &cfg()).unwrap().num_generators(), 0);
    }
}

#[test]
fn equilateral_decompositions() {
    let dec = equilateral_decomposition(1, 1, 1);
    let kinds: Vec<(SummandKind, i64, usize)> = dec.summands.iter().map(|s| (s.kind, s.shift, s.multiplicity)).collect();
    assert_eq!(
        kinds,
        [(SummandKind::Free, 0, 1), (SummandKind::Koszul(1), 3, 1), (SummandKind::Koszul(3), 6, 1), (SummandKind::Free, 7, 1)]
    );
    for m in 1..=2 {
        for b in 1..=2 {
            let dec = equilateral_decomposition(m, 1, b);
            assert_eq!(syzygy_order(&dec.presentation().unwrap(), &cfg()).unwrap(), m);
            let p = params(&vec![1; 2 * m + 1], 1, b);
            assert_eq!(equivariant_hilbert_series(&p, &cfg()).unwrap(), dec.hilbert_series(&cfg()).unwrap());
            assert_eq!(hilbert_series(&dec.presentation().unwrap(), &cfg()).unwrap(), dec.hilbert_series(&cfg()).unwrap());
        }
    }
    // With a = 2 the degrees move but the two computations still agree.
    let p = params(&[1, 1, 1], 2, 2);
    assert_eq!(equivariant_hilbert_series(&p, &cfg()).unwrap(), equilateral_decomposition(1, 2, 2).hilbert_series(&cfg()).unwrap());
}

#[test]
fn reports_round_trip_and_flag_the_conjecture() {
    for (xs, mu, s) in [(&[1, 1, 1][..], 2, 1), (&[1, 2, 2, 2, 3, 3][..], 1, 0), (&[0, 1, 1, 1][..], 2, 1)] {
        let rep = analyze(&params(xs, 1, 1), &cfg()).unwrap();
        assert_eq!((rep.mu, rep.syzord, rep.conjecture_ok, rep.pairing_perfect), (mu, s, true, true));
        let js = serde_json::to_string(&rep).unwrap();
        for field in ["representative", "mu", "syzord", "conjecture_ok", "poincare_X", "betti_sum_E", "pairing_perfect"] {
            assert!(js.contains(&format!("\"{field}\"")), "{field} missing from {js}");
        }
        assert_eq!(serde_json::from_str::<Report>(&js).unwrap(), rep);
    }
}
