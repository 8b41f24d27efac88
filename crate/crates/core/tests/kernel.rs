use qpwalks::algebra::Ring;
use qpwalks::fixtures;
use qpwalks::kernel::*;
use qpwalks::series::{LaurentPoly1, Part, RatFunc1, TruncSeries};
use qpwalks::stepset::StepSet;

fn s(text: &str) -> StepSet {
    text.parse().unwrap()
}

fn finite() -> Vec<StepSet> {
    fixtures::finite_models().map(|m| m.canonical()).collect()
}

fn is_zero_to(series: &TruncSeries<RatFunc1>, order: i32) -> bool {
    series.order().is_some_and(|o| o >= order)
        && series.terms().all(|(n, c)| n >= order || c.is_zero())
}

#[test]
fn roots_annihilate_the_kernel() {
    for m in finite() {
        let data = KernelData::new(m);
        let roots = y_roots(m, 17).unwrap();
        assert!(
            is_zero_to(&data.kernel_at(&roots.y0.to_ratfunc()).unwrap(), 15),
            "{m}"
        );
        assert!(is_zero_to(&data.kernel_at(&roots.y1).unwrap(), 15), "{m}");
    }
}

#[test]
fn product_and_sum_of_roots() {
    for m in finite() {
        let roots = y_roots(m, 14).unwrap();
        let r = |p: LaurentPoly1| RatFunc1::from_laurent(&p);
        let (am, a0, ap) = (r(m.a(-1)), r(m.a(0)), r(m.a(1)));
        let y0 = roots.y0.to_ratfunc();
        let product = y0.mul(&roots.y1);
        let expected = TruncSeries::constant(am.mul(&ap.try_inv().unwrap()));
        assert!(product.agrees_with(&expected), "{m}");
        let sum = y0.add(&roots.y1);
        let apinv = ap.try_inv().unwrap();
        let expected = TruncSeries::new(-1, vec![apinv.clone(), a0.mul(&apinv).neg()], i32::MAX);
        assert!(sum.agrees_with(&expected), "{m}");
    }
}

#[test]
fn three_term_inverse_identity() {
    for m in [
        "N,S,E,W",
        "W,S,NE",
        "E,W,NE,SW",
        "N,S,NE,SW,NW,SE",
        "NW,NE,S",
    ] {
        assert!(verify_kernel_inverse(s(m), 10).unwrap(), "{m}");
    }
}

#[test]
fn j_zero_is_inverse_square_root() {
    let m = s("W,S,NE");
    let direct = KernelData::new(m)
        .sqrt_delta(10)
        .unwrap()
        .inverse()
        .unwrap();
    assert_eq!(inv_kernel_ycoeff(m, 0, 10).unwrap(), direct);
}

#[test]
fn factorizations_recombine_and_agree() {
    for m in finite() {
        let data = KernelData::new(m);
        let f = canonical_factorization_with(&data, 20, Lifting::Direct).unwrap();
        let g = canonical_factorization_with(&data, 20, Lifting::Reversed).unwrap();
        assert_eq!(f, g, "{m}");
        assert!(f.product().agrees_with(&data.delta.truncate(20)), "{m}");
        assert!(f.delta0.coeff(0).is_one());
        assert!(f.minus.coeff(0).is_one() && f.plus.coeff(0).is_one());
        for (_, c) in f.minus.terms() {
            assert_eq!(c.part(Part::Positive), LaurentPoly1::zero(), "{m}");
        }
        for (_, c) in f.plus.terms() {
            assert_eq!(c.part(Part::Negative), LaurentPoly1::zero(), "{m}");
        }
        for (_, c) in f.minus.terms().skip(1) {
            assert!(c.coeff(0).is_zero(), "{m}: Δ₋ has constant term 1");
        }
        for (_, c) in f.plus.terms().skip(1) {
            assert!(c.coeff(0).is_zero(), "{m}: Δ₊ has constant term 1");
        }
    }
}

#[test]
fn double_kreweras_factorization_is_symmetric() {
    let f = canonical_factorization(s("W,S,NE,E,N,SW"), 16).unwrap();
    assert_eq!(f.minus, f.plus.map(|c| c.reflect()));
}
