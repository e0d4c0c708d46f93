use proptest::prelude::*;
use qsa_core::ring::{qfact, qint, ratio, ParamFrac, ParamPoly};

fn v(k: i32) -> ParamPoly {
    ParamPoly::v_pow(k)
}

fn laurent() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((-3i32..=3, -4i64..=4, 1i64..=3), 0..5)
        .prop_map(|ts| ParamPoly::from_terms(ts.into_iter().map(|(e, n, d)| ([e, 0], ratio(n, d))).collect()))
}

fn two_param() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -3i64..=3), 0..5)
        .prop_map(|ts| ParamPoly::from_terms(ts.into_iter().map(|(a, b, n)| ([a, b], ratio(n, 1))).collect()))
}

fn nonzero() -> impl Strategy<Value = ParamPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

#[test]
fn qint_examples() {
    assert_eq!(qint(1), ParamPoly::one());
    assert_eq!(qint(2), &v(1) + &v(-1));
    assert_eq!(qint(3), &(&v(2) + &ParamPoly::one()) + &v(-2));
    assert_eq!(qfact(0), ParamPoly::one());
    assert_eq!(qfact(2), &v(1) + &v(-1));
    assert_eq!(qfact(3), &qint(2) * &qint(3));
}

#[test]
fn qint_times_difference() {
    let diff = &v(1) - &v(-1);
    for k in 1..=12 {
        assert_eq!(&qint(k) * &diff, &v(k as i32) - &v(-(k as i32)), "k = {k}");
    }
}

#[test]
fn divide_exact_examples() {
    let two = &v(1) + &v(-1);
    assert_eq!(two.divide_exact(&two).unwrap(), Some(ParamPoly::one()));
    assert_eq!(v(3).divide_exact(&two).unwrap(), None);
    assert_eq!((&v(2) - &v(-2)).divide_exact(&two).unwrap(), Some(&v(1) - &v(-1)));
    assert!(v(1).divide_exact(&ParamPoly::zero()).is_err());
}

#[test]
fn frac_examples() {
    let two = &v(1) + &v(-1);
    let f = ParamFrac::new(&ParamPoly::int(2) * &v(1), two.clone()).unwrap();
    // 2v/(v+v^{-1}) = 2v^2/(v^2+1)
    assert_eq!(f.den(), &(&v(2) + &ParamPoly::one()));
    assert_eq!(f.num(), &(&ParamPoly::int(2) * &v(2)));
    assert_eq!(f.mul_poly(&two).as_poly(), Some(&ParamPoly::int(2) * &v(1)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ring_axioms_two_param(a in two_param(), b in two_param(), c in two_param()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn divide_exact_roundtrip(a in laurent(), b in nonzero()) {
        let q = (&a * &b).divide_exact(&b).unwrap();
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn frac_normalization_idempotent(a in laurent(), b in nonzero()) {
        let f = ParamFrac::new(a, b).unwrap();
        let g = ParamFrac::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(f.num(), g.num());
        prop_assert_eq!(f.den(), g.den());
    }

    #[test]
    fn frac_equality_is_cross_multiplication(a in laurent(), b in nonzero(), c in laurent(), d in nonzero()) {
        let f = ParamFrac::new(a.clone(), b.clone()).unwrap();
        let g = ParamFrac::new(c.clone(), d.clone()).unwrap();
        prop_assert_eq!(f == g, &a * &d == &b * &c);
        let scaled = ParamFrac::new(&a * &d, &b * &d).unwrap();
        prop_assert_eq!(scaled, f);
    }

    #[test]
    fn frac_field_ops(a in laurent(), b in nonzero(), c in laurent(), d in nonzero()) {
        let f = ParamFrac::new(a, b).unwrap();
        let g = ParamFrac::new(c, d).unwrap();
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        if !g.is_zero() {
            prop_assert_eq!(&(&f * &g) * &g.recip().unwrap(), f);
        }
    }
}
