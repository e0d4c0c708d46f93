use proptest::prelude::*;
use qsa_core::pbwd::psi_word;
use qsa_core::ring::ParamPoly;
use qsa_core::shuffle::{
    check_pole, check_wheel, degenerate_two_param, q_bracket, q_bracket_with_parities, shift_map, shuffle_product,
    Flavor, ShuffleElement,
};

fn flavors() -> Vec<Flavor> {
    vec![
        Flavor::trig_a(3),
        Flavor::two_param(3),
        Flavor::trig_super(2, 2),
        Flavor::yang_a(3),
        Flavor::yang_super(2, 2),
    ]
}

/// A word of length `len` for `flavor` from raw random data.
fn word(flavor: &Flavor, raw: &[(u32, i32)]) -> Vec<(u32, i32)> {
    let rank = flavor.rank();
    raw.iter()
        .map(|&(c, r)| {
            let r = if flavor.kind.is_yangian() { r.rem_euclid(3) } else { r };
            (c % rank + 1, r)
        })
        .collect()
}

fn raw_word(max: usize) -> impl Strategy<Value = Vec<(u32, i32)>> {
    prop::collection::vec((0u32..8, -1i32..=2), 1..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn associativity(fi in 0usize..5, a in raw_word(2), b in raw_word(2), c in raw_word(2)) {
        let f = flavors()[fi];
        let (x, y, z) = (
            psi_word(&f, &word(&f, &a)).unwrap(),
            psi_word(&f, &word(&f, &b)).unwrap(),
            psi_word(&f, &word(&f, &c)).unwrap(),
        );
        let left = shuffle_product(&shuffle_product(&x, &y).unwrap(), &z).unwrap();
        let right = shuffle_product(&x, &shuffle_product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn closure(fi in 0usize..5, a in raw_word(3), b in raw_word(3)) {
        let f = flavors()[fi];
        let x = psi_word(&f, &word(&f, &a)).unwrap();
        let y = psi_word(&f, &word(&f, &b)).unwrap();
        prop_assert!(check_pole(&x) && check_wheel(&x));
        prop_assert!(check_pole(&y) && check_wheel(&y));
        let p = shuffle_product(&x, &y).unwrap();
        prop_assert!(check_pole(&p));
        prop_assert!(check_wheel(&p));
    }

    #[test]
    fn two_param_degenerates_to_trig(a in raw_word(4)) {
        let tp = Flavor::two_param(3);
        let w = word(&tp, &a);
        let lhs = degenerate_two_param(&psi_word(&tp, &w).unwrap()).unwrap();
        let rhs = psi_word(&Flavor::trig_a(3), &w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn unit_is_neutral() {
    for f in flavors() {
        let e = psi_word(&f, &[(1, 0), (2, 1)]).unwrap();
        let one = ShuffleElement::unit(f);
        assert_eq!(shuffle_product(&e, &one).unwrap(), e);
        assert_eq!(shuffle_product(&one, &e).unwrap(), e);
        assert!(q_bracket(&e, &one, &ParamPoly::one()).unwrap().is_zero());
    }
}

#[test]
fn odd_bracket_is_an_anticommutator() {
    let f = Flavor::trig_super(1, 1);
    let a = ShuffleElement::generator(f, 1, 0).unwrap();
    let b = ShuffleElement::generator(f, 1, 2).unwrap();
    let br = q_bracket(&a, &b, &ParamPoly::one()).unwrap();
    let sum = shuffle_product(&a, &b).unwrap().add(&shuffle_product(&b, &a).unwrap()).unwrap();
    assert_eq!(br, sum);
    let aa = q_bracket(&a, &a, &ParamPoly::one()).unwrap();
    assert_eq!(aa, shuffle_product(&a, &a).unwrap().scale(&ParamPoly::int(2)));
    // forcing even parities gives the commutator instead
    let comm = q_bracket_with_parities(&a, &b, &ParamPoly::one(), (false, false)).unwrap();
    assert_eq!(comm, shuffle_product(&a, &b).unwrap().sub(&shuffle_product(&b, &a).unwrap()).unwrap());
}

#[test]
fn shift_map_twice() {
    let f = Flavor::trig_a(3);
    let e = psi_word(&f, &[(1, 0), (1, 1), (2, 0)]).unwrap();
    let once = shift_map(&e, 1).unwrap();
    let twice = shift_map(&once, 1).unwrap();
    let factor = shift_map(&ShuffleElement::new(f, vec![2, 1], qsa_core::multipoly::XPoly::one()).unwrap(), 1).unwrap();
    assert_eq!(twice.numerator, &(&e.numerator * &factor.numerator) * &factor.numerator);
    assert_eq!(shift_map(&ShuffleElement::unit(f), 2).unwrap(), ShuffleElement::unit(f));
}

#[test]
fn degeneration_rejects_half_powers() {
    let tp = Flavor::two_param(3);
    let e = ShuffleElement::generator(tp, 1, 0).unwrap().scale(&ParamPoly::u_pow(1, 0));
    assert!(degenerate_two_param(&e).is_err());
    assert!(degenerate_two_param(&ShuffleElement::unit(Flavor::trig_a(3))).is_err());
}
