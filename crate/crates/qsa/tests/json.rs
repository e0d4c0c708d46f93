use proptest::prelude::*;
use qsa::json::*;
use qsa_core::membership::{decompose, independence_certificate, monomials_in_window};
use qsa_core::pbwd::{degree_vectors, psi_word, PbwdChoice};
use qsa_core::ring::ParamPoly;
use qsa_core::shuffle::{Flavor, ShuffleElement};
use qsa_core::special::SpecPlan;

fn flavors() -> Vec<Flavor> {
    vec![Flavor::trig_a(3), Flavor::two_param(3), Flavor::trig_super(2, 1), Flavor::yang_a(3), Flavor::yang_super(1, 2)]
}

fn word(flavor: Flavor) -> impl Strategy<Value = Vec<(u32, i32)>> {
    prop::collection::vec((1..=flavor.rank(), -1i32..=2), 1..=3)
}

fn roundtrip_element(e: &ShuffleElement) {
    let v = element_to_json(e);
    let back = element_from_json(&v).unwrap();
    assert_eq!(&back, e);
    assert_eq!(element_to_json(&back), v);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn elements_roundtrip((idx, w) in (0usize..5).prop_flat_map(|i| (Just(i), word(flavors()[i])))) {
        let f = flavors()[idx];
        let w: Vec<(u32, i32)> = if f.kind.is_yangian() { w.into_iter().map(|(c, r)| (c, r.abs())).collect() } else { w };
        roundtrip_element(&psi_word(&f, &w).unwrap());
    }

    #[test]
    fn parameters_roundtrip(terms in prop::collection::vec((-6i32..6, -6i32..6, -20i64..20, 1i64..9), 0..6)) {
        for f in flavors() {
            let params = f.params();
            let mut p = ParamPoly::zero();
            for &(a, b, n, d) in &terms {
                let e = if params.len() == 2 { [a, b] } else { [a, 0] };
                p = &p + &ParamPoly::monomial(e, qsa_core::ring::ratio(n, d));
            }
            let back = param_from_json(&param_to_json(&p, params), params).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}

#[test]
fn choices_roundtrip() {
    for f in flavors() {
        let c = PbwdChoice::default_for(f);
        let v = choice_to_json(&c);
        assert_eq!(choice_from_json(&v).unwrap(), c);
    }
}

#[test]
fn plans_roundtrip() {
    let f = Flavor::trig_a(3);
    for d in degree_vectors(&f, &[2, 2]) {
        let plan = SpecPlan::canonical(&f, &d);
        let back = plan_from_json(&f, &plan_to_json(&f, &plan)).unwrap();
        assert_eq!(back.d, plan.d);
        assert_eq!(back.assignment, plan.assignment);
    }
}

#[test]
fn decompositions_and_certificates_roundtrip() {
    let f = Flavor::trig_a(3);
    let c = PbwdChoice::default_for(f);
    let e = psi_word(&f, &[(1, 0), (2, 1), (1, -1)]).unwrap();
    let dec = decompose(&e, &c).unwrap();
    let v = decomposition_to_json(&dec);
    assert_eq!(decomposition_to_json(&decomposition_from_json(&v).unwrap()), v);

    let cert = independence_certificate(&f, &[2, 1], 0, 1, &c).unwrap();
    assert_eq!(cert.monomials.len(), monomials_in_window(&f, &[2, 1], 0, 1).len());
    let v = certificate_to_json(&f, &cert);
    assert_eq!(certificate_to_json(&f, &certificate_from_json(&f, &v).unwrap()), v);
}

#[test]
fn malformed_input_is_rejected() {
    use serde_json::json;
    let bad = [
        json!({"flavor": {"kind": "trig-a", "n": 2}, "grading": [1, 1], "numerator": []}),
        json!({"flavor": {"kind": "trig-q", "n": 2}, "grading": [1], "numerator": []}),
        json!({"flavor": {"kind": "trig-a", "n": 2}, "grading": [1], "numerator": [{"vars": {"w:1:1": 1}, "coeff": [[[0], 1, 1]]}]}),
        json!({"flavor": {"kind": "trig-a", "n": 2}, "grading": [1], "numerator": [{"vars": {}, "coeff": [[[0, 1], 1, 1]]}]}),
        json!({"flavor": {"kind": "trig-a", "n": 2}, "grading": [1], "numerator": [{"vars": {}, "coeff": [[[0], 1, 0]]}]}),
    ];
    for v in bad {
        assert!(element_from_json(&v).is_err(), "accepted {v}");
    }
}

#[test]
fn asymmetric_numerators_load_but_fail_the_pole_check() {
    let v = serde_json::json!({"flavor": {"kind": "trig-a", "n": 2}, "grading": [2], "numerator": [{"vars": {"x:1:1": 1}, "coeff": [[[0], 1, 1]]}]});
    let e = element_from_json(&v).unwrap();
    assert!(!qsa_core::shuffle::check_pole(&e));
}
