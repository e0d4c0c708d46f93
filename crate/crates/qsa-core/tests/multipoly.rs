use std::collections::BTreeMap;

use proptest::prelude::*;
use qsa_core::multipoly::{
    inv_int, monomial_symmetric_expand, orbit_rebuild, symmetrize, Image, VarId, XPoly,
};
use qsa_core::ring::{ratio, ParamPoly};

fn x(c: u32, s: u32) -> VarId {
    VarId::x(c, s)
}

/// Random polynomial in `x_{c,s}`, `c ≤ colors`, `s ≤ k`.
fn xpoly(colors: u32, k: u32, lo: i32, hi: i32) -> impl Strategy<Value = XPoly> {
    let term = (
        prop::collection::vec(lo..=hi, (colors * k) as usize),
        -3i64..=3,
        -1i32..=1,
    );
    prop::collection::vec(term, 0..5).prop_map(move |ts| {
        let mut acc = XPoly::zero();
        for (exps, c, e) in ts {
            let vars: Vec<(VarId, i32)> =
                exps.iter().enumerate().map(|(idx, &p)| (x(idx as u32 / k + 1, idx as u32 % k + 1), p)).collect();
            acc = &acc + &XPoly::monomial(&vars, &ParamPoly::monomial([e, 0], ratio(c, 1)));
        }
        acc
    })
}

fn symmetric(k: u32) -> impl Strategy<Value = XPoly> {
    xpoly(1, k, -2, 2).prop_map(move |f| symmetrize(&f, &[k], &[]).unwrap())
}

#[test]
fn symmetrize_examples() {
    let half = inv_int(2);
    let sum = &XPoly::var(x(1, 1)) + &XPoly::var(x(1, 2));
    assert_eq!(symmetrize(&XPoly::var(x(1, 1)), &[2], &[]).unwrap(), sum.scale_rat(&half));
    let diff = &XPoly::var(x(1, 1)) - &XPoly::var(x(1, 2));
    assert_eq!(symmetrize(&XPoly::var(x(1, 1)), &[2], &[1]).unwrap(), diff.scale_rat(&half));
    assert_eq!(symmetrize(&XPoly::var(x(1, 2)), &[2], &[]).unwrap(), sum.scale_rat(&half));
}

#[test]
fn monomial_symmetric_examples() {
    assert_eq!(monomial_symmetric_expand(&XPoly::one(), 1, 2).unwrap(), vec![(vec![0, 0], ParamPoly::one())]);
    let e1 = &XPoly::var(x(1, 1)) + &XPoly::var(x(1, 2));
    assert_eq!(monomial_symmetric_expand(&e1, 1, 2).unwrap(), vec![(vec![0, 1], ParamPoly::one())]);
    let f = &(&XPoly::monomial(&[(x(1, 1), 2), (x(1, 2), 1)], &ParamPoly::one())
        + &XPoly::monomial(&[(x(1, 1), 1), (x(1, 2), 2)], &ParamPoly::one()))
        + &XPoly::monomial(&[(x(1, 1), 1), (x(1, 2), 1)], &ParamPoly::int(3));
    let mut got = monomial_symmetric_expand(&f, 1, 2).unwrap();
    got.sort_by(|a, b| a.0.cmp(&b.0));
    assert_eq!(got, vec![(vec![1, 1], ParamPoly::int(3)), (vec![1, 2], ParamPoly::one())]);
    assert!(monomial_symmetric_expand(&XPoly::var(x(1, 1)), 1, 2).is_err());
}

#[test]
fn substitute_examples() {
    let y = VarId::y(1, 1);
    let a = 4;
    let mut asg = BTreeMap::new();
    asg.insert(x(1, 1), Image::scaled(ParamPoly::v_pow(-1), y));
    assert_eq!(XPoly::var_pow(x(1, 1), a).substitute(&asg).unwrap(), XPoly::monomial(&[(y, a)], &ParamPoly::v_pow(-a)));

    let f = &XPoly::var(x(1, 1)) - &XPoly::var(x(1, 2)).scale(&ParamPoly::v_pow(2));
    let mut asg = BTreeMap::new();
    asg.insert(x(1, 1), Image::scaled(ParamPoly::v_pow(2), y));
    asg.insert(x(1, 2), Image::var(y));
    assert!(f.substitute(&asg).unwrap().is_zero());

    let ident: BTreeMap<VarId, Image> = f.vars().into_iter().map(|v| (v, Image::var(v))).collect();
    assert_eq!(f.substitute(&ident).unwrap(), f);
    let mut partial = BTreeMap::new();
    partial.insert(x(1, 1), Image::var(y));
    assert!(f.substitute(&partial).is_err());
}

fn scaled_assignment(k: u32) -> BTreeMap<VarId, Image> {
    (1..=k).map(|s| (x(1, s), Image::scaled(ParamPoly::v_pow(-(s as i32)), VarId::y(1, 1 + s % 2)))).collect()
}

fn shifted_assignment(k: u32) -> BTreeMap<VarId, Image> {
    (1..=k)
        .map(|s| (x(1, s), Image::shifted(VarId::y(1, 1), ParamPoly::monomial([1, 0], ratio(-(s as i64), 2)))))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symmetrize_idempotent(f in xpoly(2, 2, -2, 2), skew in any::<bool>()) {
        let skew_colors: Vec<u32> = if skew { vec![2] } else { vec![] };
        let once = symmetrize(&f, &[2, 2], &skew_colors).unwrap();
        let twice = symmetrize(&once, &[2, 2], &skew_colors).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn transpositions_act_by_sign(f in xpoly(1, 3, -2, 2), skew in any::<bool>()) {
        let skew_colors: Vec<u32> = if skew { vec![1] } else { vec![] };
        let s = symmetrize(&f, &[3], &skew_colors).unwrap();
        for (a, b) in [(1, 2), (2, 3), (1, 3)] {
            let swapped = s.swap_vars(x(1, a), x(1, b));
            if skew {
                prop_assert_eq!(swapped, s.neg());
            } else {
                prop_assert_eq!(&swapped, &s);
            }
        }
    }

    #[test]
    fn monomial_symmetric_roundtrip_three(f in symmetric(3)) {
        let vars: Vec<VarId> = (1..=3).map(|s| x(1, s)).collect();
        let exp = monomial_symmetric_expand(&f, 1, 3).unwrap();
        prop_assert_eq!(orbit_rebuild(&exp, &vars, false), f);
    }

    #[test]
    fn substitute_is_a_ring_map(f in xpoly(1, 3, -2, 2), g in xpoly(1, 3, -2, 2)) {
        let asg = scaled_assignment(3);
        let (sf, sg) = (f.substitute(&asg).unwrap(), g.substitute(&asg).unwrap());
        prop_assert_eq!((&f + &g).substitute(&asg).unwrap(), &sf + &sg);
        prop_assert_eq!((&f * &g).substitute(&asg).unwrap(), &sf * &sg);
    }

    #[test]
    fn shifted_substitute_is_a_ring_map(f in xpoly(1, 3, 0, 2), g in xpoly(1, 3, 0, 2)) {
        let asg = shifted_assignment(3);
        let (sf, sg) = (f.substitute(&asg).unwrap(), g.substitute(&asg).unwrap());
        prop_assert_eq!((&f + &g).substitute(&asg).unwrap(), &sf + &sg);
        prop_assert_eq!((&f * &g).substitute(&asg).unwrap(), &sf * &sg);
    }
}

#[test]
fn monomial_symmetric_roundtrip_hundred() {
    // deterministic sweep: 100 symmetric inputs in up to 5 variables
    let mut count = 0;
    for k in 1..=5u32 {
        let vars: Vec<VarId> = (1..=k).map(|s| x(1, s)).collect();
        for seed in 0..20i32 {
            let mut f = XPoly::zero();
            for t in 0..3i32 {
                let exps: Vec<(VarId, i32)> =
                    vars.iter().enumerate().map(|(i, &v)| (v, (seed * 7 + t * 3 + i as i32 * 5) % 5 - 2)).collect();
                f = &f + &XPoly::monomial(&exps, &ParamPoly::monomial([t - 1, 0], ratio((seed % 4 + 1) as i64, 1)));
            }
            let f = symmetrize(&f, &[k], &[]).unwrap();
            let exp = monomial_symmetric_expand(&f, 1, k).unwrap();
            assert_eq!(orbit_rebuild(&exp, &vars, false), f);
            count += 1;
        }
    }
    assert_eq!(count, 100);
}
