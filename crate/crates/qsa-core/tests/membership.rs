use proptest::prelude::*;
use qsa_core::membership::{
    decompose, decompose_rank1, independence_certificate, integral_failure, is_good, is_integral,
    is_integral_by_basis, monomials_in_window, IntegralFailure, Kernel,
};
use qsa_core::multipoly::{orbit_sum, VarId, XPoly};
use qsa_core::pbwd::{positive_roots, psi_monomial, psi_word, tilde_scale, PbwdChoice, PbwdMonomial};
use qsa_core::ring::{qfact, qint, ratio, ParamFrac, ParamPoly};
use qsa_core::shuffle::{q_bracket, shift_map, shuffle_product, Flavor, ShuffleElement};

fn x(c: u32, s: u32) -> XPoly {
    XPoly::var(VarId::x(c, s))
}

/// `(v − v^{-1})^{|k|} · primitive part of Σ a_w Ψ(w)`.
fn candidate(f: &Flavor, words: &[(i64, Vec<(u32, i32)>)]) -> Option<ShuffleElement> {
    let mut acc: Option<ShuffleElement> = None;
    for (a, w) in words {
        let e = psi_word(f, w).unwrap().scale(&ParamPoly::int(*a));
        acc = Some(match acc {
            None => e,
            Some(s) => s.add(&e).ok()?,
        });
    }
    let acc = acc?;
    if acc.is_zero() {
        return None;
    }
    let content = acc.numerator.content();
    let num = acc.numerator.divide_params(&content).unwrap().clear_denominators().0;
    Some(ShuffleElement::new(*f, acc.grading.clone(), num).unwrap().scale(&f.normalizer().pow(acc.degree())))
}

/// A word of the given grading with modes drawn from `modes`.
fn word_of(grading: &[u32], modes: &[i32], perm: u64) -> Vec<(u32, i32)> {
    let mut colors: Vec<u32> = grading.iter().enumerate().flat_map(|(i, &k)| vec![i as u32 + 1; k as usize]).collect();
    let mut state = perm;
    for i in (1..colors.len()).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        colors.swap(i, (state >> 33) as usize % (i + 1));
    }
    colors.into_iter().zip(modes.iter().cycle()).map(|(c, &r)| (c, r)).collect()
}

#[test]
fn rank1_kernels() {
    let one = decompose_rank1(&XPoly::one(), 2, Kernel::TrigSymMinus).unwrap();
    let two_v = ParamFrac::new(ParamPoly::monomial([1, 0], ratio(2, 1)), qint(2)).unwrap();
    assert_eq!(one, vec![(vec![0, 0], two_v)]);
    let one_plus = decompose_rank1(&XPoly::one(), 2, Kernel::TrigSymPlus).unwrap();
    let two_v_inv = ParamFrac::new(ParamPoly::monomial([-1, 0], ratio(2, 1)), qint(2)).unwrap();
    assert_eq!(one_plus, vec![(vec![0, 0], two_v_inv)]);
    let yang = decompose_rank1(&XPoly::one(), 3, Kernel::YangSym).unwrap();
    assert_eq!(yang, vec![(vec![0, 0, 0], ParamFrac::one())]);
    assert_eq!(Kernel::parse("skew").unwrap(), Kernel::Skew);
    assert!(Kernel::parse("nope").is_err());

    // a rank-1 decomposition rebuilds its input
    for kernel in [Kernel::TrigSymMinus, Kernel::TrigSymPlus, Kernel::YangSym, Kernel::Skew] {
        let skew = kernel.skew();
        let vars: Vec<VarId> = (1..=3).map(|s| VarId::x(1, s)).collect();
        let lam = if skew { vec![-1, 0, 2] } else { vec![0, 1, 1] };
        let f = &orbit_sum(&lam, &vars, skew) + &orbit_sum(&[0, 1, 2], &vars, skew).scale(&ParamPoly::v_pow(3));
        let parts = decompose_rank1(&f, 3, kernel).unwrap();
        let mut num = XPoly::zero();
        let mut den = ParamPoly::one();
        for (modes, c) in &parts {
            let p = kernel.power(modes).unwrap();
            num = &num.scale(c.den()) + &p.scale(&(&den * c.num()));
            den = &den * c.den();
        }
        assert_eq!(num, f.scale(&den), "{}", kernel.name());
    }
}

#[test]
fn decompose_examples() {
    let f = Flavor::trig_a(3);
    let choice = PbwdChoice::default_for(f);
    let e1 = ShuffleElement::generator(f, 1, 0).unwrap();
    let e2 = ShuffleElement::generator(f, 2, 0).unwrap();
    let br = q_bracket(&e1, &e2, &ParamPoly::v()).unwrap();
    let dec = decompose(&br, &choice).unwrap();
    assert_eq!(dec.entries, vec![(PbwdMonomial::single(positive_roots(&f)[1], 0, 1), ParamFrac::one())]);
    assert!(decompose(&ShuffleElement::zero(f, vec![1, 1]), &choice).unwrap().entries.is_empty());
    let unit = decompose(&ShuffleElement::unit(f), &choice).unwrap();
    assert_eq!(unit.entries, vec![(PbwdMonomial::new(), ParamFrac::one())]);
    // wheel violation: 1 in grading (2,1) is not in the shuffle algebra
    let bad = ShuffleElement::new(f, vec![2, 1], XPoly::one()).unwrap();
    assert!(decompose(&bad, &choice).is_err());
    // choices must match the flavor
    assert!(decompose(&br, &PbwdChoice::default_for(Flavor::trig_a(4))).is_err());
}

#[test]
fn decompose_is_linear() {
    let f = Flavor::trig_a(3);
    let choice = PbwdChoice::default_for(f);
    let a = psi_word(&f, &[(1, 0), (2, 1), (1, -1)]).unwrap();
    let b = psi_word(&f, &[(2, 0), (1, 1), (1, 0)]).unwrap();
    let (ca, cb) = (ParamPoly::v_pow(2), &ParamPoly::one() - &ParamPoly::v());
    let sum = a.scale(&ca).add(&b.scale(&cb)).unwrap();
    let (da, db, ds) = (decompose(&a, &choice).unwrap(), decompose(&b, &choice).unwrap(), decompose(&sum, &choice).unwrap());
    let mut keys: Vec<PbwdMonomial> = da.entries.iter().chain(&db.entries).map(|e| e.0.clone()).collect();
    keys.sort();
    keys.dedup();
    for h in &keys {
        let expect = &da.coeff(h).mul_poly(&ca) + &db.coeff(h).mul_poly(&cb);
        assert_eq!(ds.coeff(h), expect, "h = {:?}", h);
    }
    assert!(ds.entries.iter().all(|(h, _)| keys.contains(h)));
}

#[test]
fn integral_dichotomy() {
    let f = Flavor::trig_a(2);
    let n2 = f.normalizer().pow(2);
    for r in -2..=2 {
        let el = ShuffleElement::new(f, vec![2], XPoly::monomial(&[(VarId::x(1, 1), r), (VarId::x(1, 2), r)], &n2)).unwrap();
        match integral_failure(&el).unwrap() {
            Some(IntegralFailure::Factorial { d, t, divisor }) => {
                assert_eq!(d, vec![2]);
                assert_eq!(t, vec![vec![2]]);
                assert_eq!(divisor, qfact(2));
            }
            other => panic!("r = {r}: {:?}", other),
        }
        assert!(is_integral(&el.scale(&qint(2))).unwrap());
    }
    // Ψ(ẽ_{1,0}) and the candidate condition
    let e = tilde_scale(&f, &ShuffleElement::generator(f, 1, 0).unwrap(), 1);
    assert!(is_integral(&e).unwrap());
    let bare = ShuffleElement::generator(f, 1, 0).unwrap();
    assert_eq!(integral_failure(&bare).unwrap(), Some(IntegralFailure::Candidate));
}

#[test]
fn tilde_words_are_integral() {
    let f = Flavor::trig_a(3);
    let words: Vec<Vec<(u32, i32)>> = vec![
        vec![(1, 0), (1, 0)],
        vec![(1, 0), (2, 0), (1, 0)],
        vec![(2, 1), (1, -1), (2, 0), (1, 0)],
        vec![(1, 0), (1, 0), (2, 0), (2, 0)],
        vec![(1, 1), (2, 0), (1, 0), (2, -1)],
    ];
    for w in words {
        let e = tilde_scale(&f, &psi_word(&f, &w).unwrap(), w.len() as u32);
        assert!(is_integral(&e).unwrap(), "{:?}", w);
        assert!(is_integral_by_basis(&e, &PbwdChoice::default_for(f)).unwrap(), "{:?}", w);
    }
}

#[test]
fn tilde_root_vectors_are_integral() {
    let f = Flavor::trig_a(4);
    let choice = PbwdChoice::default_for(f);
    for b in positive_roots(&f) {
        let h = PbwdMonomial::single(b, 0, 2);
        let e = tilde_scale(&f, &psi_monomial(&f, &h, &choice).unwrap(), 2);
        assert!(is_integral(&e).unwrap(), "[{};{}]", b.j, b.i);
    }
}

/// `(v − v^{-1})^{|k|} ∏_{r≠r'} (x_{i,r} − v^{-2} x_{i,r'}) ∏ g_i`.
fn family_element(f: &Flavor, grading: &[u32], gs: &[XPoly]) -> ShuffleElement {
    let mut num = XPoly::one();
    for (i, &k) in grading.iter().enumerate() {
        let c = i as u32 + 1;
        for r in 1..=k {
            for r2 in (1..=k).filter(|&r2| r2 != r) {
                num = &num * &(&x(c, r) - &x(c, r2).scale(&ParamPoly::v_pow(-2)));
            }
        }
        num = &num * &gs[i];
    }
    let deg: u32 = grading.iter().sum();
    ShuffleElement::new(*f, grading.to_vec(), num.scale(&f.normalizer().pow(deg))).unwrap()
}

fn sym_poly(color: u32, k: u32, parts: &[(Vec<i32>, i32, i64)]) -> XPoly {
    let vars: Vec<VarId> = (1..=k).map(|s| VarId::x(color, s)).collect();
    let mut g = XPoly::zero();
    for (lam, e, c) in parts {
        let lam: Vec<i32> = lam.iter().take(k as usize).copied().collect();
        g = &g + &orbit_sum(&lam, &vars, false).scale(&ParamPoly::monomial([*e, 0], ratio(*c, 1)));
    }
    g
}

fn sym_parts() -> impl Strategy<Value = Vec<(Vec<i32>, i32, i64)>> {
    prop::collection::vec((prop::collection::vec(-1i32..=2, 2), -1i32..=1, prop::sample::select(vec![-2i64, -1, 1, 3])), 1..=2)
        .prop_map(|mut ps| {
            for p in &mut ps {
                p.0.sort();
            }
            ps
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn explicit_family_is_integral(k1 in 1u32..=2, k2 in 0u32..=2, p1 in sym_parts(), p2 in sym_parts()) {
        let f = Flavor::trig_a(3);
        let g1 = sym_poly(1, k1, &p1);
        let g2 = if k2 == 0 { XPoly::one() } else { sym_poly(2, k2, &p2) };
        prop_assume!(!g1.is_zero() && !g2.is_zero());
        let el = family_element(&f, &[k1, k2], &[g1, g2]);
        prop_assert!(is_integral(&el).unwrap());
    }

    #[test]
    fn integral_tests_agree(
        words in prop::collection::vec((prop::sample::select(vec![-2i64, -1, 1, 2]), prop::collection::vec(-1i32..=1, 3), any::<u64>()), 1..=2),
        grading in prop::sample::select(vec![vec![2u32, 0], vec![1, 1], vec![2, 1], vec![1, 2], vec![3, 0]]),
    ) {
        let f = Flavor::trig_a(3);
        let ws: Vec<(i64, Vec<(u32, i32)>)> = words.iter().map(|(a, m, p)| (*a, word_of(&grading, m, *p))).collect();
        if let Some(el) = candidate(&f, &ws) {
            prop_assert_eq!(is_integral(&el).unwrap(), is_integral_by_basis(&el, &PbwdChoice::default_for(f)).unwrap());
        }
    }

    #[test]
    fn shift_map_preserves_integrality(
        word in prop::collection::vec((1u32..=2, -1i32..=1), 1..=3),
        l in 1u32..=2,
        tilde in any::<bool>(),
    ) {
        let f = Flavor::trig_a(3);
        let base = psi_word(&f, &word).unwrap();
        let el = if tilde {
            tilde_scale(&f, &base, word.len() as u32)
        } else {
            base.scale(&f.normalizer().pow(word.len() as u32))
        };
        prop_assert_eq!(is_integral(&el).unwrap(), is_integral(&shift_map(&el, l).unwrap()).unwrap());
    }
}

#[test]
fn shift_map_keeps_non_integral_elements_out() {
    let f = Flavor::trig_a(3);
    let n2 = f.normalizer().pow(2);
    let el = ShuffleElement::new(f, vec![2, 0], XPoly::constant(&n2)).unwrap();
    assert!(!is_integral(&el).unwrap());
    for l in [1, 2] {
        assert!(!is_integral(&shift_map(&el, l).unwrap()).unwrap());
    }
    assert!(is_integral(&shift_map(&el.scale(&qint(2)), 1).unwrap()).unwrap());
}

#[test]
fn yangian_rank_one_elements_are_good() {
    let f = Flavor::yang_a(2);
    for k in 1..=4u32 {
        let vars: Vec<VarId> = (1..=k).map(|s| VarId::x(1, s)).collect();
        for lam in [vec![0; k as usize], (0..k as i32).collect::<Vec<_>>()] {
            let g = orbit_sum(&lam, &vars, false).scale(&(&ParamPoly::one() + &ParamPoly::hbar()));
            assert!(is_good(&ShuffleElement::new(f, vec![k], g).unwrap()).unwrap());
        }
    }
}

#[test]
fn yangian_words_are_good_and_tilde_words_integral() {
    let f = Flavor::yang_a(3);
    let words: Vec<Vec<(u32, i32)>> = vec![
        vec![(1, 0), (2, 0)],
        vec![(2, 1), (1, 0)],
        vec![(1, 0), (2, 0), (1, 1)],
        vec![(1, 2), (1, 0), (2, 1), (2, 0)],
    ];
    for w in words {
        let e = psi_word(&f, &w).unwrap();
        assert!(is_good(&e).unwrap(), "{:?}", w);
        assert!(is_integral(&tilde_scale(&f, &e, w.len() as u32)).unwrap(), "{:?}", w);
    }
    // a bare generator is not divisible by ħ
    assert!(!is_integral(&ShuffleElement::generator(f, 1, 0).unwrap()).unwrap());
}

#[test]
fn divided_powers_are_good() {
    let f = Flavor::trig_a(3);
    for i in [1, 2] {
        for r in -1..=1 {
            let g = ShuffleElement::generator(f, i, r).unwrap();
            let mut p = g.clone();
            for k in 2..=4u32 {
                p = shuffle_product(&p, &g).unwrap();
                let num = p.numerator.divide_params(&qfact(k)).expect("k-th power carries [k]!");
                assert!(is_good(&ShuffleElement::new(f, p.grading.clone(), num).unwrap()).unwrap(), "e({i},{r})^{k}");
            }
        }
    }
    assert!(is_good(&ShuffleElement::new(f, vec![1, 1], XPoly::one()).unwrap()).is_ok());
    assert!(is_good(&ShuffleElement::unit(Flavor::two_param(3))).is_err());
}

#[test]
fn certificates() {
    let f = Flavor::trig_a(3);
    let c = independence_certificate(&f, &[2, 1], 0, 1, &PbwdChoice::default_for(f)).unwrap();
    assert!(c.full_rank());
    assert_eq!(c.cols, monomials_in_window(&f, &[2, 1], 0, 1).len());
    assert!(c.kernel.is_none());

    let s = Flavor::trig_super(1, 1);
    let c = independence_certificate(&s, &[2], 0, 1, &PbwdChoice::default_for(s)).unwrap();
    assert!(c.full_rank());
    assert_eq!(c.cols, 1);
}

#[test]
fn printed_b_factor_is_rejected_by_tilde_products() {
    use qsa_core::pbwd::DegreeVector;
    use qsa_core::special::reduced_phi;
    let f = Flavor::trig_a(3);
    let e = tilde_scale(&f, &psi_word(&f, &[(2, 0), (1, 0), (2, 1), (1, 0)]).unwrap(), 4);
    let roots = positive_roots(&f);
    // two copies of [1;2]: the shifted factor is (y_1 − v^2 y_2), printed as (y_1 − v^{-2} y_2)
    let d = DegreeVector::from_entries(&f, &[(roots[1], 2)]);
    assert!(reduced_phi(&e, &d, false).is_ok());
    assert!(reduced_phi(&e, &d, true).is_err());
}
