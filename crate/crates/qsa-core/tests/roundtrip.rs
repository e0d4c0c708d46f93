use qsa_core::membership::{decompose_cached, monomials_in_window, DecomposeOptions};
use qsa_core::pbwd::{PbwdChoice, PsiCache};
use qsa_core::ring::ParamFrac;
use qsa_core::shuffle::Flavor;

fn gradings(rank: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|g: Vec<u32>| (0..=max).map(move |k| { let mut g = g.clone(); g.push(k); g })).collect();
    }
    out.retain(|g| { let s: u32 = g.iter().sum(); s >= 1 && s <= max });
    out
}

fn check(flavor: Flavor, max: u32, lo: i32, hi: i32) -> usize {
    let mut cache = PsiCache::new(PbwdChoice::default_for(flavor));
    let mut n = 0;
    for g in gradings(flavor.rank() as usize, max) {
        for h in monomials_in_window(&flavor, &g, lo, hi) {
            let e = cache.get(&h).unwrap();
            let dec = decompose_cached(&e, &mut cache, DecomposeOptions::default()).unwrap_or_else(|err| panic!("{} {:?}: {}", flavor, h, err));
            assert_eq!(dec.entries, vec![(h.clone(), ParamFrac::one())], "{} {:?}", flavor, h);
            n += 1;
        }
    }
    n
}

#[test]
fn roundtrip_trig_a3_small() {
    assert!(check(Flavor::trig_a(3), 3, -1, 1) > 0);
}

#[test]
fn roundtrip_yang_a3_small() {
    assert!(check(Flavor::yang_a(3), 3, 0, 2) > 0);
}

#[test]
fn roundtrip_trig_super21_small() {
    assert!(check(Flavor::trig_super(2, 1), 3, -1, 1) > 0);
}

#[test]
fn roundtrip_others_small() {
    check(Flavor::two_param(3), 3, -1, 1);
    check(Flavor::yang_super(2, 1), 3, 0, 2);
    check(Flavor::trig_super(1, 2), 3, -1, 1);
    check(Flavor::trig_super(2, 2), 2, -1, 1);
    check(Flavor::yang_super(2, 2), 2, 0, 1);
}

