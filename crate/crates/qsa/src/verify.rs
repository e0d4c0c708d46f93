//! Named identity suites. Each returns one line per checked family.

use std::fmt;

use qsa_core::membership::{
    decompose_cached, independence_certificate, is_good, is_integral, is_integral_by_basis, monomials_in_window,
    DecomposeOptions,
};
use qsa_core::multipoly::{orbit_sum, VarId, XPoly};
use qsa_core::pbwd::{degree_vectors, psi_word, tilde_scale, DegreeVector, PbwdChoice, PsiCache, Root};
use qsa_core::ring::{factorial, qfact, qint, ratio, ParamFrac, ParamPoly, Rational};
use qsa_core::shuffle::{
    check_pole, check_wheel, color_monomial, degenerate_two_param, shift_map, shuffle_product, Flavor, ShuffleElement,
};
use qsa_core::special::{g_factors, phi, rank1_power, y_var, SpecPlan};
use qsa_core::Result;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::relations;

pub const SUITES: &[&str] = &[
    "factorial",
    "combinatorial",
    "relations",
    "closure",
    "specialization",
    "roundtrip",
    "integrality",
    "yangian",
    "two-param-degeneration",
    "divided-powers",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub label: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub lines: Vec<Line>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), lines: Vec::new() }
    }

    fn push(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.lines.push(Line { label: label.into(), detail: detail.into(), pass });
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "[{}] {}: {} ({})", self.suite, l.label, if l.pass { "pass" } else { "FAIL" }, l.detail)?;
        }
        write!(f, "[{}] {}", self.suite, if self.passed() { "all passed" } else { "FAILED" })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub max_k: Option<u32>,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_k: None, seed: 0x5eed }
    }
}

pub fn run(suite: &str, opts: &Options) -> Result<Report> {
    match suite {
        "factorial" => factorial_suite(opts.max_k.unwrap_or(6)),
        "combinatorial" => combinatorial_suite(opts.max_k.unwrap_or(6)),
        "relations" => relations_suite(),
        "closure" => closure_suite(opts.max_k.unwrap_or(6), 200, opts.seed),
        "specialization" => specialization_suite(),
        "roundtrip" => roundtrip_suite(opts.max_k.unwrap_or(5)),
        "integrality" => integrality_suite(opts.max_k.unwrap_or(4), 100, opts.seed),
        "yangian" => yangian_suite(opts.max_k.unwrap_or(4), opts.seed),
        "two-param-degeneration" => degeneration_suite(opts.max_k.unwrap_or(4), 100, opts.seed),
        "divided-powers" => divided_powers_suite(opts.max_k.unwrap_or(4)),
        _ => Err(qsa_core::Error::Invalid(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", ")))),
    }
}

fn v(k: i32) -> ParamPoly {
    ParamPoly::v_pow(k)
}

pub fn factorial_suite(max_k: u32) -> Result<Report> {
    let mut rep = Report::new("factorial");
    let trig = Flavor::trig_a(2);
    let yang = Flavor::yang_a(2);
    for k in 1..=max_k {
        let c = qfact(k).scale(&Rational::new(1.into(), factorial(k))).shift([-((k * (k - 1) / 2) as i32), 0]);
        let mut ok = true;
        for r in -2..=2 {
            let got = psi_word(&trig, &vec![(1, r); k as usize])?;
            ok &= got.numerator == color_monomial(1, &vec![r; k as usize]).scale(&c);
        }
        rep.push(format!("k-fold power of e(1,r) in trig-a(2), k={k}"), ok, "r in -2..2, coefficient v^{-k(k-1)/2}[k]!/k!");
        let mut ok = true;
        for r in 0..=3 {
            let got = psi_word(&yang, &vec![(1, r); k as usize])?;
            ok &= got.numerator == color_monomial(1, &vec![r; k as usize]);
        }
        rep.push(format!("k-fold power of e(1,r) in yang-a(2), k={k}"), ok, "r in 0..3, coefficient 1");
    }
    Ok(rep)
}

fn xs(s: u32) -> XPoly {
    XPoly::var(VarId::x(1, s))
}

/// `Σ_i ∏_{j≠i}(x_j − q x_i + s)/(x_j − x_i)` times the Vandermonde.
fn cleared_sum(k: u32, q: &ParamPoly, s: &ParamPoly) -> XPoly {
    let mut total = XPoly::zero();
    for i in 1..=k {
        let mut term = XPoly::one();
        for j in (1..=k).filter(|&j| j != i) {
            term = &term * &(&(&xs(j) - &xs(i).scale(q)) + &XPoly::constant(s));
        }
        for a in (1..=k).filter(|&a| a != i) {
            for b in (a + 1..=k).filter(|&b| b != i) {
                term = &term * &(&xs(b) - &xs(a));
            }
        }
        if i % 2 == 0 {
            term = term.neg();
        }
        total = &total + &term;
    }
    total
}

fn vandermonde(k: u32) -> XPoly {
    let mut out = XPoly::one();
    for a in 1..=k {
        for b in a + 1..=k {
            out = &out * &(&xs(b) - &xs(a));
        }
    }
    out
}

pub fn combinatorial_suite(max_k: u32) -> Result<Report> {
    let mut rep = Report::new("combinatorial");
    for k in 1..=max_k {
        let sum = (0..k as i32).fold(ParamPoly::zero(), |acc, l| &acc + &v(-2 * l));
        let ok = cleared_sum(k, &v(-2), &ParamPoly::zero()) == vandermonde(k).scale(&sum);
        rep.push(format!("sum of prod (x_j - v^-2 x_i)/(x_j - x_i), k={k}"), ok, "equals sum_l v^{-2l}");
        let ok = cleared_sum(k, &ParamPoly::one(), &ParamPoly::hbar()) == vandermonde(k).scale(&ParamPoly::int(k as i64));
        rep.push(format!("sum of prod (x_j - x_i + h)/(x_j - x_i), k={k}"), ok, "equals k");
    }
    Ok(rep)
}

pub fn relation_flavors() -> Vec<Flavor> {
    vec![Flavor::trig_a(3), Flavor::two_param(3), Flavor::trig_super(2, 2), Flavor::yang_a(3), Flavor::yang_super(2, 2)]
}

pub fn relations_suite() -> Result<Report> {
    let mut rep = Report::new("relations");
    let per_flavor: Vec<Result<Vec<relations::Instance>>> = relation_flavors().par_iter().map(relations::instances).collect();
    for (flavor, inst) in relation_flavors().into_iter().zip(per_flavor) {
        let inst = inst?;
        let mut families: Vec<&str> = Vec::new();
        for i in &inst {
            if !families.contains(&i.family) {
                families.push(i.family);
            }
        }
        for fam in families {
            let of: Vec<&relations::Instance> = inst.iter().filter(|i| i.family == fam).collect();
            let bad: Vec<&str> = of.iter().filter(|i| !i.value.is_zero()).map(|i| i.label.as_str()).collect();
            let detail = match bad.first() {
                None => format!("{} instances vanish", of.len()),
                Some(first) => format!("{} of {} instances survive, first at {}", bad.len(), of.len(), first),
            };
            rep.push(format!("{flavor} {fam}"), bad.is_empty(), detail);
        }
    }
    Ok(rep)
}

fn mode_window(flavor: &Flavor) -> (i32, i32) {
    if flavor.kind.is_yangian() {
        (0, 2)
    } else {
        (-1, 1)
    }
}

/// A word of length `len` with random colors and modes in the window.
fn random_word(rng: &mut StdRng, flavor: &Flavor, len: usize) -> Vec<(u32, i32)> {
    let (lo, hi) = mode_window(flavor);
    (0..len).map(|_| (rng.gen_range(1..=flavor.rank()), rng.gen_range(lo..=hi))).collect()
}

/// Colors `m−1, m, m, m+1` in random order, then random letters up to `len`.
fn super_word(rng: &mut StdRng, flavor: &Flavor, len: usize) -> Vec<(u32, i32)> {
    let m = flavor.m;
    let (lo, hi) = mode_window(flavor);
    let mut w: Vec<(u32, i32)> = [m - 1, m, m, m + 1].iter().map(|&c| (c, rng.gen_range(lo..=hi))).collect();
    w.extend(random_word(rng, flavor, len.saturating_sub(4)));
    w.shuffle(rng);
    w
}

pub fn closure_suite(max_vars: u32, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("closure");
    let results: Vec<Result<(Flavor, usize, usize, usize)>> = relation_flavors()
        .into_par_iter()
        .enumerate()
        .map(|(idx, flavor)| {
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(idx as u64));
            let mut ok = 0;
            let mut forced = 0;
            for n in 0..samples {
                let force = flavor.kind.is_super() && flavor.m >= 2 && n % 4 == 0 && max_vars >= 4;
                let len = rng.gen_range(if force { 4 } else { 2 }..=max_vars as usize);
                let word = if force { super_word(&mut rng, &flavor, len) } else { random_word(&mut rng, &flavor, len) };
                let cut = rng.gen_range(1..word.len());
                let p = shuffle_product(&psi_word(&flavor, &word[..cut])?, &psi_word(&flavor, &word[cut..])?)?;
                if check_pole(&p) && check_wheel(&p) {
                    ok += 1;
                }
                forced += force as usize;
            }
            Ok((flavor, ok, samples, forced))
        })
        .collect();
    for r in results {
        let (flavor, ok, total, forced) = r?;
        let detail = if forced > 0 {
            format!("{ok}/{total} products pass, {forced} with colors m-1, m, m, m+1")
        } else {
            format!("{ok}/{total} products pass")
        };
        rep.push(format!("{flavor} pole and wheel conditions, up to {max_vars} variables"), ok == total, detail);
    }
    Ok(rep)
}

fn gradings_up_to(max: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &m in max {
        out = out.into_iter().flat_map(|g: Vec<u32>| (0..=m).map(move |a| [g.clone(), vec![a]].concat())).collect();
    }
    out.retain(|g| g.iter().any(|&a| a > 0));
    out
}

/// Gradings with total at most `max`.
fn gradings_total(rank: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = gradings_up_to(&vec![max; rank]);
    out.retain(|g| g.iter().sum::<u32>() <= max);
    out
}

pub fn specialization_suite() -> Result<Report> {
    let mut rep = Report::new("specialization");
    let f = Flavor::trig_a(3);
    let choice = PbwdChoice::default_for(f);
    let mut cache = PsiCache::new(choice.clone());
    let (mut vanish, mut vanish_bad, mut fact, mut fact_bad) = (0, 0, 0, 0);
    for g in gradings_up_to(&[2, 2]) {
        let ds = degree_vectors(&f, &g);
        for h in monomials_in_window(&f, &g, -1, 1) {
            let el = cache.get(&h)?;
            let dh = h.degree(&f);
            for d in ds.iter().filter(|d| **d > dh) {
                vanish += 1;
                if !phi(&el, &SpecPlan::canonical(&f, d))?.is_zero() {
                    vanish_bad += 1;
                }
            }
            let got = phi(&el, &SpecPlan::canonical(&f, &dh))?;
            let mut expect = g_factors(&f, &dh)?;
            for (b, _) in dh.entries(&f) {
                expect = &expect * &rank1_power(&f, &b, &h.modes_of(&b, choice.root(&b).order))?;
            }
            fact += 1;
            if got.is_zero() || got.unit_ratio(&expect).is_none() {
                fact_bad += 1;
            }
        }
    }
    rep.push("trig-a(3) lower-degree specializations vanish", vanish_bad == 0, format!("{} of {vanish} (h, d) pairs with d > deg h vanish", vanish - vanish_bad));
    rep.push("trig-a(3) same-degree specialization factorizes", fact_bad == 0, format!("{} of {fact} monomials, grading <= (2,2), window [-1,1]", fact - fact_bad));

    // x11^a x21^b x31^c in trig-a(4) under four degree vectors
    let f4 = Flavor::trig_a(4);
    let (a, b, c) = (2, -1, 3);
    let num = XPoly::monomial(&[(VarId::x(1, 1), a), (VarId::x(2, 1), b), (VarId::x(3, 1), c)], &ParamPoly::one());
    let el = ShuffleElement::new(f4, vec![1, 1, 1], num)?;
    let r = |j, i| Root::new(&f4, j, i);
    let yv = |root: &Root| y_var(&f4, root, 1);
    let unit = v(-a - 2 * b - 3 * c);
    // label, roots of d, and the y-exponent placed on each root
    type Case<'a> = (&'a str, Vec<Root>, Vec<(usize, i32)>);
    let cases: Vec<Case> = vec![
        ("(a) one root [1;3]", vec![r(1, 3)?], vec![(0, a + b + c)]),
        ("(b) roots [1;1], [2;3]", vec![r(1, 1)?, r(2, 3)?], vec![(0, a), (1, b + c)]),
        ("(c) roots [1;2], [3;3]", vec![r(1, 2)?, r(3, 3)?], vec![(0, a + b), (1, c)]),
        ("(d) simple roots", vec![r(1, 1)?, r(2, 2)?, r(3, 3)?], vec![(0, a), (1, b), (2, c)]),
    ];
    for (label, roots, exps) in cases {
        let entries: Vec<(Root, u32)> = roots.iter().map(|&b| (b, 1)).collect();
        let d = DegreeVector::from_entries(&f4, &entries);
        let vars: Vec<(VarId, i32)> = exps.iter().map(|&(k, e)| (yv(&roots[k]), e)).collect();
        let expect = XPoly::monomial(&vars, &unit);
        let ok = phi(&el, &SpecPlan::canonical(&f4, &d))? == expect;
        rep.push(format!("trig-a(4) x11^2 x21^-1 x31^3 specialization {label}"), ok, "exact match");
    }
    Ok(rep)
}

/// `decompose(Ψ(e_h)) = [(h, 1)]` for all `h` with `|k| ≤ max_k` in the window.
pub fn roundtrip_count(flavor: Flavor, max_k: u32, lo: i32, hi: i32) -> Result<(usize, usize)> {
    let mut cache = PsiCache::new(PbwdChoice::default_for(flavor));
    let (mut n, mut ok) = (0, 0);
    for g in gradings_total(flavor.rank() as usize, max_k) {
        for h in monomials_in_window(&flavor, &g, lo, hi) {
            let e = cache.get(&h)?;
            let dec = decompose_cached(&e, &mut cache, DecomposeOptions::default())?;
            n += 1;
            if dec.entries == vec![(h, ParamFrac::one())] {
                ok += 1;
            }
        }
    }
    Ok((n, ok))
}

pub fn roundtrip_suite(max_k: u32) -> Result<Report> {
    let mut rep = Report::new("roundtrip");
    for (flavor, lo, hi) in [(Flavor::trig_a(3), -1, 1), (Flavor::yang_a(3), 0, 2), (Flavor::trig_super(2, 1), -1, 1)] {
        let (n, ok) = roundtrip_count(flavor, max_k, lo, hi)?;
        rep.push(format!("{flavor} decompose(psi(h)) = h, |k| <= {max_k}, window [{lo},{hi}]"), n == ok && n > 0, format!("{ok}/{n} monomials"));
    }
    let f = Flavor::trig_a(3);
    let cert = independence_certificate(&f, &[2, 1], 0, 1, &PbwdChoice::default_for(f))?;
    rep.push("trig-a(3) grading (2,1) window [0,1] independence", cert.full_rank(), format!("rank {} of {}", cert.rank, cert.cols));
    Ok(rep)
}

/// `(v − v^{-1})^{|k|}` times the primitive part of `Σ a_w Ψ(w)`.
fn random_candidate(rng: &mut StdRng, flavor: &Flavor, grading: &[u32]) -> Result<Option<ShuffleElement>> {
    let (lo, hi) = mode_window(flavor);
    let mut acc = ShuffleElement::zero(*flavor, grading.to_vec());
    for _ in 0..rng.gen_range(1..=2) {
        let mut word: Vec<(u32, i32)> = grading
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| vec![i as u32 + 1; k as usize])
            .map(|c| (c, 0))
            .collect();
        word.shuffle(rng);
        for w in &mut word {
            w.1 = rng.gen_range(lo..=hi);
        }
        let a = *[-2i64, -1, 1, 2].choose(rng).expect("nonempty");
        acc = acc.add(&psi_word(flavor, &word)?.scale(&ParamPoly::int(a)))?;
    }
    if acc.is_zero() {
        return Ok(None);
    }
    let content = acc.numerator.content();
    let num = acc.numerator.divide_params(&content).expect("content divides").clear_denominators().0;
    Ok(Some(ShuffleElement::new(*flavor, grading.to_vec(), num)?.scale(&flavor.normalizer().pow(acc.degree()))))
}

fn random_grading(rng: &mut StdRng, rank: u32, lo: u32, hi: u32) -> Vec<u32> {
    loop {
        let g: Vec<u32> = (0..rank).map(|_| rng.gen_range(0..=hi)).collect();
        let s: u32 = g.iter().sum();
        if (lo..=hi).contains(&s) {
            return g;
        }
    }
}

fn symmetric_poly(rng: &mut StdRng, color: u32, k: u32, min_exp: i32) -> XPoly {
    let vars: Vec<VarId> = (1..=k).map(|s| VarId::x(color, s)).collect();
    let mut g = XPoly::zero();
    while g.is_zero() {
        for _ in 0..rng.gen_range(1..=2) {
            let mut lam: Vec<i32> = (0..k).map(|_| rng.gen_range(min_exp..=2)).collect();
            lam.sort();
            let c = ParamPoly::monomial([rng.gen_range(-1..=1), 0], ratio(*[-2i64, -1, 1, 3].choose(rng).expect("nonempty"), 1));
            g = &g + &orbit_sum(&lam, &vars, false).scale(&c);
        }
    }
    g
}

/// `(v − v^{-1})^{|k|} ∏_i ∏_{r≠r'} (x_{i,r} − v^{-2} x_{i,r'}) · ∏_i g_i`.
pub fn explicit_family(flavor: &Flavor, grading: &[u32], gs: &[XPoly]) -> Result<ShuffleElement> {
    let mut num = XPoly::one();
    for (i, &k) in grading.iter().enumerate() {
        let c = i as u32 + 1;
        for r in 1..=k {
            for r2 in (1..=k).filter(|&r2| r2 != r) {
                num = &num * &(&XPoly::var(VarId::x(c, r)) - &XPoly::var(VarId::x(c, r2)).scale(&v(-2)));
            }
        }
        num = &num * &gs[i];
    }
    let deg: u32 = grading.iter().sum();
    ShuffleElement::new(*flavor, grading.to_vec(), num.scale(&flavor.normalizer().pow(deg)))
}

pub fn integrality_suite(max_k: u32, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("integrality");
    let mut rng = StdRng::seed_from_u64(seed);

    let f2 = Flavor::trig_a(2);
    let n2 = f2.normalizer().pow(2);
    let mut ok = true;
    for r in -2..=2 {
        let el = ShuffleElement::new(f2, vec![2], XPoly::monomial(&[(VarId::x(1, 1), r), (VarId::x(1, 2), r)], &n2))?;
        ok &= !is_integral(&el)? && is_integral(&el.scale(&qint(2)))?;
    }
    rep.push("trig-a(2) (v-v^-1)^2 (x1 x2)^r rejected, [2] times it accepted", ok, "r in -2..2");

    let f = Flavor::trig_a(3);
    let choice = PbwdChoice::default_for(f);
    let (mut agree, mut yes, mut no, mut tested) = (0, 0, 0, 0);
    let mut pool = Vec::new();
    while tested < samples {
        let g = random_grading(&mut rng, 2, 2, max_k);
        let Some(el) = random_candidate(&mut rng, &f, &g)? else { continue };
        let a = is_integral(&el)?;
        let b = is_integral_by_basis(&el, &choice)?;
        tested += 1;
        agree += (a == b) as usize;
        if a {
            yes += 1;
        } else {
            no += 1;
        }
        if pool.len() < 20 {
            pool.push(el);
        }
    }
    rep.push(
        format!("trig-a(3) specialization test agrees with basis coefficients, |k| <= {max_k}"),
        agree == tested,
        format!("{agree}/{tested} agree; {yes} integral, {no} not"),
    );

    let mut ok = 0;
    let mut words = Vec::new();
    for _ in 0..30 {
        let len = rng.gen_range(1..=max_k as usize);
        let w = random_word(&mut rng, &f, len);
        let e = tilde_scale(&f, &psi_word(&f, &w)?, len as u32);
        ok += is_integral(&e)? as usize;
        words.push(e);
    }
    rep.push("trig-a(3) tilde-word images are integral", ok == words.len(), format!("{ok}/{} words", words.len()));

    let mut ok = 0;
    let mut total = 0;
    for g in gradings_up_to(&[2, 2]) {
        for _ in 0..3 {
            let gs: Vec<XPoly> =
                g.iter().enumerate().map(|(i, &k)| if k == 0 { XPoly::one() } else { symmetric_poly(&mut rng, i as u32 + 1, k, -1) }).collect();
            ok += is_integral(&explicit_family(&f, &g, &gs)?)? as usize;
            total += 1;
        }
    }
    rep.push("trig-a(3) explicit family with symmetric g_i is integral, k <= (2,2)", ok == total, format!("{ok}/{total} elements"));

    let mut ok = 0;
    let mut total = 0;
    for el in pool.iter().chain(&words) {
        for l in 1..=2 {
            ok += (is_integral(el)? == is_integral(&shift_map(el, l)?)?) as usize;
            total += 1;
        }
    }
    rep.push("trig-a(3) shift map preserves integrality both ways", ok == total, format!("{ok}/{total} (element, l) pairs"));
    Ok(rep)
}

pub fn yangian_suite(max_k: u32, seed: u64) -> Result<Report> {
    let mut rep = Report::new("yangian");
    let mut rng = StdRng::seed_from_u64(seed);
    let y2 = Flavor::yang_a(2);
    let mut ok = 0;
    let mut total = 0;
    for k in 1..=max_k {
        for _ in 0..5 {
            let mut g = symmetric_poly(&mut rng, 1, k, 0);
            g = g.map_coeffs(|c| c.map_exponents(|e| Ok([e[0].abs(), 0])))?;
            let el = ShuffleElement::new(y2, vec![k], g)?;
            ok += is_good(&el)? as usize;
            total += 1;
        }
    }
    rep.push("yang-a(2) symmetric elements are good", ok == total, format!("{ok}/{total} elements, k <= {max_k}"));

    let y3 = Flavor::yang_a(3);
    let (mut good, mut integral, mut bare, mut total) = (0, 0, 0, 0);
    for _ in 0..30 {
        let len = rng.gen_range(1..=max_k as usize);
        let w = random_word(&mut rng, &y3, len);
        let e = psi_word(&y3, &w)?;
        good += is_good(&e)? as usize;
        integral += is_integral(&tilde_scale(&y3, &e, len as u32))? as usize;
        bare += (!is_integral(&e)?) as usize;
        total += 1;
    }
    rep.push("yang-a(3) word images are good", good == total, format!("{good}/{total} words"));
    rep.push("yang-a(3) tilde-word images are divisible by h^|k|", integral == total, format!("{integral}/{total} words"));
    rep.push("yang-a(3) bare word images are not", bare == total, format!("{bare}/{total} words"));
    Ok(rep)
}

pub fn degeneration_suite(max_len: u32, samples: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new("two-param-degeneration");
    let mut rng = StdRng::seed_from_u64(seed);
    let (tp, ta) = (Flavor::two_param(3), Flavor::trig_a(3));
    let mut ok = 0;
    for _ in 0..samples {
        let len = rng.gen_range(2..=max_len as usize);
        let w = random_word(&mut rng, &tp, len);
        let cut = rng.gen_range(1..len);
        let lhs = shuffle_product(&psi_word(&tp, &w[..cut])?, &psi_word(&tp, &w[cut..])?)?;
        let rhs = shuffle_product(&psi_word(&ta, &w[..cut])?, &psi_word(&ta, &w[cut..])?)?;
        ok += (degenerate_two_param(&lhs)? == rhs) as usize;
    }
    rep.push("trig-2p(3) products at u1/u2 = v, u1 u2 = 1 equal trig-a(3) products", ok == samples, format!("{ok}/{samples} products"));
    Ok(rep)
}

/// `Ψ(e_{i,r})^k / [k]_v!`
fn divided_power(f: &Flavor, i: u32, r: i32, k: u32) -> Result<ShuffleElement> {
    let p = psi_word(f, &vec![(i, r); k as usize])?;
    let num = p.numerator.divide_params(&qfact(k)).ok_or_else(|| qsa_core::Error::NonExact("k-th power is not divisible by [k]!".into()))?;
    ShuffleElement::new(*f, p.grading, num)
}

pub fn divided_powers_suite(max_k: u32) -> Result<Report> {
    let mut rep = Report::new("divided-powers");
    let f = Flavor::trig_a(3);
    for k in 1..=max_k {
        let mut ok = true;
        for i in 1..=2 {
            for r in -1..=1 {
                ok &= is_good(&divided_power(&f, i, r, k)?)?;
            }
        }
        rep.push(format!("trig-a(3) divided powers e(i,r)^k/[k]!, k={k}"), ok, "i in 1..2, r in -1..1");
    }
    let mut ok = 0;
    let mut total = 0;
    for a in 1..max_k {
        for b in 1..=max_k - a {
            for (r, s) in [(0, 0), (-1, 1), (1, 0)] {
                let p = shuffle_product(&divided_power(&f, 1, r, a)?, &divided_power(&f, 2, s, b)?)?;
                let q = shuffle_product(&divided_power(&f, 2, s, b)?, &divided_power(&f, 1, r, a)?)?;
                ok += is_good(&p)? as usize + is_good(&q)? as usize;
                total += 2;
            }
        }
    }
    rep.push(format!("trig-a(3) products of divided powers, total degree <= {max_k}"), ok == total, format!("{ok}/{total} products"));
    Ok(rep)
}
