//! Specialization maps `φ_d`, the reduced map, `ϖ_t` and the closed-form
//! factors of `φ_d(Ψ(e_h))`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::membership::Kernel;
use crate::multipoly::{Image, VarId, XPoly};
use crate::pbwd::{pbwd_element, positive_roots, root_index, DegreeVector, PbwdChoice, Root};
use crate::ring::{qfact, ratio, ParamPoly};
use crate::shuffle::{Flavor, FlavorKind, Rules, ShuffleElement, Zeta};

/// `y_{β,s}`
pub fn y_var(flavor: &Flavor, root: &Root, s: u32) -> VarId {
    VarId::y(root_index(flavor, root) as u32 + 1, s)
}

/// `z_{β,i}`
pub fn z_var(flavor: &Flavor, root: &Root, i: u32) -> VarId {
    VarId::z(root_index(flavor, root) as u32 + 1, i)
}

/// Image of `x_{k,•}` under `φ` when its copy sits at `y`.
pub fn x_image(flavor: &Flavor, k: u32, y: VarId) -> Image {
    let k = k as i32;
    let m = flavor.m as i32;
    let half_hbar = |c: i64| ParamPoly::monomial([1, 0], ratio(c, 2));
    match flavor.kind {
        FlavorKind::TrigA => Image::scaled(ParamPoly::v_pow(-k), y),
        FlavorKind::TwoParam => Image::scaled(ParamPoly::u_pow(-k, k), y),
        FlavorKind::TrigSuper => Image::scaled(ParamPoly::v_pow(if k <= m { -k } else { k - 2 * m }), y),
        FlavorKind::YangA => Image::shifted(y, half_hbar(-k as i64)),
        FlavorKind::YangSuper => Image::shifted(y, half_hbar(if k <= m { -k } else { k - 2 * m } as i64)),
    }
}

/// Which `x`-variables go to which copy of which root, plus an optional
/// splitting `t` of every root's copies into consecutive groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecPlan {
    pub d: DegreeVector,
    /// `assignment[β][s][c − j(β)]` is the slot of `x_{c,•}` used by copy `s`.
    pub assignment: Vec<Vec<Vec<u32>>>,
    /// `t[β]`, a composition of `d_β`.
    pub t: Option<Vec<Vec<u32>>>,
}

impl SpecPlan {
    /// Roots in order, then copies, then colors; each takes the next free slot.
    pub fn canonical(flavor: &Flavor, d: &DegreeVector) -> Self {
        let mut next = vec![1u32; flavor.rank() as usize];
        let assignment = positive_roots(flavor)
            .iter()
            .zip(&d.counts)
            .map(|(b, &n)| {
                (0..n)
                    .map(|_| {
                        (b.j..=b.i)
                            .map(|c| {
                                let s = next[(c - 1) as usize];
                                next[(c - 1) as usize] += 1;
                                s
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        SpecPlan { d: d.clone(), assignment, t: None }
    }

    pub fn with_t(mut self, flavor: &Flavor, t: Vec<Vec<u32>>) -> Result<Self> {
        let roots = positive_roots(flavor);
        if t.len() != roots.len() {
            return Err(Error::Invalid("t must list a composition for every root".into()));
        }
        for (b, (parts, &n)) in roots.iter().zip(t.iter().zip(&self.d.counts)) {
            if parts.contains(&0) || parts.iter().sum::<u32>() != n {
                return Err(Error::Invalid(alloc::format!("{:?} is not a composition of d[{};{}] = {}", parts, b.j, b.i, n)));
            }
        }
        self.t = Some(t);
        Ok(self)
    }

    /// Every slot of every color used exactly once, consistent with `d`.
    pub fn validate(&self, flavor: &Flavor, grading: &[u32]) -> Result<()> {
        let roots = positive_roots(flavor);
        if self.d.counts.len() != roots.len() || self.assignment.len() != roots.len() {
            return Err(Error::Invalid("plan does not match the root system".into()));
        }
        if self.d.grading(flavor) != grading {
            return Err(Error::Invalid(alloc::format!(
                "degree vector has grading {:?}, element has {:?}",
                self.d.grading(flavor),
                grading
            )));
        }
        let mut seen: Vec<Vec<bool>> = grading.iter().map(|&k| vec![false; k as usize]).collect();
        for (b, (copies, &n)) in roots.iter().zip(self.assignment.iter().zip(&self.d.counts)) {
            if copies.len() != n as usize {
                return Err(Error::Invalid(alloc::format!("root [{};{}] needs {} copies", b.j, b.i, n)));
            }
            for slots in copies {
                if slots.len() != (b.i - b.j + 1) as usize {
                    return Err(Error::Invalid(alloc::format!("copy of [{};{}] has the wrong number of slots", b.j, b.i)));
                }
                for (c, &s) in (b.j..=b.i).zip(slots) {
                    let row = &mut seen[(c - 1) as usize];
                    if s == 0 || s as usize > row.len() || row[(s - 1) as usize] {
                        return Err(Error::Invalid(alloc::format!("slot x:{}:{} missing or used twice", c, s)));
                    }
                    row[(s - 1) as usize] = true;
                }
            }
        }
        Ok(())
    }

    fn images(&self, flavor: &Flavor) -> BTreeMap<VarId, Image> {
        let mut out = BTreeMap::new();
        for (b, copies) in positive_roots(flavor).iter().zip(&self.assignment) {
            for (s, slots) in copies.iter().enumerate() {
                let y = y_var(flavor, b, s as u32 + 1);
                for (c, &slot) in (b.j..=b.i).zip(slots) {
                    out.insert(VarId::x(c, slot), x_image(flavor, c, y));
                }
            }
        }
        out
    }
}

/// `φ_d` applied to a bare numerator.
pub fn phi_poly(flavor: &Flavor, f: &XPoly, plan: &SpecPlan) -> Result<XPoly> {
    f.substitute(&plan.images(flavor))
}

/// `φ_d(F)`
pub fn phi(f: &ShuffleElement, plan: &SpecPlan) -> Result<XPoly> {
    plan.validate(&f.flavor, &f.grading)?;
    phi_poly(&f.flavor, &f.numerator, plan)
}

/// A product `scalar · monomial · ∏ (y_a − L)^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFactors {
    pub scalar: ParamPoly,
    pub monomial: XPoly,
    pub linear: Vec<(VarId, XPoly, i32)>,
}

impl GFactors {
    fn tally(&mut self, a: VarId, l: XPoly, e: i32) {
        if let Some(entry) = self.linear.iter_mut().find(|(b, m, _)| *b == a && *m == l) {
            entry.2 += e;
        } else {
            self.linear.push((a, l, e));
        }
    }

    /// Expanded product; fails if some exponent is negative.
    pub fn to_xpoly(&self) -> Result<XPoly> {
        let mut acc = self.monomial.scale(&self.scalar);
        for (a, l, e) in &self.linear {
            if *e < 0 {
                return Err(Error::Internal(alloc::format!("factor ({} − …) has exponent {}", a.key(), e)));
            }
            acc = &acc * &(&XPoly::var(*a) - l).pow(*e as u32);
        }
        Ok(acc)
    }
}

/// Kernel of the rank-1 algebra a root collapses to.
pub fn root_kernel(flavor: &Flavor, root: &Root) -> Kernel {
    let m = flavor.m;
    match flavor.kind {
        FlavorKind::TrigA => Kernel::TrigSymMinus,
        FlavorKind::TwoParam => Kernel::TwoParamSym,
        FlavorKind::YangA => Kernel::YangSym,
        FlavorKind::TrigSuper | FlavorKind::YangSuper if root.parity => Kernel::Skew,
        FlavorKind::TrigSuper if m > root.i => Kernel::TrigSymMinus,
        FlavorKind::TrigSuper => Kernel::TrigSymPlus,
        FlavorKind::YangSuper if m > root.i => Kernel::YangSym,
        FlavorKind::YangSuper => Kernel::YangSymFlip,
    }
}

/// `(y_a − L)` pieces of `ζ_{c,c'}(x_a, x_b)` with the pole part removed,
/// up to units.
fn zeta_pieces(z: &Zeta, ia: &Image, ib: &Image, same: bool, out: &mut GFactors) {
    let (a, b) = (ia.var.expect("variable image"), ib.var.expect("variable image"));
    let yb = XPoly::var(b);
    match z {
        Zeta::One => {}
        Zeta::Trig { kappa, .. } => {
            // scale_c y_a − κ scale_{c'} y_b
            let lam = kappa * &(&ib.scale * &ia.scale.inv_monomial().expect("monomial image"));
            out.tally(a, yb.scale(&lam), 1);
            if same {
                out.tally(a, yb, -1);
            }
        }
        Zeta::Rational { eta } => {
            // y_a + s_c − y_b − s_{c'} + η
            let mu = &(&ib.shift - &ia.shift) - eta;
            out.tally(a, &yb + &XPoly::constant(&mu), 1);
            if same {
                out.tally(a, yb, -1);
            }
        }
    }
}

/// Per-copy factor: `φ(Ψ(e_β(0)))` with its unit part removed.
fn copy_factor(flavor: &Flavor, root: &Root, y: VarId) -> Result<XPoly> {
    let e = pbwd_element(flavor, root, 0, &PbwdChoice::default_for(*flavor))?;
    let mut d = DegreeVector { counts: vec![0; positive_roots(flavor).len()] };
    d.counts[root_index(flavor, root)] = 1;
    let f = phi_poly(flavor, &e.numerator, &SpecPlan::canonical(flavor, &d))?;
    let f = f.rename(|v| if v == y_var(flavor, root, 1) { y } else { v });
    let (e0, c0) = match f.terms().first() {
        Some(t) => (t.pexp, t.coeff.clone()),
        None => return Err(Error::Invalid(alloc::format!("root vector [{};{}] specializes to zero", root.j, root.i))),
    };
    Ok(f.scale(&ParamPoly::monomial(e0, c0).inv_monomial().expect("unit")))
}

/// `∏_{β<β'} G_{β,β'} · ∏_β G_β` in factored form, up to a unit.
pub fn g_factor_list(flavor: &Flavor, d: &DegreeVector) -> Result<GFactors> {
    let mut out = GFactors { scalar: ParamPoly::one(), monomial: XPoly::one(), linear: Vec::new() };
    let copies: Vec<(Root, u32)> =
        d.entries(flavor).into_iter().flat_map(|(b, n)| (1..=n).map(move |s| (b, s))).collect();
    for &(b, s) in &copies {
        let f = copy_factor(flavor, &b, y_var(flavor, &b, s))?;
        out.monomial = &out.monomial * &f;
    }
    for (ai, &(ba, sa)) in copies.iter().enumerate() {
        for &(bb, sb) in &copies[ai + 1..] {
            let (ya, yb) = (y_var(flavor, &ba, sa), y_var(flavor, &bb, sb));
            for c in ba.j..=ba.i {
                for c2 in bb.j..=bb.i {
                    let z = flavor.zeta(c, c2)?;
                    zeta_pieces(&z, &x_image(flavor, c, ya), &x_image(flavor, c2, yb), c == c2, &mut out);
                }
            }
            if ba == bb {
                let k = root_kernel(flavor, &ba);
                if !k.skew() {
                    let unit = Image::var(ya);
                    let mut sub = GFactors { scalar: ParamPoly::one(), monomial: XPoly::one(), linear: Vec::new() };
                    zeta_pieces(&k.zeta(), &unit, &Image::var(yb), true, &mut sub);
                    for (a, l, e) in sub.linear {
                        out.tally(a, l, -e);
                    }
                }
            }
        }
    }
    out.linear.retain(|f| f.2 != 0);
    Ok(out)
}

/// `∏_{β<β'} G_{β,β'} · ∏_β G_β`, up to a unit.
pub fn g_factors(flavor: &Flavor, d: &DegreeVector) -> Result<XPoly> {
    g_factor_list(flavor, d)?.to_xpoly()
}

/// `x^{r_1} ⋆ ⋯ ⋆ x^{r_p}` in the root's rank-1 algebra, at `y_{β,1..p}`.
pub fn rank1_power(flavor: &Flavor, root: &Root, modes: &[i32]) -> Result<XPoly> {
    let k = root_kernel(flavor, root);
    let rules = Rules::rank1(k.zeta(), k.skew());
    let mut acc = XPoly::one();
    for (n, &r) in modes.iter().enumerate() {
        acc = rules.product(&acc, &[n as u32], &XPoly::var_pow(VarId::x(1, 1), r), &[1])?;
    }
    Ok(acc.rename(|v| y_var(flavor, root, v.slot)))
}

fn trig_a_only(flavor: &Flavor, what: &str) -> Result<()> {
    if flavor.kind != FlavorKind::TrigA {
        return Err(Error::Unsupported(alloc::format!("{} is only defined for trig-a, not {}", what, flavor)));
    }
    Ok(())
}

/// `(y_A − λ y_B, exponent)` factors of `B`, pairs `(β,s) < (β',s')`.
pub fn factor_b(flavor: &Flavor, d: &DegreeVector, printed: bool) -> Vec<(VarId, VarId, i32, i32)> {
    let copies: Vec<(Root, u32)> =
        d.entries(flavor).into_iter().flat_map(|(b, n)| (1..=n).map(move |s| (b, s))).collect();
    let mut out = Vec::new();
    for (ai, &(ba, sa)) in copies.iter().enumerate() {
        for &(bb, sb) in &copies[ai + 1..] {
            let same = (ba.j..=ba.i).filter(|c| bb.contains(*c)).count() as i32 - (ba == bb) as i32;
            let shifted = (ba.j..=ba.i).filter(|c| *c >= 2 && bb.contains(c - 1)).count() as i32;
            let (ya, yb) = (y_var(flavor, &ba, sa), y_var(flavor, &bb, sb));
            if same > 0 {
                out.push((ya, yb, -2, same));
            }
            if shifted > 0 {
                out.push((ya, yb, if printed { -2 } else { 2 }, shifted));
            }
        }
    }
    out
}

/// `φ_d(F)/(A·B)` with `A = (v − v^{-1})^{|k|}`.
///
/// `printed` uses `v^{-2}` in the second factor of `B`.
pub fn reduced_phi(f: &ShuffleElement, d: &DegreeVector, printed: bool) -> Result<XPoly> {
    let flavor = f.flavor;
    trig_a_only(&flavor, "the reduced specialization")?;
    let plan = SpecPlan::canonical(&flavor, d);
    let phi_f = phi(f, &plan)?;
    let a = flavor.normalizer().pow(f.degree());
    let mut cur = phi_f
        .divide_params(&a)
        .ok_or_else(|| Error::NonExact(String::from("φ_d(F) is not divisible by A = (v − v^{-1})^|k|")))?;
    for (ya, yb, e, n) in factor_b(&flavor, d, printed) {
        let l = XPoly::var(yb).scale(&ParamPoly::v_pow(e));
        for _ in 0..n {
            cur = cur.divide_linear(ya, &l).ok_or_else(|| {
                Error::NonExact(alloc::format!("φ_d(F) is not divisible by ({} − v^{}·{})", ya.key(), e, yb.key()))
            })?;
        }
    }
    for (b, n) in d.entries(&flavor) {
        let ys: Vec<VarId> = (1..=n).map(|s| y_var(&flavor, &b, s)).collect();
        if !cur.is_symmetric_in(&ys, false) {
            return Err(Error::Internal(alloc::format!("reduced specialization is not symmetric in the copies of [{};{}]", b.j, b.i)));
        }
    }
    Ok(cur)
}

/// `ϖ_t`: group `i` of root `β` goes to `v^{-2}z, v^{-4}z, …, v^{-2t}z`.
pub fn varpi(flavor: &Flavor, f: &XPoly, d: &DegreeVector, t: &[Vec<u32>]) -> Result<XPoly> {
    let mut images = BTreeMap::new();
    for ((b, &n), parts) in positive_roots(flavor).iter().zip(&d.counts).zip(t) {
        if parts.iter().sum::<u32>() != n {
            return Err(Error::Invalid(alloc::format!("t does not split d[{};{}] = {}", b.j, b.i, n)));
        }
        let mut s = 1;
        for (i, &ti) in parts.iter().enumerate() {
            let z = z_var(flavor, b, i as u32 + 1);
            for p in 1..=ti {
                images.insert(y_var(flavor, b, s), Image::scaled(ParamPoly::v_pow(-2 * p as i32), z));
                s += 1;
            }
        }
    }
    f.substitute(&images)
}

/// `Υ_{d,t}(F) = ϖ_t(reduced_phi(F, d))`
pub fn cross_specialize(f: &ShuffleElement, plan: &SpecPlan, printed: bool) -> Result<XPoly> {
    let t = plan.t.as_ref().ok_or_else(|| Error::Invalid("cross specialization needs t".into()))?;
    let reduced = reduced_phi(f, &plan.d, printed)?;
    varpi(&f.flavor, &reduced, &plan.d, t)
}

/// `∏_{β,i} [t_{β,i}]_v!`
pub fn t_factorial(t: &[Vec<u32>]) -> ParamPoly {
    t.iter().flatten().fold(ParamPoly::one(), |acc, &p| &acc * &qfact(p))
}

/// All partitions of `n` into positive parts, largest part first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbwd::psi_monomial;
    use crate::pbwd::PbwdMonomial;

    #[test]
    fn example_single_root() {
        let f = Flavor::trig_a(4);
        let root = Root::new(&f, 1, 3).unwrap();
        let num = XPoly::monomial(&[(VarId::x(1, 1), 2), (VarId::x(2, 1), 1), (VarId::x(3, 1), 5)], &ParamPoly::one());
        let el = ShuffleElement::new(f, vec![1, 1, 1], num).unwrap();
        let d = DegreeVector::from_entries(&f, &[(root, 1)]);
        let got = phi(&el, &SpecPlan::canonical(&f, &d)).unwrap();
        let y = y_var(&f, &root, 1);
        assert_eq!(got, XPoly::var_pow(y, 8).scale(&ParamPoly::v_pow(-2 - 2 - 15)));
    }

    #[test]
    fn printed_example_g() {
        let f = Flavor::trig_a(3);
        let a1 = Root::new(&f, 1, 1).unwrap();
        let a12 = Root::new(&f, 1, 2).unwrap();
        let d = DegreeVector::from_entries(&f, &[(a1, 1), (a12, 1)]);
        let (y1, y2) = (XPoly::var(y_var(&f, &a1, 1)), XPoly::var(y_var(&f, &a12, 1)));
        let expect = &(&y1 - &y2.scale(&ParamPoly::v_pow(-2))) * &y2.scale(&(&ParamPoly::one() - &ParamPoly::v_pow(2)));
        assert_eq!(g_factors(&f, &d).unwrap(), expect);
        let d2 = DegreeVector::from_entries(&f, &[(a1, 2)]);
        assert_eq!(g_factors(&Flavor::trig_a(2), &DegreeVector { counts: vec![2] }).unwrap(), XPoly::one());
        assert!(g_factor_list(&f, &d2).unwrap().linear.is_empty());
    }

    #[test]
    fn reduced_rank1() {
        let f = Flavor::trig_a(2);
        let a = f.normalizer().pow(2);
        let r = 3;
        let x = XPoly::monomial(&[(VarId::x(1, 1), r), (VarId::x(1, 2), r)], &a);
        let el = ShuffleElement::new(f, vec![2], x).unwrap();
        let d = DegreeVector { counts: vec![2] };
        let red = reduced_phi(&el, &d, false).unwrap();
        let y = |s| VarId::y(1, s);
        assert_eq!(red, XPoly::monomial(&[(y(1), r), (y(2), r)], &ParamPoly::v_pow(-2 * r)));
        let plan = SpecPlan::canonical(&f, &d).with_t(&f, vec![vec![2]]).unwrap();
        let ups = cross_specialize(&el, &plan, false).unwrap();
        assert_eq!(ups, XPoly::monomial(&[(VarId::z(1, 1), 2 * r)], &ParamPoly::v_pow(-8 * r)));
    }

    #[test]
    fn factorized_form_trig_a3() {
        let f = Flavor::trig_a(3);
        let choice = PbwdChoice::default_for(f);
        let roots = positive_roots(&f);
        let mut h = PbwdMonomial::new();
        h.add(roots[0], 1, 1);
        h.add(roots[1], 0, 2);
        h.add(roots[2], -1, 1);
        let d = h.degree(&f);
        let el = psi_monomial(&f, &h, &choice).unwrap();
        let got = phi(&el, &SpecPlan::canonical(&f, &d)).unwrap();
        let mut expect = g_factors(&f, &d).unwrap();
        for (b, _) in d.entries(&f) {
            expect = &expect * &rank1_power(&f, &b, &h.modes_of(&b, choice.root(&b).order)).unwrap();
        }
        let ratio = got.unit_ratio(&expect);
        assert!(ratio.is_some(), "not proportional");
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(partitions(0), vec![Vec::<u32>::new()]);
    }
}
