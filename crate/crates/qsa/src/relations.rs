//! Defining relations of the algebras, written out modewise and evaluated
//! in the shuffle realization. Every relation must map to zero.

use qsa_core::ring::ParamPoly;
use qsa_core::shuffle::{q_bracket, shuffle_product, Flavor, FlavorKind, ShuffleElement};
use qsa_core::Result;

/// One instance of a relation: a label and its image, which must vanish.
pub struct Instance {
    pub family: &'static str,
    pub label: String,
    pub value: ShuffleElement,
}

struct Ctx {
    f: Flavor,
}

impl Ctx {
    fn e(&self, i: u32, r: i32) -> Result<ShuffleElement> {
        ShuffleElement::generator(self.f, i, r)
    }

    fn odd(&self, i: u32) -> bool {
        self.f.skew_color() == Some(i)
    }

    /// `(−1)^{|i||j|}`
    fn sign(&self, i: u32, j: u32) -> ParamPoly {
        if self.odd(i) && self.odd(j) {
            ParamPoly::int(-1)
        } else {
            ParamPoly::one()
        }
    }

    fn mul(&self, a: &ShuffleElement, b: &ShuffleElement) -> Result<ShuffleElement> {
        shuffle_product(a, b)
    }

    fn ee(&self, (i, r): (u32, i32), (j, s): (u32, i32)) -> Result<ShuffleElement> {
        self.mul(&self.e(i, r)?, &self.e(j, s)?)
    }

    fn modes(&self) -> Vec<i32> {
        if self.f.kind.is_yangian() {
            vec![0, 1, 2]
        } else {
            vec![-1, 0, 1]
        }
    }

    fn colors(&self) -> Vec<u32> {
        (1..=self.f.rank()).collect()
    }
}

fn sum(terms: Vec<(ParamPoly, ShuffleElement)>) -> Result<ShuffleElement> {
    let mut it = terms.into_iter();
    let (c, first) = it.next().expect("at least one term");
    let mut acc = first.scale(&c);
    for (c, t) in it {
        acc = acc.add(&t.scale(&c))?;
    }
    Ok(acc)
}

/// `e_{i,r+1}e_{j,s} − a e_{i,r}e_{j,s+1} − p b e_{j,s}e_{i,r+1} + p c e_{j,s+1}e_{i,r}`
/// with `p = (−1)^{|i||j|}`.
fn quadratic_trig(cx: &Ctx, (i, r): (u32, i32), (j, s): (u32, i32), [a, b, c]: &[ParamPoly; 3]) -> Result<ShuffleElement> {
    let p = cx.sign(i, j);
    sum(vec![
        (ParamPoly::one(), cx.ee((i, r + 1), (j, s))?),
        (-a, cx.ee((i, r), (j, s + 1))?),
        (-&(&p * b), cx.ee((j, s), (i, r + 1))?),
        (&p * c, cx.ee((j, s + 1), (i, r))?),
    ])
}

/// `Σ_{swap r1 r2} [e_{i,r1}, [e_{i,r2}, e_{j,s}]_{inner}]_{outer}`
fn serre(cx: &Ctx, (i, j): (u32, u32), (r1, r2, s): (i32, i32, i32), (inner, outer): (&ParamPoly, &ParamPoly)) -> Result<ShuffleElement> {
    let ej = cx.e(j, s)?;
    let one = q_bracket(&cx.e(i, r1)?, &q_bracket(&cx.e(i, r2)?, &ej, inner)?, outer)?;
    let two = q_bracket(&cx.e(i, r2)?, &q_bracket(&cx.e(i, r1)?, &ej, inner)?, outer)?;
    one.add(&two)
}

/// `[e_{i,r+1}, e_{j,s}] − [e_{i,r}, e_{j,s+1}] − (c ħ/2)(e_{i,r}e_{j,s} + p e_{j,s}e_{i,r})`
fn quadratic_yang(cx: &Ctx, i: u32, j: u32, r: i32, s: i32) -> Result<ShuffleElement> {
    let p = cx.sign(i, j);
    let one = ParamPoly::one();
    let half_c = ParamPoly::hbar().scale(&qsa_core::ring::ratio(cx.f.cartan(i, j) as i64, 2));
    sum(vec![
        (one.clone(), cx.ee((i, r + 1), (j, s))?),
        (-&p, cx.ee((j, s), (i, r + 1))?),
        (-&one, cx.ee((i, r), (j, s + 1))?),
        (p.clone(), cx.ee((j, s + 1), (i, r))?),
        (-&half_c, cx.ee((i, r), (j, s))?),
        (-&(&half_c * &p), cx.ee((j, s), (i, r))?),
    ])
}

/// The quadratic-relation coefficients `(a, b, c)` for a pair of colors.
fn trig_coeffs(f: &Flavor, i: u32, j: u32) -> (ParamPoly, ParamPoly, ParamPoly) {
    if f.kind == FlavorKind::TwoParam {
        let u = ParamPoly::u_pow;
        return if i == j {
            (u(2, -2), u(2, -2), ParamPoly::one())
        } else if j == i + 1 {
            (u(-1, 1), u(0, 2), u(1, 1))
        } else if i == j + 1 {
            (u(-1, 1), u(-2, 0), u(-1, -1))
        } else {
            (ParamPoly::one(), ParamPoly::one(), ParamPoly::one())
        };
    }
    let q = ParamPoly::v_pow(f.cartan(i, j));
    (q.clone(), q, ParamPoly::one())
}

fn push(out: &mut Vec<Instance>, family: &'static str, label: String, value: ShuffleElement) {
    out.push(Instance { family, label, value });
}

fn quadratic_family(cx: &Ctx, out: &mut Vec<Instance>, family: &'static str) -> Result<()> {
    for i in cx.colors() {
        for j in cx.colors() {
            for r in cx.modes() {
                for s in cx.modes() {
                    let value = if cx.f.kind.is_yangian() {
                        quadratic_yang(cx, i, j, r, s)?
                    } else {
                        let (a, b, c) = trig_coeffs(&cx.f, i, j);
                        quadratic_trig(cx, (i, r), (j, s), &[a, b, c])?
                    };
                    push(out, family, format!("i={i} j={j} r={r} s={s}"), value);
                }
            }
        }
    }
    Ok(())
}

/// Serre relations for adjacent even `i`; `lambdas(i, j)` gives `(inner, outer)`.
fn serre_family(cx: &Ctx, out: &mut Vec<Instance>, family: &'static str, lambdas: impl Fn(u32, u32) -> (ParamPoly, ParamPoly)) -> Result<()> {
    for i in cx.colors().into_iter().filter(|&i| !cx.odd(i)) {
        for j in [i.wrapping_sub(1), i + 1].into_iter().filter(|j| (1..=cx.f.rank()).contains(j)) {
            let (inner, outer) = lambdas(i, j);
            let ms = cx.modes();
            for (a, &r1) in ms.iter().enumerate() {
                for &r2 in &ms[a..] {
                    for &s in &ms {
                        push(out, family, format!("i={i} j={j} r1={r1} r2={r2} s={s}"), serre(cx, (i, j), (r1, r2, s), (&inner, &outer))?);
                    }
                }
            }
        }
    }
    Ok(())
}

/// `[e_{i,r}, e_{j,s}] = 0` (super bracket) whenever the colors do not interact.
fn commuting_family(cx: &Ctx, out: &mut Vec<Instance>, family: &'static str) -> Result<()> {
    for i in cx.colors() {
        for j in cx.colors().into_iter().filter(|&j| j >= i && cx.f.cartan(i, j) == 0) {
            for r in cx.modes() {
                for s in cx.modes() {
                    let value = q_bracket(&cx.e(i, r)?, &cx.e(j, s)?, &ParamPoly::one())?;
                    push(out, family, format!("i={i} j={j} r={r} s={s}"), value);
                }
            }
        }
    }
    Ok(())
}

/// Quartic relations around the odd color `m`.
fn quartic_trig(cx: &Ctx, out: &mut Vec<Instance>, family: &'static str) -> Result<()> {
    let m = cx.f.m;
    let (vi, v) = (ParamPoly::v_pow(-1), ParamPoly::v());
    let ms = cx.modes();
    for &w in &ms {
        for &u in &ms {
            for (a, &z1) in ms.iter().enumerate() {
                for &z2 in &ms[a..] {
                    let term = |p: i32, q: i32| -> Result<ShuffleElement> {
                        let inner = q_bracket(&cx.e(m - 1, w)?, &cx.e(m, p)?, &vi)?;
                        let mid = q_bracket(&inner, &cx.e(m + 1, u)?, &v)?;
                        q_bracket(&mid, &cx.e(m, q)?, &ParamPoly::one())
                    };
                    let value = term(z1, z2)?.add(&term(z2, z1)?)?;
                    push(out, family, format!("w={w} z1={z1} z2={z2} u={u}"), value);
                }
            }
        }
    }
    Ok(())
}

fn quartic_yang(cx: &Ctx, out: &mut Vec<Instance>) -> Result<()> {
    let m = cx.f.m;
    let one = ParamPoly::one();
    let ms = cx.modes();
    let term = |s: i32, r1: i32, t: i32, r2: i32| -> Result<ShuffleElement> {
        let a = q_bracket(&cx.e(m - 1, s)?, &cx.e(m, r1)?, &one)?;
        let b = q_bracket(&cx.e(m + 1, t)?, &cx.e(m, r2)?, &one)?;
        q_bracket(&a, &b, &one)
    };
    for &s in &ms {
        for &t in &ms {
            push(out, "quartic at the odd color, zero modes", format!("s={s} s'={t}"), term(s, 0, t, 0)?);
            for (a, &r1) in ms.iter().enumerate() {
                for &r2 in &ms[a..] {
                    let value = term(s, r1, t, r2)?.add(&term(s, r2, t, r1)?)?;
                    push(out, "quartic at the odd color, symmetrized", format!("s={s} r1={r1} s'={t} r2={r2}"), value);
                }
            }
        }
    }
    Ok(())
}

/// Every relation instance of `flavor` over the standard mode window.
pub fn instances(flavor: &Flavor) -> Result<Vec<Instance>> {
    let cx = Ctx { f: *flavor };
    let mut out = Vec::new();
    let (v, vi) = (ParamPoly::v(), ParamPoly::v_pow(-1));
    match flavor.kind {
        FlavorKind::TrigA => {
            quadratic_family(&cx, &mut out, "quadratic")?;
            serre_family(&cx, &mut out, "cubic Serre", |_, _| (vi.clone(), v.clone()))?;
        }
        FlavorKind::TwoParam => {
            quadratic_family(&cx, &mut out, "two-parameter quadratic")?;
            serre_family(&cx, &mut out, "two-parameter cubic Serre", |i, j| {
                if j == i + 1 {
                    (ParamPoly::u_pow(0, 2), ParamPoly::u_pow(2, 0))
                } else {
                    (ParamPoly::u_pow(0, -2), ParamPoly::u_pow(-2, 0))
                }
            })?;
        }
        FlavorKind::TrigSuper => {
            quadratic_family(&cx, &mut out, "super quadratic")?;
            commuting_family(&cx, &mut out, "super commutation")?;
            serre_family(&cx, &mut out, "super cubic Serre", |_, _| (vi.clone(), v.clone()))?;
            if flavor.m >= 2 && flavor.n >= 2 {
                quartic_trig(&cx, &mut out, "quartic at the odd color")?;
            }
        }
        FlavorKind::YangA => {
            quadratic_family(&cx, &mut out, "yangian quadratic")?;
            serre_family(&cx, &mut out, "yangian cubic Serre", |_, _| (ParamPoly::one(), ParamPoly::one()))?;
        }
        FlavorKind::YangSuper => {
            quadratic_family(&cx, &mut out, "super yangian quadratic")?;
            commuting_family(&cx, &mut out, "super yangian commutation")?;
            serre_family(&cx, &mut out, "super yangian cubic Serre", |_, _| (ParamPoly::one(), ParamPoly::one()))?;
            if flavor.m >= 2 && flavor.n >= 2 {
                quartic_yang(&cx, &mut out)?;
            }
        }
    }
    Ok(out)
}
