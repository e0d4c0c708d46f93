//! Sparse multivariate Laurent polynomials in colored variables `x_{i,r}`,
//! `y_{β,s}`, `z_{β,i}` with [`ParamPoly`] coefficients.
//!
//! Terms are stored flat as `(x-monomial, parameter exponent, rational)` and
//! kept sorted, so structural equality is equality of polynomials.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;
use core::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ring::{rat, rat_add, rat_mul, rat_sub, PExp, ParamPoly, ParamSet, Rational};

static GUARD: AtomicU64 = AtomicU64::new(10_000_000);

/// Current limit on the number of summands a symmetrization may generate.
pub fn guard_limit() -> u64 {
    GUARD.load(AtomicOrdering::Relaxed)
}

pub fn set_guard_limit(limit: u64) {
    GUARD.store(limit, AtomicOrdering::Relaxed);
}

/// Fail with [`Error::GuardExceeded`] when `needed` is over the limit.
pub fn check_guard(needed: u128) -> Result<()> {
    let limit = guard_limit() as u128;
    if needed > limit {
        Err(Error::GuardExceeded { needed, limit })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Namespace {
    X,
    Y,
    Z,
}

impl Namespace {
    pub fn letter(self) -> char {
        match self {
            Namespace::X => 'x',
            Namespace::Y => 'y',
            Namespace::Z => 'z',
        }
    }
}

/// A variable; ordering is by namespace, then color, then slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    pub ns: Namespace,
    pub color: u32,
    pub slot: u32,
}

impl VarId {
    pub const fn new(ns: Namespace, color: u32, slot: u32) -> Self {
        VarId { ns, color, slot }
    }

    pub const fn x(color: u32, slot: u32) -> Self {
        Self::new(Namespace::X, color, slot)
    }

    pub const fn y(color: u32, slot: u32) -> Self {
        Self::new(Namespace::Y, color, slot)
    }

    pub const fn z(color: u32, slot: u32) -> Self {
        Self::new(Namespace::Z, color, slot)
    }

    /// `"x:1:2"`
    pub fn key(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}:{}:{}", self.ns.letter(), self.color, self.slot);
        s
    }

    pub fn parse(key: &str) -> Result<Self> {
        let bad = || Error::Invalid(alloc::format!("bad variable key {:?}", key));
        let mut it = key.split(':');
        let ns = match it.next() {
            Some("x") => Namespace::X,
            Some("y") => Namespace::Y,
            Some("z") => Namespace::Z,
            _ => return Err(bad()),
        };
        let color: u32 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let slot: u32 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        if it.next().is_some() {
            return Err(bad());
        }
        Ok(VarId { ns, color, slot })
    }
}

/// Sorted list of variables with nonzero exponents.
pub type Mono = SmallVec<[(VarId, i32); 6]>;

/// `c · w` with `c` a parameter monomial, or a pure constant when `w` is `None`.
type MonomialImage = (Option<VarId>, PExp, Rational);

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = Mono::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn mono_normalize(mut m: Mono) -> Mono {
    m.sort_unstable_by_key(|a| a.0);
    let mut out = Mono::with_capacity(m.len());
    for (v, e) in m {
        match out.last_mut() {
            Some((lv, le)) if *lv == v => *le += e,
            _ => out.push((v, e)),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

/// Exponent of `v` in `m`.
pub fn mono_exp(m: &Mono, v: VarId) -> i32 {
    match m.binary_search_by(|t| t.0.cmp(&v)) {
        Ok(i) => m[i].1,
        Err(_) => 0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Mono,
    pub pexp: PExp,
    pub coeff: Rational,
}

fn term_cmp(a: &Term, b: &Term) -> Ordering {
    a.mono.cmp(&b.mono).then_with(|| a.pexp.cmp(&b.pexp))
}

/// Image of a variable under a substitution: `scale · var + shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    pub scale: ParamPoly,
    pub var: Option<VarId>,
    pub shift: ParamPoly,
}

impl Image {
    pub fn var(v: VarId) -> Self {
        Image { scale: ParamPoly::one(), var: Some(v), shift: ParamPoly::zero() }
    }

    /// `c · v` for a parameter monomial `c`.
    pub fn scaled(c: ParamPoly, v: VarId) -> Self {
        Image { scale: c, var: Some(v), shift: ParamPoly::zero() }
    }

    /// `v + c`
    pub fn shifted(v: VarId, c: ParamPoly) -> Self {
        Image { scale: ParamPoly::one(), var: Some(v), shift: c }
    }

    pub fn constant(c: ParamPoly) -> Self {
        Image { scale: ParamPoly::zero(), var: None, shift: c }
    }

    fn to_xpoly(&self) -> XPoly {
        let mut p = XPoly::constant(&self.shift);
        if let Some(v) = self.var {
            p = &p + &XPoly::var(v).scale(&self.scale);
        }
        p
    }

    /// Terms of `image^e`; negative `e` needs a single-term image.
    fn power_terms(&self, e: i32) -> Result<Vec<(Mono, PExp, Rational)>> {
        if e < 0 {
            let (w, pe, c) = self
                .as_monomial()
                .ok_or_else(|| Error::Invalid("negative power of a non-monomial image".into()))?;
            let mono: Mono = w.map(|w| (w, e)).into_iter().collect();
            return Ok(alloc::vec![(mono, [pe[0] * e, pe[1] * e], pow_rat(&c, e))]);
        }
        let p = self.to_xpoly().pow(e as u32);
        Ok(p.terms.into_iter().map(|t| (t.mono, t.pexp, t.coeff)).collect())
    }

    /// The image as `c · monomial` when it has a single term.
    fn as_monomial(&self) -> Option<(Option<VarId>, PExp, Rational)> {
        match (self.var, self.shift.is_zero()) {
            (Some(v), true) => {
                let (e, c) = self.scale.as_monomial()?;
                Some((Some(v), e, c.clone()))
            }
            (_, false) if self.var.is_none() || self.scale.is_zero() => {
                let (e, c) = self.shift.as_monomial()?;
                Some((None, e, c.clone()))
            }
            _ => None,
        }
    }
}

/// Sparse Laurent polynomial in colored variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    terms: Vec<Term>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(&ParamPoly::one())
    }

    pub fn constant(c: &ParamPoly) -> Self {
        Self::from_mono(Mono::new(), c)
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        let mut m = Mono::new();
        if e != 0 {
            m.push((v, e));
        }
        Self::from_mono(m, &ParamPoly::one())
    }

    /// `c · m` for a (possibly unsorted) monomial.
    pub fn from_mono(m: Mono, c: &ParamPoly) -> Self {
        let m = mono_normalize(m);
        XPoly {
            terms: c.terms().iter().map(|(e, r)| Term { mono: m.clone(), pexp: *e, coeff: r.clone() }).collect(),
        }
    }

    /// Product of variable powers, e.g. `&[(x11, 2), (x12, 1)]`.
    pub fn monomial(vars: &[(VarId, i32)], c: &ParamPoly) -> Self {
        Self::from_mono(vars.iter().copied().collect(), c)
    }

    pub fn from_terms(mut terms: Vec<Term>) -> Self {
        terms.sort_unstable_by(term_cmp);
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.mono == t.mono && l.pexp == t.pexp => l.coeff = rat_add(&l.coeff, &t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        XPoly { terms: out }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient groups: each distinct x-monomial with its parameter polynomial.
    pub fn groups(&self) -> Vec<(Mono, ParamPoly)> {
        let mut out: Vec<(Mono, ParamPoly)> = Vec::new();
        let mut i = 0;
        while i < self.terms.len() {
            let mut j = i;
            while j < self.terms.len() && self.terms[j].mono == self.terms[i].mono {
                j += 1;
            }
            let c = ParamPoly::from_terms(self.terms[i..j].iter().map(|t| (t.pexp, t.coeff.clone())).collect());
            out.push((self.terms[i].mono.clone(), c));
            i = j;
        }
        out
    }

    /// Coefficient of the x-monomial `m` (which must be normalized).
    pub fn coeff_of(&self, m: &Mono) -> ParamPoly {
        let start = self.terms.partition_point(|t| t.mono < *m);
        let end = self.terms.partition_point(|t| t.mono <= *m);
        ParamPoly::from_terms(self.terms[start..end].iter().map(|t| (t.pexp, t.coeff.clone())).collect())
    }

    /// The constant value if no variables occur.
    pub fn as_constant(&self) -> Option<ParamPoly> {
        if self.terms.iter().all(|t| t.mono.is_empty()) {
            Some(ParamPoly::from_terms(self.terms.iter().map(|t| (t.pexp, t.coeff.clone())).collect()))
        } else {
            None
        }
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.iter().flat_map(|t| t.mono.iter().map(|x| x.0)).collect()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.iter().flat_map(|t| t.mono.iter().map(|x| x.1)).min()
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if let Some((e, r)) = c.as_monomial() {
            if e == [0, 0] {
                return self.scale_rat(r);
            }
            return XPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|t| Term { mono: t.mono.clone(), pexp: [t.pexp[0] + e[0], t.pexp[1] + e[1]], coeff: rat_mul(&t.coeff, r) })
                    .collect(),
            };
        }
        self * &Self::constant(c)
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        XPoly { terms: self.terms.iter().map(|t| Term { mono: t.mono.clone(), pexp: t.pexp, coeff: rat_mul(&t.coeff, r) }).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale_rat(&-Rational::one())
    }

    /// Multiply by an x-monomial.
    pub fn mul_mono(&self, m: &Mono) -> Self {
        let m = mono_normalize(m.clone());
        if m.is_empty() {
            return self.clone();
        }
        // cancellations can reorder terms
        Self::from_terms(self.terms.iter().map(|t| Term { mono: mono_mul(&t.mono, &m), pexp: t.pexp, coeff: t.coeff.clone() }).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                term_cmp(&a[i], &b[j])
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let mut t = b[j].clone();
                    if negate {
                        t.coeff = -t.coeff;
                    }
                    out.push(t);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { rat_sub(&a[i].coeff, &b[j].coeff) } else { rat_add(&a[i].coeff, &b[j].coeff) };
                    if !c.is_zero() {
                        out.push(Term { mono: a[i].mono.clone(), pexp: a[i].pexp, coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        XPoly { terms: out }
    }

    /// Simultaneous renaming of variables; images may collide.
    pub fn rename<F: Fn(VarId) -> VarId>(&self, f: F) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    mono: mono_normalize(t.mono.iter().map(|&(v, e)| (f(v), e)).collect()),
                    pexp: t.pexp,
                    coeff: t.coeff.clone(),
                })
                .collect(),
        )
    }

    /// Substitute every variable; errors if one is unassigned.
    pub fn substitute(&self, assignment: &BTreeMap<VarId, Image>) -> Result<Self> {
        self.substitute_with(|v| {
            assignment
                .get(&v)
                .cloned()
                .ok_or_else(|| Error::Invalid(alloc::format!("unassigned variable {}", v.key())))
        })
    }

    /// Substitute the assigned variables and keep the others.
    pub fn substitute_partial(&self, assignment: &BTreeMap<VarId, Image>) -> Self {
        self.substitute_with(|v| Ok(assignment.get(&v).cloned().unwrap_or_else(|| Image::var(v))))
            .expect("partial substitution cannot fail on unassigned variables")
    }

    fn substitute_with<F: Fn(VarId) -> Result<Image>>(&self, lookup: F) -> Result<Self> {
        let vars = self.vars();
        let mut images: BTreeMap<VarId, Image> = BTreeMap::new();
        for v in vars {
            images.insert(v, lookup(v)?);
        }
        let monomial_images: Option<BTreeMap<VarId, MonomialImage>> =
            images.iter().map(|(v, img)| img.as_monomial().map(|m| (*v, m))).collect();
        if let Some(mi) = monomial_images {
            let mut out = Vec::with_capacity(self.terms.len());
            for t in &self.terms {
                let mut mono = Mono::new();
                let mut pexp = t.pexp;
                let mut coeff = t.coeff.clone();
                for &(v, e) in &t.mono {
                    let (w, pe, c) = &mi[&v];
                    if c.is_zero() {
                        if e < 0 {
                            return Err(Error::Invalid("negative power of a variable sent to zero".into()));
                        }
                        coeff = Rational::zero();
                        break;
                    }
                    if let Some(w) = w {
                        mono.push((*w, e));
                    }
                    pexp = [pexp[0] + pe[0] * e, pexp[1] + pe[1] * e];
                    if !c.is_one() {
                        coeff = rat_mul(&coeff, &pow_rat(c, e));
                    }
                }
                if !coeff.is_zero() {
                    out.push(Term { mono: mono_normalize(mono), pexp, coeff });
                }
            }
            return Ok(Self::from_terms(out));
        }
        // one variable at a time, so that collapsing terms merge early
        let mut cur = self.terms.clone();
        for (v, img) in &images {
            let mut cache: BTreeMap<i32, Vec<(Mono, PExp, Rational)>> = BTreeMap::new();
            let mut out = Vec::with_capacity(cur.len());
            for t in cur {
                let e = mono_exp(&t.mono, *v);
                if e == 0 {
                    out.push(t);
                    continue;
                }
                if let alloc::collections::btree_map::Entry::Vacant(slot) = cache.entry(e) {
                    slot.insert(img.power_terms(e)?);
                }
                let rest: Mono = t.mono.iter().copied().filter(|x| x.0 != *v).collect();
                for (m, pe, c) in &cache[&e] {
                    out.push(Term {
                        mono: mono_mul(&rest, m),
                        pexp: [t.pexp[0] + pe[0], t.pexp[1] + pe[1]],
                        coeff: rat_mul(&t.coeff, c),
                    });
                }
            }
            cur = Self::from_terms(out).terms;
        }
        Ok(XPoly { terms: cur })
    }

    /// Exact quotient by `(x_a − l)` where `l` does not involve `x_a`.
    pub fn divide_linear(&self, a: VarId, l: &XPoly) -> Option<XPoly> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut by_exp: BTreeMap<i32, Vec<Term>> = BTreeMap::new();
        for t in &self.terms {
            let e = mono_exp(&t.mono, a);
            let mono: Mono = t.mono.iter().copied().filter(|x| x.0 != a).collect();
            by_exp.entry(e).or_default().push(Term { mono, pexp: t.pexp, coeff: t.coeff.clone() });
        }
        let e0 = *by_exp.keys().next()?;
        let top = *by_exp.keys().next_back()?;
        let n = (top - e0) as usize;
        if n == 0 {
            return None;
        }
        let mut c: Vec<XPoly> = alloc::vec![XPoly::zero(); n + 1];
        for (e, ts) in by_exp {
            c[(e - e0) as usize] = XPoly::from_terms(ts);
        }
        let mut q: Vec<XPoly> = alloc::vec![XPoly::zero(); n];
        q[n - 1] = c[n].clone();
        for j in (1..n).rev() {
            q[j - 1] = &c[j] + &(l * &q[j]);
        }
        let rem = &c[0] + &(l * &q[0]);
        if !rem.is_zero() {
            return None;
        }
        let mut out = XPoly::zero();
        for (j, qj) in q.into_iter().enumerate() {
            let e = j as i32 + e0;
            let mut m = Mono::new();
            if e != 0 {
                m.push((a, e));
            }
            out = &out + &qj.mul_mono(&m);
        }
        Some(out)
    }

    /// Divide every coefficient by a parameter polynomial, if exact.
    pub fn divide_params(&self, d: &ParamPoly) -> Option<XPoly> {
        if let Some((e, r)) = d.as_monomial() {
            let inv = r.recip();
            return Some(XPoly {
                terms: self
                    .terms
                    .iter()
                    .map(|t| Term { mono: t.mono.clone(), pexp: [t.pexp[0] - e[0], t.pexp[1] - e[1]], coeff: &t.coeff * &inv })
                    .collect(),
            });
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in self.groups() {
            let q = c.divide_exact(d).ok().flatten()?;
            for (e, r) in q.terms() {
                out.push(Term { mono: m.clone(), pexp: *e, coeff: r.clone() });
            }
        }
        Some(Self::from_terms(out))
    }

    /// `(d · self, d)` with `d` the least common denominator of the rational coefficients.
    pub fn clear_denominators(&self) -> (Self, num_bigint::BigInt) {
        let mut d = num_bigint::BigInt::from(1);
        for t in &self.terms {
            if !t.coeff.is_integer() {
                d = num_integer::Integer::lcm(&d, t.coeff.denom());
            }
        }
        if d == num_bigint::BigInt::from(1) {
            return (self.clone(), d);
        }
        let scale = Rational::from_integer(d.clone());
        (self.scale_rat(&scale), d)
    }

    /// gcd of all coefficient groups (zero for the zero polynomial).
    pub fn content(&self) -> ParamPoly {
        let mut g = ParamPoly::zero();
        for (_, c) in self.groups() {
            g = g.gcd(&c);
            if g.as_constant().is_some() && !g.is_zero() {
                return ParamPoly::one();
            }
        }
        g
    }

    /// The parameter monomial `c` with `self = c · other`, if there is one.
    pub fn unit_ratio(&self, other: &XPoly) -> Option<ParamPoly> {
        let (ta, tb) = (self.terms.first()?, other.terms.first()?);
        if ta.mono != tb.mono || tb.coeff.is_zero() {
            return None;
        }
        let c = ParamPoly::monomial([ta.pexp[0] - tb.pexp[0], ta.pexp[1] - tb.pexp[1]], &ta.coeff / &tb.coeff);
        (other.scale(&c) == *self).then_some(c)
    }

    /// Apply a map to every coefficient group.
    pub fn map_coeffs<F: Fn(&ParamPoly) -> Result<ParamPoly>>(&self, f: F) -> Result<Self> {
        let mut out = Vec::new();
        for (m, c) in self.groups() {
            let c2 = f(&c)?;
            for (e, r) in c2.terms() {
                out.push(Term { mono: m.clone(), pexp: *e, coeff: r.clone() });
            }
        }
        Ok(Self::from_terms(out))
    }

    /// Swap two variables.
    pub fn swap_vars(&self, a: VarId, b: VarId) -> Self {
        self.rename(|v| if v == a { b } else if v == b { a } else { v })
    }

    /// Whether the polynomial is symmetric (or skew-symmetric) in `vars`.
    pub fn is_symmetric_in(&self, vars: &[VarId], skew: bool) -> bool {
        for w in vars.windows(2) {
            let s = self.swap_vars(w[0], w[1]);
            let ok = if skew { s == self.neg() } else { s == *self };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Human-readable rendering.
    pub fn pretty(&self, params: ParamSet) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.groups().iter().enumerate() {
            if idx > 0 {
                s.push_str(" + ");
            }
            let cs = c.pretty(params);
            if m.is_empty() {
                let _ = write!(s, "({})", cs);
                continue;
            }
            if !c.is_one() {
                let _ = write!(s, "({})*", cs);
            }
            for (k, (v, e)) in m.iter().enumerate() {
                if k > 0 {
                    s.push('*');
                }
                let _ = write!(s, "{}[{},{}]", v.ns.letter(), v.color, v.slot);
                if *e != 1 {
                    let _ = write!(s, "^{}", e);
                }
            }
        }
        s
    }
}

fn pow_rat(c: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(c.clone(), e as usize)
    } else {
        num_traits::pow(c.recip(), (-e) as usize)
    }
}

impl<'a> core::ops::Add<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.merge(rhs, false)
    }
}

impl<'a> core::ops::Sub<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.merge(rhs, true)
    }
}

impl<'a> core::ops::Mul<&'a XPoly> for &'a XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                out.push(Term {
                    mono: mono_mul(&a.mono, &b.mono),
                    pexp: [a.pexp[0] + b.pexp[0], a.pexp[1] + b.pexp[1]],
                    coeff: rat_mul(&a.coeff, &b.coeff),
                });
            }
        }
        XPoly::from_terms(out)
    }
}

impl core::ops::Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::neg(self)
    }
}

/// All permutations of `0..k` with their parity (true when odd).
pub fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    permute_rec(&mut cur, 0, false, &mut out);
    out
}

fn permute_rec(cur: &mut Vec<usize>, start: usize, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
    if start + 1 >= cur.len() {
        out.push((cur.clone(), odd));
        return;
    }
    for i in start..cur.len() {
        cur.swap(start, i);
        permute_rec(cur, start + 1, odd ^ (i != start), out);
        cur.swap(start, i);
    }
}

fn factorial_u128(k: u32) -> u128 {
    (1..=k as u128).fold(1u128, |a, b| a.saturating_mul(b))
}

/// `(1/∏ k_i!) Σ_σ sign(σ) f∘σ` over the product of symmetric groups on the
/// x-variables of each color; the sign is used only on `skew_colors`.
pub fn symmetrize(f: &XPoly, grading: &[u32], skew_colors: &[u32]) -> Result<XPoly> {
    let needed = grading.iter().fold(1u128, |a, &k| a.saturating_mul(factorial_u128(k)));
    check_guard(needed)?;
    let mut acc = f.clone();
    for (ci, &k) in grading.iter().enumerate() {
        if k < 2 {
            continue;
        }
        let color = ci as u32 + 1;
        let skew = skew_colors.contains(&color);
        let mut sum = XPoly::zero();
        for (perm, odd) in permutations(k as usize) {
            let p = acc.rename(|v| {
                if v.ns == Namespace::X && v.color == color && v.slot >= 1 && v.slot <= k {
                    VarId::x(color, perm[(v.slot - 1) as usize] as u32 + 1)
                } else {
                    v
                }
            });
            sum = if skew && odd { &sum - &p } else { &sum + &p };
        }
        acc = sum.scale_rat(&Rational::new(1.into(), crate::ring::factorial(k)));
    }
    Ok(acc)
}

/// Exponent tuple of `m` on the listed variables.
pub fn exponent_tuple(m: &Mono, vars: &[VarId]) -> Vec<i32> {
    vars.iter().map(|&v| mono_exp(m, v)).collect()
}

/// Expansion of a symmetric `f` in `vars` in the monomial symmetric basis
/// `m_λ` (λ non-decreasing), or of a skew `f` in the alternants `a_λ`
/// (λ strictly increasing, `a_λ = Σ sign(σ) x^{σλ}`).
pub fn orbit_expand(f: &XPoly, vars: &[VarId], skew: bool) -> Result<Vec<(Vec<i32>, ParamPoly)>> {
    let set: BTreeSet<VarId> = vars.iter().copied().collect();
    if f.vars().iter().any(|v| !set.contains(v)) {
        return Err(Error::Invalid("polynomial involves variables outside the expansion set".into()));
    }
    if !f.is_symmetric_in(vars, skew) {
        return Err(Error::Invalid(if skew { "input is not skew-symmetric".into() } else { "input is not symmetric".into() }));
    }
    let mut out = Vec::new();
    for (m, c) in f.groups() {
        let t = exponent_tuple(&m, vars);
        let ok = t.windows(2).all(|w| if skew { w[0] < w[1] } else { w[0] <= w[1] });
        if ok {
            out.push((t, c));
        }
    }
    Ok(out)
}

/// `m_λ` (or `a_λ` when `skew`) in `vars`.
pub fn orbit_sum(lambda: &[i32], vars: &[VarId], skew: bool) -> XPoly {
    let mut terms = Vec::new();
    let mut seen = BTreeSet::new();
    for (perm, odd) in permutations(vars.len()) {
        let m: Mono = perm.iter().enumerate().filter(|(i, _)| lambda[*i] != 0).map(|(i, &p)| (vars[p], lambda[i])).collect();
        let m = mono_normalize(m);
        if skew {
            let c = if odd { -Rational::one() } else { Rational::one() };
            terms.push(Term { mono: m, pexp: [0, 0], coeff: c });
        } else if seen.insert(m.clone()) {
            terms.push(Term { mono: m, pexp: [0, 0], coeff: Rational::one() });
        }
    }
    XPoly::from_terms(terms)
}

/// Coefficients of `f` in the monomial symmetric basis of the `k`
/// x-variables of `color`.
pub fn monomial_symmetric_expand(f: &XPoly, color: u32, k: u32) -> Result<Vec<(Vec<i32>, ParamPoly)>> {
    let vars: Vec<VarId> = (1..=k).map(|s| VarId::x(color, s)).collect();
    orbit_expand(f, &vars, false)
}

/// Rebuild a polynomial from an orbit expansion.
pub fn orbit_rebuild(expansion: &[(Vec<i32>, ParamPoly)], vars: &[VarId], skew: bool) -> XPoly {
    let mut acc = XPoly::zero();
    for (lambda, c) in expansion {
        acc = &acc + &orbit_sum(lambda, vars, skew).scale(c);
    }
    acc
}

/// Rational `1/n`.
pub fn inv_int(n: i64) -> Rational {
    rat(n).recip()
}
