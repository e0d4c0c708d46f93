//! Coefficient rings: Laurent polynomials in the formal parameters over ℚ,
//! their fraction field, and the q-integers.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rational = BigRational;

/// Exponent vector of a parameter monomial. Flavors with a single parameter
/// leave the second slot at zero.
pub type PExp = [i32; 2];

/// Build a rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Build the rational `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `a · b`, skipping the gcd when both are integers.
pub fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

/// `a + b`, skipping the gcd when both are integers.
pub fn rat_add(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

/// `a − b`, skipping the gcd when both are integers.
pub fn rat_sub(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.numer() - b.numer())
    } else {
        a - b
    }
}

/// The formal parameters of a flavor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamSet {
    /// `{v}`
    V,
    /// `{u1, u2}` with `u_i = v_i^{1/2}`
    U1U2,
    /// `{h}`
    Hbar,
}

impl ParamSet {
    pub fn symbols(self) -> &'static [&'static str] {
        match self {
            ParamSet::V => &["v"],
            ParamSet::U1U2 => &["u1", "u2"],
            ParamSet::Hbar => &["h"],
        }
    }

    pub fn len(self) -> usize {
        self.symbols().len()
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

/// Laurent polynomial in at most two parameters with rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so derived
/// equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: Vec<(PExp, Rational)>,
}

fn add_exp(a: PExp, b: PExp) -> PExp {
    [a[0] + b[0], a[1] + b[1]]
}

fn sub_exp(a: PExp, b: PExp) -> PExp {
    [a[0] - b[0], a[1] - b[1]]
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0, 0], c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn monomial(e: PExp, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ParamPoly { terms: alloc::vec![(e, c)] }
        }
    }

    /// `v^k`, also used for `h^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial([k, 0], Rational::one())
    }

    pub fn v() -> Self {
        Self::v_pow(1)
    }

    pub fn hbar() -> Self {
        Self::v_pow(1)
    }

    /// `u1^a u2^b`
    pub fn u_pow(a: i32, b: i32) -> Self {
        Self::monomial([a, b], Rational::one())
    }

    /// Sorts, merges and drops zero terms.
    pub fn from_terms(mut terms: Vec<(PExp, Rational)>) -> Self {
        terms.sort_by_key(|a| a.0);
        let mut out: Vec<(PExp, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = rat_add(lc, &c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ParamPoly { terms: out }
    }

    pub fn terms(&self) -> &[(PExp, Rational)] {
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0, 0] && self.terms[0].1.is_one()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if *e == [0, 0] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(PExp, &Rational)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    /// Inverse of a nonzero monomial.
    pub fn inv_monomial(&self) -> Option<ParamPoly> {
        let (e, c) = self.as_monomial()?;
        Some(Self::monomial([-e[0], -e[1]], c.recip()))
    }

    pub fn coeff(&self, e: PExp) -> Rational {
        match self.terms.binary_search_by(|t| t.0.cmp(&e)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Leading term in lexicographic order on exponents.
    pub fn leading(&self) -> Option<&(PExp, Rational)> {
        self.terms.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiply by the monomial with exponent `e`.
    pub fn shift(&self, e: PExp) -> Self {
        ParamPoly { terms: self.terms.iter().map(|(x, c)| (add_exp(*x, e), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponent (zero vector for the zero polynomial).
    pub fn min_exp(&self) -> PExp {
        let mut m = match self.terms.first() {
            Some((e, _)) => *e,
            None => return [0, 0],
        };
        for (e, _) in &self.terms {
            m[0] = m[0].min(e[0]);
            m[1] = m[1].min(e[1]);
        }
        m
    }

    pub fn max_exp(&self) -> PExp {
        let mut m = match self.terms.first() {
            Some((e, _)) => *e,
            None => return [0, 0],
        };
        for (e, _) in &self.terms {
            m[0] = m[0].max(e[0]);
            m[1] = m[1].max(e[1]);
        }
        m
    }

    /// Apply a linear change of exponents `e ↦ f(e)`; used for degenerations
    /// such as `u1^a u2^b ↦ v^{(a-b)/2}`.
    pub fn map_exponents<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(PExp) -> Result<PExp>,
    {
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            out.push((f(*e)?, c.clone()));
        }
        Ok(Self::from_terms(out))
    }

    /// Evaluate every parameter at 1 (used as a cheap nonvanishing probe).
    pub fn eval_at_one(&self) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (_, c)| acc + c)
    }

    /// Exact quotient in the Laurent ring, or `None` when `b` does not divide.
    pub fn divide_exact(&self, b: &ParamPoly) -> Result<Option<ParamPoly>> {
        if b.is_zero() {
            return Err(Error::Invalid("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        if let Some((e, c)) = b.as_monomial() {
            let inv = c.recip();
            return Ok(Some(ParamPoly {
                terms: self.terms.iter().map(|(x, y)| (sub_exp(*x, e), y * &inv)).collect(),
            }));
        }
        let ma = self.min_exp();
        let mb = b.min_exp();
        let a0 = self.shift([-ma[0], -ma[1]]);
        let b0 = b.shift([-mb[0], -mb[1]]);
        Ok(poly_div_exact(&a0, &b0).map(|q| q.shift(sub_exp(ma, mb))))
    }

    /// Whether `b` divides `self` in the Laurent ring.
    pub fn divisible_by(&self, b: &ParamPoly) -> bool {
        matches!(self.divide_exact(b), Ok(Some(_)))
    }

    /// Greatest common divisor, normalized to an ordinary polynomial with
    /// no monomial factor and leading coefficient 1. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ParamPoly) -> ParamPoly {
        if self.is_zero() && other.is_zero() {
            return Self::zero();
        }
        let a = strip_monomial(self);
        let b = strip_monomial(other);
        let g = if a.is_zero() {
            b
        } else if b.is_zero() {
            a
        } else {
            gcd_level(&a, &b, 0)
        };
        make_monic(&g)
    }

    /// Render using the symbol names of `params`.
    pub fn pretty(&self, params: ParamSet) -> alloc::string::String {
        let mut s = alloc::string::String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        let syms = params.symbols();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = alloc::string::String::new();
            for (k, sym) in syms.iter().enumerate() {
                match e[k] {
                    0 => {}
                    1 => {
                        if !mono.is_empty() {
                            mono.push('*');
                        }
                        mono.push_str(sym);
                    }
                    p => {
                        if !mono.is_empty() {
                            mono.push('*');
                        }
                        let _ = write!(mono, "{}^{}", sym, p);
                    }
                }
            }
            if mono.is_empty() {
                let _ = write!(s, "{}", a);
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{}*{}", a, mono);
            }
        }
        s
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = if self.terms.iter().any(|(e, _)| e[1] != 0) { ParamSet::U1U2 } else { ParamSet::V };
        f.write_str(&self.pretty(params))
    }
}

fn strip_monomial(p: &ParamPoly) -> ParamPoly {
    let m = p.min_exp();
    p.shift([-m[0], -m[1]])
}

fn make_monic(p: &ParamPoly) -> ParamPoly {
    match p.leading() {
        Some((_, c)) => {
            let inv = c.recip();
            p.scale(&inv)
        }
        None => p.clone(),
    }
}

/// Exact division of ordinary polynomials (nonnegative exponents) using the
/// lexicographic leading term. The exponent box of the quotient is bounded
/// by `deg(a) - deg(b)`, which makes the loop finite.
fn poly_div_exact(a: &ParamPoly, b: &ParamPoly) -> Option<ParamPoly> {
    let da = a.max_exp();
    let db = b.max_exp();
    let bound = sub_exp(da, db);
    if bound[0] < 0 || bound[1] < 0 {
        return None;
    }
    let (lb, lbc) = b.leading().cloned()?;
    let inv = lbc.recip();
    let mut rem = a.clone();
    let mut quot: Vec<(PExp, Rational)> = Vec::new();
    while let Some((lr, lrc)) = rem.leading().cloned() {
        let t = sub_exp(lr, lb);
        if t[0] < 0 || t[1] < 0 || t[0] > bound[0] || t[1] > bound[1] {
            return None;
        }
        let c = lrc * &inv;
        let sub = b.shift(t).scale(&c);
        rem = &rem - &sub;
        quot.push((t, c));
    }
    Some(ParamPoly::from_terms(quot))
}

/// Split an ordinary polynomial into coefficients of powers of variable
/// `var`, highest power first. Coefficients only involve later variables.
fn coeffs_in(p: &ParamPoly, var: usize) -> Vec<(i32, ParamPoly)> {
    let mut buckets: alloc::collections::BTreeMap<i32, Vec<(PExp, Rational)>> = Default::default();
    for (e, c) in &p.terms {
        let mut rest = *e;
        rest[var] = 0;
        buckets.entry(e[var]).or_default().push((rest, c.clone()));
    }
    buckets.into_iter().rev().map(|(k, v)| (k, ParamPoly::from_terms(v))).collect()
}

fn deg_in(p: &ParamPoly, var: usize) -> i32 {
    p.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(-1)
}

fn lc_in(p: &ParamPoly, var: usize) -> ParamPoly {
    let d = deg_in(p, var);
    ParamPoly::from_terms(
        p.terms
            .iter()
            .filter(|(e, _)| e[var] == d)
            .map(|(e, c)| {
                let mut r = *e;
                r[var] = 0;
                (r, c.clone())
            })
            .collect(),
    )
}

fn var_pow(var: usize, k: i32) -> PExp {
    let mut e = [0, 0];
    e[var] = k;
    e
}

/// Content with respect to `var`: gcd of the coefficient polynomials. At the
/// last level the coefficients are rationals and the leading one is used, so
/// that primitive parts are monic.
fn content_in(p: &ParamPoly, var: usize) -> ParamPoly {
    if var + 1 >= 2 {
        return match p.leading() {
            Some((_, c)) => ParamPoly::constant(c.clone()),
            None => ParamPoly::zero(),
        };
    }
    let mut g = ParamPoly::zero();
    for (_, c) in coeffs_in(p, var) {
        g = if g.is_zero() { c } else { gcd_level(&g, &c, var + 1) };
        if g.as_constant().is_some() {
            break;
        }
    }
    g
}

fn primitive_part(p: &ParamPoly, var: usize) -> ParamPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, var);
    poly_div_exact(p, &c).expect("content divides")
}

/// gcd of ordinary polynomials involving only variables `>= var`.
fn gcd_level(a: &ParamPoly, b: &ParamPoly, var: usize) -> ParamPoly {
    if var >= 2 {
        return ParamPoly::one();
    }
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let cg = if var + 1 >= 2 { ParamPoly::one() } else { gcd_level(&ca, &cb, var + 1) };
    let mut p = primitive_part(a, var);
    let mut q = primitive_part(b, var);
    if deg_in(&p, var) < deg_in(&q, var) {
        core::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        if deg_in(&q, var) == 0 {
            // q is free of the main variable; since it is primitive the gcd
            // in this variable is trivial.
            p = ParamPoly::one();
            break;
        }
        let r = pseudo_rem(&p, &q, var);
        p = q;
        q = primitive_part(&r, var);
    }
    let p = primitive_part(&p, var);
    &p * &cg
}

fn pseudo_rem(p: &ParamPoly, q: &ParamPoly, var: usize) -> ParamPoly {
    let dq = deg_in(q, var);
    let lq = lc_in(q, var);
    let mut r = p.clone();
    while !r.is_zero() && deg_in(&r, var) >= dq {
        let lr = lc_in(&r, var);
        let d = deg_in(&r, var) - dq;
        r = &(&lq * &r) - &(&lr * &q.shift(var_pow(var, d)));
    }
    r
}

fn merge(a: &[(PExp, Rational)], b: &[(PExp, Rational)], negate_b: bool) -> ParamPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = if i == a.len() {
            Ordering::Greater
        } else if j == b.len() {
            Ordering::Less
        } else {
            a[i].0.cmp(&b[j].0)
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { rat_sub(&a[i].1, &b[j].1) } else { rat_add(&a[i].1, &b[j].1) };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    ParamPoly { terms: out }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            if c.is_one() {
                return self.shift(e);
            }
        }
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.push((add_exp(*ea, *eb), rat_mul(ca, cb)));
            }
        }
        ParamPoly::from_terms(out)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(ParamPoly);

/// `[k]_v = v^{k-1} + v^{k-3} + … + v^{1-k}`.
pub fn qint(k: u32) -> ParamPoly {
    qint_exp(k, [1, 0])
}

fn qint_exp(k: u32, q: PExp) -> ParamPoly {
    let k = k as i32;
    ParamPoly::from_terms(
        (0..k).map(|j| ([(k - 1 - 2 * j) * q[0], (k - 1 - 2 * j) * q[1]], Rational::one())).collect(),
    )
}

/// `[k]_v!`
pub fn qfact(k: u32) -> ParamPoly {
    (1..=k).fold(ParamPoly::one(), |acc, j| &acc * &qint(j))
}

/// q-integer in the deformation parameter of a parameter set: `v` itself,
/// or `u1 u2^{-1}` for the two-parameter flavor. Yangian sets have none.
pub fn qint_in(params: ParamSet, k: u32) -> Result<ParamPoly> {
    match params {
        ParamSet::V => Ok(qint(k)),
        ParamSet::U1U2 => Ok(qint_exp(k, [1, -1])),
        ParamSet::Hbar => Err(Error::FlavorMismatch("q-integers are undefined for the Yangian parameter set".into())),
    }
}

pub fn qfact_in(params: ParamSet, k: u32) -> Result<ParamPoly> {
    let mut acc = ParamPoly::one();
    for j in 1..=k {
        acc = &acc * &qint_in(params, j)?;
    }
    Ok(acc)
}

/// Element of the fraction field, kept in lowest terms.
///
/// The denominator is an ordinary polynomial with no monomial factor and
/// leading coefficient 1, so structurally equal fractions are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamFrac {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamFrac {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        ParamFrac { num: p, den: ParamPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(ParamPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(ParamPoly::one())
    }

    fn normalize(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut n = num.divide_exact(&g).ok().flatten().expect("gcd divides");
        let d = den.divide_exact(&g).ok().flatten().expect("gcd divides");
        let m = d.min_exp();
        let d = d.shift([-m[0], -m[1]]);
        n = n.shift([-m[0], -m[1]]);
        let lc = d.leading().map(|t| t.1.clone()).unwrap_or_else(Rational::one);
        let inv = lc.recip();
        ParamFrac { num: n.scale(&inv), den: d.scale(&inv) }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is a unit.
    pub fn as_poly(&self) -> Option<ParamPoly> {
        self.num.divide_exact(&self.den).ok().flatten()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn mul_poly(&self, p: &ParamPoly) -> Self {
        Self::normalize(&self.num * p, self.den.clone())
    }

    pub fn div_poly(&self, p: &ParamPoly) -> Result<Self> {
        Self::new(self.num.clone(), &self.den * p)
    }
}

impl<'a> Add<&'a ParamFrac> for &'a ParamFrac {
    type Output = ParamFrac;
    fn add(self, rhs: &ParamFrac) -> ParamFrac {
        if self.den == rhs.den {
            return ParamFrac::normalize(&self.num + &rhs.num, self.den.clone());
        }
        ParamFrac::normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a ParamFrac> for &'a ParamFrac {
    type Output = ParamFrac;
    fn sub(self, rhs: &ParamFrac) -> ParamFrac {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ParamFrac> for &'a ParamFrac {
    type Output = ParamFrac;
    fn mul(self, rhs: &ParamFrac) -> ParamFrac {
        ParamFrac::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &ParamFrac {
    type Output = ParamFrac;
    fn neg(self) -> ParamFrac {
        ParamFrac { num: -&self.num, den: self.den.clone() }
    }
}

owned_ops!(ParamFrac);

impl fmt::Display for ParamFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Integer-valued helpers shared by the combinatorial code.
pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// gcd of two big integers (exposed for callers normalizing contents).
pub fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}
