//! Flavors, the ζ-matrices, shuffle elements and the shuffle product.
//!
//! An element of grading `k` is stored as its numerator `f`; the function it
//! represents is `f / ∏_{i} ∏_{r,r'} (x_{i,r} − x_{i+1,r'})`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;


use crate::error::{Error, Result};
use crate::multipoly::{check_guard, Image, Mono, Namespace, VarId, XPoly};
use crate::ring::{ratio, ParamPoly, ParamSet, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FlavorKind {
    TrigA,
    TwoParam,
    TrigSuper,
    YangA,
    YangSuper,
}

impl FlavorKind {
    pub fn name(self) -> &'static str {
        match self {
            FlavorKind::TrigA => "trig-a",
            FlavorKind::TwoParam => "trig-2p",
            FlavorKind::TrigSuper => "trig-super",
            FlavorKind::YangA => "yang-a",
            FlavorKind::YangSuper => "yang-super",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "trig-a" => FlavorKind::TrigA,
            "trig-2p" => FlavorKind::TwoParam,
            "trig-super" => FlavorKind::TrigSuper,
            "yang-a" => FlavorKind::YangA,
            "yang-super" => FlavorKind::YangSuper,
            _ => return Err(Error::Invalid(alloc::format!("unknown flavor kind {:?}", s))),
        })
    }

    pub fn is_super(self) -> bool {
        matches!(self, FlavorKind::TrigSuper | FlavorKind::YangSuper)
    }

    pub fn is_yangian(self) -> bool {
        matches!(self, FlavorKind::YangA | FlavorKind::YangSuper)
    }
}

/// One of the five algebra settings. For the non-super kinds `m` is 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flavor {
    pub kind: FlavorKind,
    pub m: u32,
    pub n: u32,
}

impl Flavor {
    pub fn new(kind: FlavorKind, m: u32, n: u32) -> Result<Self> {
        if kind.is_super() {
            if m < 1 || n < 1 {
                return Err(Error::Invalid("super flavors need m ≥ 1 and n ≥ 1".into()));
            }
        } else if n < 2 {
            return Err(Error::Invalid("flavor needs n ≥ 2".into()));
        }
        Ok(Flavor { kind, m: if kind.is_super() { m } else { 0 }, n })
    }

    pub fn trig_a(n: u32) -> Self {
        Self::new(FlavorKind::TrigA, 0, n).expect("n ≥ 2")
    }

    pub fn two_param(n: u32) -> Self {
        Self::new(FlavorKind::TwoParam, 0, n).expect("n ≥ 2")
    }

    pub fn trig_super(m: u32, n: u32) -> Self {
        Self::new(FlavorKind::TrigSuper, m, n).expect("m, n ≥ 1")
    }

    pub fn yang_a(n: u32) -> Self {
        Self::new(FlavorKind::YangA, 0, n).expect("n ≥ 2")
    }

    pub fn yang_super(m: u32, n: u32) -> Self {
        Self::new(FlavorKind::YangSuper, m, n).expect("m, n ≥ 1")
    }

    /// Number of colors `|I|`.
    pub fn rank(&self) -> u32 {
        if self.kind.is_super() {
            self.m + self.n - 1
        } else {
            self.n - 1
        }
    }

    pub fn params(&self) -> ParamSet {
        match self.kind {
            FlavorKind::TrigA | FlavorKind::TrigSuper => ParamSet::V,
            FlavorKind::TwoParam => ParamSet::U1U2,
            FlavorKind::YangA | FlavorKind::YangSuper => ParamSet::Hbar,
        }
    }

    pub fn skew_color(&self) -> Option<u32> {
        if self.kind.is_super() {
            Some(self.m)
        } else {
            None
        }
    }

    pub fn skew_colors(&self) -> Vec<u32> {
        self.skew_color().into_iter().collect()
    }

    fn check_color(&self, i: u32) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::Invalid(alloc::format!("color {} out of range 1..={}", i, self.rank())))
        } else {
            Ok(())
        }
    }

    /// `(ε_i, ε_i)`: `+1` up to `m`, `−1` beyond (always `+1` outside super kinds).
    fn eps(&self, i: u32) -> i32 {
        if self.kind.is_super() && i > self.m {
            -1
        } else {
            1
        }
    }

    /// Cartan data `c_{ij}`, or the super form `c̄_{ij}`.
    pub fn cartan(&self, i: u32, j: u32) -> i32 {
        if i == j {
            self.eps(i) + self.eps(i + 1)
        } else if j == i + 1 {
            -self.eps(i + 1)
        } else if i == j + 1 {
            -self.eps(i)
        } else {
            0
        }
    }

    /// `ζ_{i,j}`
    pub fn zeta(&self, i: u32, j: u32) -> Result<Zeta> {
        self.check_color(i)?;
        self.check_color(j)?;
        let c = self.cartan(i, j);
        let adjacent = i.abs_diff(j) <= 1;
        Ok(match self.kind {
            _ if !adjacent => Zeta::One,
            FlavorKind::TwoParam => {
                let q = ParamPoly::u_pow(1, -1);
                if i == j {
                    Zeta::Trig { scale: ParamPoly::one(), kappa: ParamPoly::u_pow(-2, 2) }
                } else if j == i + 1 {
                    Zeta::Trig { scale: ParamPoly::u_pow(1, 1), kappa: q }
                } else {
                    Zeta::Trig { scale: ParamPoly::one(), kappa: q }
                }
            }
            _ if c == 0 => Zeta::One,
            FlavorKind::TrigA | FlavorKind::TrigSuper => {
                Zeta::Trig { scale: ParamPoly::one(), kappa: ParamPoly::v_pow(-c) }
            }
            FlavorKind::YangA | FlavorKind::YangSuper => {
                Zeta::Rational { eta: ParamPoly::monomial([1, 0], ratio(c as i64, 2)) }
            }
        })
    }

    /// The normalizer of the integral form: `v − v^{-1}`,
    /// `u1 u2^{-1} − u1^{-1} u2`, or `ħ`.
    pub fn normalizer(&self) -> ParamPoly {
        match self.params() {
            ParamSet::V => &ParamPoly::v() - &ParamPoly::v_pow(-1),
            ParamSet::U1U2 => &ParamPoly::u_pow(1, -1) - &ParamPoly::u_pow(-1, 1),
            ParamSet::Hbar => ParamPoly::hbar(),
        }
    }

    /// Shuffle rules of this flavor.
    pub fn rules(&self) -> Rules {
        let r = self.rank();
        let mut zeta = Vec::with_capacity((r * r) as usize);
        for i in 1..=r {
            for j in 1..=r {
                zeta.push(self.zeta(i, j).expect("colors in range"));
            }
        }
        Rules { rank: r, zeta, skew: self.skew_color() }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.is_super() {
            write!(f, "{}({},{})", self.kind.name(), self.m, self.n)
        } else {
            write!(f, "{}({})", self.kind.name(), self.n)
        }
    }
}

/// A ζ-factor `ζ(z)`.
///
/// `Trig` is `scale · (z − κ)/(z − 1)` evaluated at `z = x_a/x_b`;
/// `Rational` is `(z + η)/z` evaluated at `z = x_a − x_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Zeta {
    One,
    Trig { scale: ParamPoly, kappa: ParamPoly },
    Rational { eta: ParamPoly },
}

impl Zeta {
    pub fn is_one(&self) -> bool {
        matches!(self, Zeta::One)
    }

    /// Numerator and denominator as polynomials in `z`.
    pub fn as_fraction(&self, z: VarId) -> (XPoly, XPoly) {
        let zp = XPoly::var(z);
        match self {
            Zeta::One => (XPoly::one(), XPoly::one()),
            Zeta::Trig { scale, kappa } => {
                ((&zp - &XPoly::constant(kappa)).scale(scale), &zp - &XPoly::one())
            }
            Zeta::Rational { eta } => (&zp + &XPoly::constant(eta), zp),
        }
    }

    /// The factor that remains of `ζ(x_a, x_b)` once `x_a − x_b` is cleared.
    pub fn cross_numerator(&self, a: VarId, b: VarId) -> XPoly {
        let (xa, xb) = (XPoly::var(a), XPoly::var(b));
        match self {
            Zeta::One => XPoly::one(),
            Zeta::Trig { scale, kappa } => (&xa - &xb.scale(kappa)).scale(scale),
            Zeta::Rational { eta } => &(&xa - &xb) + &XPoly::constant(eta),
        }
    }

    pub fn pretty(&self, params: ParamSet) -> String {
        match self {
            Zeta::One => "1".into(),
            Zeta::Trig { scale, kappa } => {
                let s = if scale.is_one() { String::new() } else { alloc::format!("({})*", scale.pretty(params)) };
                alloc::format!("{}(z - ({}))/(z - 1)", s, kappa.pretty(params))
            }
            Zeta::Rational { eta } => alloc::format!("(z + ({}))/z", eta.pretty(params)),
        }
    }
}

/// Everything the product needs: number of colors, `ζ_{i,j}` and the skew color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rules {
    pub rank: u32,
    zeta: Vec<Zeta>,
    pub skew: Option<u32>,
}

impl Rules {
    /// Rank-1 rules with a single ζ.
    pub fn rank1(zeta: Zeta, skew: bool) -> Self {
        Rules { rank: 1, zeta: vec![zeta], skew: if skew { Some(1) } else { None } }
    }

    pub fn zeta(&self, i: u32, j: u32) -> &Zeta {
        &self.zeta[((i - 1) * self.rank + (j - 1)) as usize]
    }

    /// Colors whose same-color pairs carry a ζ-denominator.
    fn vandermonde_color(&self, i: u32) -> bool {
        !self.zeta(i, i).is_one()
    }

    /// Numerator of `F ⋆ G` for numerators `f`, `g` of gradings `k`, `l`.
    pub fn product(&self, f: &XPoly, k: &[u32], g: &XPoly, l: &[u32]) -> Result<XPoly> {
        let rank = self.rank as usize;
        if k.len() != rank || l.len() != rank {
            return Err(Error::Invalid("grading length does not match the number of colors".into()));
        }
        if k.iter().all(|&a| a == 0) {
            return Ok(f * g);
        }
        if l.iter().all(|&a| a == 0) {
            return Ok(f * g);
        }
        let needed = k.iter().zip(l).fold(1u128, |acc, (&a, &b)| acc.saturating_mul(fact128(a + b)));
        check_guard(needed)?;

        let (f, df) = f.clear_denominators();
        let (g, dg) = g.clear_denominators();
        let (f, g) = (&f, &g);
        // per color: all k_i-subsets of 1..=k_i+l_i
        let subsets: Vec<Vec<Vec<u32>>> = k.iter().zip(l).map(|(&a, &b)| combinations(a + b, a)).collect();
        let mut idx = vec![0usize; rank];
        let mut acc = XPoly::zero();
        loop {
            let choice: Vec<&Vec<u32>> = (0..rank).map(|c| &subsets[c][idx[c]]).collect();
            acc = &acc + &self.shuffle_term(f, k, g, l, &choice);
            let mut c = 0;
            loop {
                if c == rank {
                    return self.finish(acc, k, l, df * dg);
                }
                idx[c] += 1;
                if idx[c] < subsets[c].len() {
                    break;
                }
                idx[c] = 0;
                c += 1;
            }
        }
    }

    fn shuffle_term(&self, f: &XPoly, k: &[u32], g: &XPoly, l: &[u32], choice: &[&Vec<u32>]) -> XPoly {
        let rank = self.rank as usize;
        // complements
        let mut a_sets: Vec<Vec<u32>> = Vec::with_capacity(rank);
        let mut b_sets: Vec<Vec<u32>> = Vec::with_capacity(rank);
        let mut odd = false;
        for c in 0..rank {
            let a: Vec<u32> = choice[c].clone();
            let b: Vec<u32> = (1..=k[c] + l[c]).filter(|s| !a.contains(s)).collect();
            if self.skew == Some(c as u32 + 1) {
                let inv: usize = a.iter().map(|&x| b.iter().filter(|&&y| y < x).count()).sum();
                odd ^= inv % 2 == 1;
            }
            a_sets.push(a);
            b_sets.push(b);
        }
        let fr = f.rename(|v| if v.ns == Namespace::X { VarId::x(v.color, a_sets[(v.color - 1) as usize][(v.slot - 1) as usize]) } else { v });
        let gr = g.rename(|v| if v.ns == Namespace::X { VarId::x(v.color, b_sets[(v.color - 1) as usize][(v.slot - 1) as usize]) } else { v });
        // folding linear factors in one at a time keeps intermediates small
        let mut term = &fr * &gr;
        let mut sign = odd;
        for ci in 1..=self.rank {
            for cj in 1..=self.rank {
                let z = self.zeta(ci, cj);
                if z.is_one() {
                    continue;
                }
                for &sa in &a_sets[(ci - 1) as usize] {
                    for &sb in &b_sets[(cj - 1) as usize] {
                        let (xa, xb) = (VarId::x(ci, sa), VarId::x(cj, sb));
                        term = &term * &z.cross_numerator(xa, xb);
                        if ci > cj || (ci == cj && sa > sb) {
                            sign = !sign;
                        }
                    }
                }
            }
            if self.vandermonde_color(ci) && k[(ci - 1) as usize] > 0 && l[(ci - 1) as usize] > 0 {
                for set in [&a_sets[(ci - 1) as usize], &b_sets[(ci - 1) as usize]] {
                    for (p, &s) in set.iter().enumerate() {
                        for &t in &set[p + 1..] {
                            term = &term * &(&XPoly::var(VarId::x(ci, s)) - &XPoly::var(VarId::x(ci, t)));
                        }
                    }
                }
            }
        }
        if sign {
            term.neg()
        } else {
            term
        }
    }

    fn finish(&self, mut acc: XPoly, k: &[u32], l: &[u32], cleared: num_bigint::BigInt) -> Result<XPoly> {
        for ci in 1..=self.rank {
            let c = (ci - 1) as usize;
            if !self.vandermonde_color(ci) || k[c] == 0 || l[c] == 0 {
                continue;
            }
            let total = k[c] + l[c];
            for s in 1..=total {
                for t in s + 1..=total {
                    acc = acc
                        .divide_linear(VarId::x(ci, s), &XPoly::var(VarId::x(ci, t)))
                        .ok_or_else(|| Error::Internal("symmetrized sum not divisible by the Vandermonde factor".into()))?;
                }
            }
        }
        let mut norm = Rational::new(1.into(), cleared);
        for (&a, &b) in k.iter().zip(l) {
            norm *= Rational::new(crate::ring::factorial(a) * crate::ring::factorial(b), crate::ring::factorial(a + b));
        }
        Ok(acc.scale_rat(&norm))
    }
}

fn fact128(k: u32) -> u128 {
    (1..=k as u128).fold(1u128, |a, b| a.saturating_mul(b))
}

/// All `k`-subsets of `1..=n`, each sorted.
pub fn combinations(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k as usize);
    comb_rec(1, n, k, &mut cur, &mut out);
    out
}

fn comb_rec(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() as u32 == k {
        out.push(cur.clone());
        return;
    }
    let need = k - cur.len() as u32;
    for s in start..=n {
        if n - s + 1 < need {
            break;
        }
        cur.push(s);
        comb_rec(s + 1, n, k, cur, out);
        cur.pop();
    }
}

/// A graded element: grading and numerator over the standard pole denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShuffleElement {
    pub flavor: Flavor,
    pub grading: Vec<u32>,
    pub numerator: XPoly,
}

impl ShuffleElement {
    pub fn new(flavor: Flavor, grading: Vec<u32>, numerator: XPoly) -> Result<Self> {
        if grading.len() != flavor.rank() as usize {
            return Err(Error::Invalid(alloc::format!(
                "grading has {} entries, flavor {} has {} colors",
                grading.len(),
                flavor,
                flavor.rank()
            )));
        }
        for v in numerator.vars() {
            let ok = v.ns == Namespace::X
                && v.color >= 1
                && v.color <= flavor.rank()
                && v.slot >= 1
                && v.slot <= grading[(v.color - 1) as usize];
            if !ok {
                return Err(Error::Invalid(alloc::format!("variable {} outside grading {:?}", v.key(), grading)));
            }
        }
        Ok(ShuffleElement { flavor, grading, numerator })
    }

    pub fn zero(flavor: Flavor, grading: Vec<u32>) -> Self {
        ShuffleElement { flavor, grading, numerator: XPoly::zero() }
    }

    /// The unit, in grading zero.
    pub fn unit(flavor: Flavor) -> Self {
        ShuffleElement { flavor, grading: vec![0; flavor.rank() as usize], numerator: XPoly::one() }
    }

    /// `Ψ(e_{i,r}) = x_{i,1}^r`
    pub fn generator(flavor: Flavor, i: u32, r: i32) -> Result<Self> {
        flavor.check_color(i)?;
        if flavor.kind.is_yangian() && r < 0 {
            return Err(Error::Invalid("Yangian modes must be non-negative".into()));
        }
        let mut grading = vec![0; flavor.rank() as usize];
        grading[(i - 1) as usize] = 1;
        Ok(ShuffleElement { flavor, grading, numerator: XPoly::var_pow(VarId::x(i, 1), r) })
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.grading.iter().sum()
    }

    /// Parity for super kinds: `k_m mod 2`.
    pub fn parity(&self) -> bool {
        match self.flavor.skew_color() {
            Some(m) => self.grading[(m - 1) as usize] % 2 == 1,
            None => false,
        }
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch(alloc::format!("{} vs {}", self.flavor, other.flavor)));
        }
        if self.grading != other.grading {
            return Err(Error::Invalid(alloc::format!("grading {:?} vs {:?}", self.grading, other.grading)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() && self.flavor == other.flavor {
            return Ok(other.clone());
        }
        self.same_space(other)?;
        Ok(ShuffleElement { flavor: self.flavor, grading: self.grading.clone(), numerator: &self.numerator + &other.numerator })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&ParamPoly::int(-1)))
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        ShuffleElement { flavor: self.flavor, grading: self.grading.clone(), numerator: self.numerator.scale(c) }
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        ShuffleElement { flavor: self.flavor, grading: self.grading.clone(), numerator: self.numerator.scale_rat(c) }
    }

    pub fn pretty(&self) -> String {
        alloc::format!("{} {:?}: {}", self.flavor, self.grading, self.numerator.pretty(self.flavor.params()))
    }
}

/// `F ⋆ G`
pub fn shuffle_product(f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement> {
    if f.flavor != g.flavor {
        return Err(Error::FlavorMismatch(alloc::format!("{} vs {}", f.flavor, g.flavor)));
    }
    let num = f.flavor.rules().product(&f.numerator, &f.grading, &g.numerator, &g.grading)?;
    let grading = f.grading.iter().zip(&g.grading).map(|(a, b)| a + b).collect();
    Ok(ShuffleElement { flavor: f.flavor, grading, numerator: num })
}

/// Left-to-right product of a list of elements; the unit for an empty list.
pub fn shuffle_product_all(flavor: Flavor, factors: &[ShuffleElement]) -> Result<ShuffleElement> {
    let mut acc = ShuffleElement::unit(flavor);
    for f in factors {
        acc = shuffle_product(&acc, f)?;
    }
    Ok(acc)
}

/// `F ⋆ G − (−1)^{p(F)p(G)} λ G ⋆ F`, parities taken from the gradings.
pub fn q_bracket(f: &ShuffleElement, g: &ShuffleElement, lambda: &ParamPoly) -> Result<ShuffleElement> {
    q_bracket_with_parities(f, g, lambda, (f.parity(), g.parity()))
}

pub fn q_bracket_with_parities(
    f: &ShuffleElement,
    g: &ShuffleElement,
    lambda: &ParamPoly,
    parities: (bool, bool),
) -> Result<ShuffleElement> {
    let fg = shuffle_product(f, g)?;
    let gf = shuffle_product(g, f)?;
    let sign = f.flavor.kind.is_super() && parities.0 && parities.1;
    let c = if sign { -lambda } else { lambda.clone() };
    fg.sub(&gf.scale(&c))
}

/// Symmetry of the numerator and, for Yangian kinds, polynomiality.
pub fn check_pole(f: &ShuffleElement) -> bool {
    if ShuffleElement::new(f.flavor, f.grading.clone(), f.numerator.clone()).is_err() {
        return false;
    }
    if f.flavor.kind.is_yangian() && f.numerator.min_exponent().is_some_and(|e| e < 0) {
        return false;
    }
    for (ci, &k) in f.grading.iter().enumerate() {
        let color = ci as u32 + 1;
        let vars: Vec<VarId> = (1..=k).map(|s| VarId::x(color, s)).collect();
        if !f.numerator.is_symmetric_in(&vars, f.flavor.skew_color() == Some(color)) {
            return false;
        }
    }
    true
}

/// The variable a wheel pattern collapses onto.
pub const WHEEL_VAR: VarId = VarId::z(1, 1);

/// One wheel pattern: colors with the image of each role in terms of `t`.
#[derive(Clone, Debug)]
pub struct WheelPattern {
    pub roles: Vec<(u32, Image)>,
}

fn trig_image(w: &ParamPoly, e: i32) -> Image {
    Image::scaled(w.pow(e.unsigned_abs()).inv_if(e < 0), WHEEL_VAR)
}

fn yang_image(half_steps: i32) -> Image {
    Image::shifted(WHEEL_VAR, ParamPoly::monomial([1, 0], ratio(half_steps as i64, 2)))
}

trait InvIf {
    fn inv_if(self, b: bool) -> Self;
}

impl InvIf for ParamPoly {
    fn inv_if(self, b: bool) -> Self {
        if b {
            self.inv_monomial().expect("monomial")
        } else {
            self
        }
    }
}

/// All wheel patterns of a flavor, before slot choices.
pub fn wheel_patterns(flavor: &Flavor) -> Vec<WheelPattern> {
    let rank = flavor.rank();
    let mut out = Vec::new();
    for i in 1..=rank {
        if flavor.skew_color() == Some(i) {
            continue;
        }
        let sigma = if flavor.kind.is_super() && i > flavor.m { -1 } else { 1 };
        for j in [i.wrapping_sub(1), i + 1] {
            if j == 0 || j > rank {
                continue;
            }
            // roles: (i, r1), (j, s), (i, r2) with x_{r2} = t
            let roles = match flavor.kind {
                FlavorKind::TrigA | FlavorKind::TrigSuper => {
                    let w = ParamPoly::v();
                    vec![(i, trig_image(&w, 2 * sigma)), (j, trig_image(&w, sigma)), (i, Image::var(WHEEL_VAR))]
                }
                FlavorKind::TwoParam => {
                    let w = ParamPoly::u_pow(1, -1);
                    vec![(i, trig_image(&w, 2)), (j, trig_image(&w, 1)), (i, Image::var(WHEEL_VAR))]
                }
                FlavorKind::YangA | FlavorKind::YangSuper => {
                    vec![(i, yang_image(2 * sigma)), (j, yang_image(sigma)), (i, Image::var(WHEEL_VAR))]
                }
            };
            out.push(WheelPattern { roles });
        }
    }
    if let Some(m) = flavor.skew_color() {
        if m >= 2 && m < rank {
            let roles = if flavor.kind.is_yangian() {
                vec![(m - 1, Image::var(WHEEL_VAR)), (m, yang_image(-1)), (m + 1, Image::var(WHEEL_VAR)), (m, yang_image(1))]
            } else {
                let v = ParamPoly::v();
                vec![(m - 1, Image::var(WHEEL_VAR)), (m, trig_image(&v, -1)), (m + 1, Image::var(WHEEL_VAR)), (m, trig_image(&v, 1))]
            };
            out.push(WheelPattern { roles });
        }
    }
    out
}

/// Every wheel substitution kills the numerator.
pub fn check_wheel(f: &ShuffleElement) -> bool {
    wheel_failure(f).is_none()
}

/// The first wheel substitution that does not vanish, as `(color, slot)` roles.
pub fn wheel_failure(f: &ShuffleElement) -> Option<Vec<(u32, u32)>> {
    // a symmetric numerator vanishes on one slot assignment iff on all of them
    let symmetric = f.grading.iter().enumerate().all(|(ci, &k)| {
        let color = ci as u32 + 1;
        let vars: Vec<VarId> = (1..=k).map(|s| VarId::x(color, s)).collect();
        f.numerator.is_symmetric_in(&vars, f.flavor.skew_color() == Some(color))
    });
    for pat in wheel_patterns(&f.flavor) {
        let mut slots = vec![0u32; pat.roles.len()];
        if let Some(bad) = wheel_rec(f, &pat, 0, &mut slots, symmetric) {
            return Some(bad);
        }
    }
    None
}

fn wheel_rec(f: &ShuffleElement, pat: &WheelPattern, pos: usize, slots: &mut Vec<u32>, first_only: bool) -> Option<Vec<(u32, u32)>> {
    if pos == pat.roles.len() {
        let mut a = BTreeMap::new();
        for ((c, img), &s) in pat.roles.iter().zip(slots.iter()) {
            a.insert(VarId::x(*c, s), img.clone());
        }
        if f.numerator.substitute_partial(&a).is_zero() {
            return None;
        }
        return Some(pat.roles.iter().zip(slots.iter()).map(|((c, _), &s)| (*c, s)).collect());
    }
    let color = pat.roles[pos].0;
    for s in 1..=f.grading[(color - 1) as usize] {
        let taken = pat.roles[..pos].iter().zip(slots.iter()).any(|((c, _), &t)| *c == color && t == s);
        if taken {
            continue;
        }
        slots[pos] = s;
        if let Some(bad) = wheel_rec(f, pat, pos + 1, slots, first_only) {
            return Some(bad);
        }
        if first_only {
            break;
        }
    }
    None
}

/// Multiply the numerator by `∏_r (1 − x_{l,r}^{-1})`.
pub fn shift_map(f: &ShuffleElement, l: u32) -> Result<ShuffleElement> {
    if f.flavor.kind != FlavorKind::TrigA {
        return Err(Error::FlavorMismatch("shift map is defined for trig-a only".into()));
    }
    f.flavor.check_color(l)?;
    let mut num = f.numerator.clone();
    for r in 1..=f.grading[(l - 1) as usize] {
        num = &num * &(&XPoly::one() - &XPoly::var_pow(VarId::x(l, r), -1));
    }
    Ok(ShuffleElement { flavor: f.flavor, grading: f.grading.clone(), numerator: num })
}

/// Two-parameter element at `u1 u2^{-1} ↦ v`, `u1 u2 ↦ 1`, as a trig-a element.
pub fn degenerate_two_param(f: &ShuffleElement) -> Result<ShuffleElement> {
    if f.flavor.kind != FlavorKind::TwoParam {
        return Err(Error::FlavorMismatch("degeneration starts from trig-2p".into()));
    }
    // u1^a u2^b = (u1/u2)^{(a-b)/2} (u1 u2)^{(a+b)/2}
    let num = f.numerator.map_coeffs(|c| {
        c.map_exponents(|e| {
            if (e[0] - e[1]) % 2 != 0 {
                return Err(Error::Invalid(alloc::format!("u1^{} u2^{} has no image", e[0], e[1])));
            }
            Ok([(e[0] - e[1]) / 2, 0])
        })
    })?;
    Ok(ShuffleElement { flavor: Flavor::trig_a(f.flavor.n), grading: f.grading.clone(), numerator: num })
}

/// `∏ x^{exps}` over the x-variables of one color.
pub fn color_monomial(color: u32, exps: &[i32]) -> XPoly {
    let m: Mono = exps.iter().enumerate().filter(|(_, &e)| e != 0).map(|(s, &e)| (VarId::x(color, s as u32 + 1), e)).collect();
    XPoly::from_mono(m, &ParamPoly::one())
}
