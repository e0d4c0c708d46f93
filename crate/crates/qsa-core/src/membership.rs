//! Integrality and "good" predicates, rank-1 decompositions and the general
//! decomposition into ordered PBWD monomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::multipoly::{orbit_expand, Mono, VarId, XPoly};
use crate::pbwd::{degree_vectors, positive_roots, DegreeVector, PbwdChoice, PbwdMonomial, PsiCache, Root};
use crate::ring::{ParamFrac, ParamPoly, ParamSet};
use crate::shuffle::{wheel_failure, Flavor, FlavorKind, Rules, ShuffleElement, Zeta};
use crate::special::{factor_b, partitions, phi_poly, reduced_phi, t_factorial, varpi, SpecPlan};

/// The rank-1 shuffle algebras that roots collapse to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// `ζ(z) = (z − v^{-2})/(z − 1)`
    TrigSymMinus,
    /// `ζ(z) = (z − v^2)/(z − 1)`
    TrigSymPlus,
    /// `ζ(z) = (z − u1^{-2}u2^2)/(z − 1)`
    TwoParamSym,
    /// `ζ = 1`, skew-symmetric
    Skew,
    /// `ζ(z) = (z + ħ)/z`
    YangSym,
    /// `ζ(z) = (z − ħ)/z`
    YangSymFlip,
}

impl Kernel {
    pub fn zeta(self) -> Zeta {
        let one = ParamPoly::one();
        match self {
            Kernel::TrigSymMinus => Zeta::Trig { scale: one, kappa: ParamPoly::v_pow(-2) },
            Kernel::TrigSymPlus => Zeta::Trig { scale: one, kappa: ParamPoly::v_pow(2) },
            Kernel::TwoParamSym => Zeta::Trig { scale: one, kappa: ParamPoly::u_pow(-2, 2) },
            Kernel::Skew => Zeta::One,
            Kernel::YangSym => Zeta::Rational { eta: ParamPoly::hbar() },
            Kernel::YangSymFlip => Zeta::Rational { eta: -&ParamPoly::hbar() },
        }
    }

    pub fn skew(self) -> bool {
        self == Kernel::Skew
    }

    pub fn rules(self) -> Rules {
        Rules::rank1(self.zeta(), self.skew())
    }

    pub fn name(self) -> &'static str {
        match self {
            Kernel::TrigSymMinus => "trig-sym-minus",
            Kernel::TrigSymPlus => "trig-sym-plus",
            Kernel::TwoParamSym => "trig-2p-sym",
            Kernel::Skew => "skew",
            Kernel::YangSym => "yang-sym",
            Kernel::YangSymFlip => "yang-sym-flip",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        [
            Kernel::TrigSymMinus,
            Kernel::TrigSymPlus,
            Kernel::TwoParamSym,
            Kernel::Skew,
            Kernel::YangSym,
            Kernel::YangSymFlip,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::Invalid(alloc::format!("unknown kernel {:?}", s)))
    }

    /// `x^{r_1} ⋆ ⋯ ⋆ x^{r_k}` in `x_{1,1..k}`.
    pub fn power(self, modes: &[i32]) -> Result<XPoly> {
        let rules = self.rules();
        let mut acc = XPoly::one();
        for (n, &r) in modes.iter().enumerate() {
            acc = rules.product(&acc, &[n as u32], &XPoly::var_pow(VarId::x(1, 1), r), &[1])?;
        }
        Ok(acc)
    }
}

/// Sort key for exponent tuples: total degree, then from the last entry.
fn rank1_key(t: &[i32]) -> (i64, Vec<i32>) {
    (t.iter().map(|&e| e as i64).sum(), t.iter().rev().copied().collect())
}

/// `f = Σ c_r · x^{r_1} ⋆ ⋯ ⋆ x^{r_k}` in the kernel's rank-1 algebra.
///
/// Tuples are non-decreasing (strictly increasing for [`Kernel::Skew`]).
pub fn decompose_rank1(f: &XPoly, k: u32, kernel: Kernel) -> Result<Vec<(Vec<i32>, ParamFrac)>> {
    let vars: Vec<VarId> = (1..=k).map(|s| VarId::x(1, s)).collect();
    let skew = kernel.skew();
    let expand = |p: &XPoly| -> Result<BTreeMap<(i64, Vec<i32>), ParamPoly>> {
        Ok(orbit_expand(p, &vars, skew)?.into_iter().map(|(t, c)| (rank1_key(&t), c)).collect())
    };
    let mut g = expand(f)?;
    let mut s = ParamPoly::one();
    let mut out = Vec::new();
    while let Some((key, lc_g)) = g.iter().next_back().map(|(a, b)| (a.clone(), b.clone())) {
        let tuple: Vec<i32> = key.1.iter().rev().copied().collect();
        let kpow = expand(&kernel.power(&tuple)?)?;
        let lc_k = kpow
            .get(&key)
            .cloned()
            .ok_or_else(|| Error::Internal(alloc::format!("rank-1 power {:?} misses its own orbit", tuple)))?;
        if kpow.keys().next_back() != Some(&key) {
            return Err(Error::Internal(alloc::format!("rank-1 power {:?} has a larger orbit", tuple)));
        }
        out.push((tuple, ParamFrac::new(lc_g.clone(), &s * &lc_k)?));
        let mut next: BTreeMap<(i64, Vec<i32>), ParamPoly> = BTreeMap::new();
        for (t, c) in &g {
            next.insert(t.clone(), c * &lc_k);
        }
        for (t, c) in kpow {
            let e = next.entry(t).or_insert_with(ParamPoly::zero);
            *e = &*e - &(&c * &lc_g);
        }
        next.retain(|_, c| !c.is_zero());
        s = &s * &lc_k;
        let mut content = s.clone();
        for c in next.values() {
            content = content.gcd(c);
        }
        if !content.is_one() && !content.is_zero() {
            for c in next.values_mut() {
                *c = c.divide_exact(&content)?.expect("content divides");
            }
            s = s.divide_exact(&content)?.expect("content divides");
        }
        g = next;
    }
    Ok(out)
}

/// `Σ coeff · Ψ(e_h)` together with the choice used.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub choice: PbwdChoice,
    pub entries: Vec<(PbwdMonomial, ParamFrac)>,
}

impl Decomposition {
    pub fn coeff(&self, h: &PbwdMonomial) -> ParamFrac {
        self.entries.iter().find(|e| &e.0 == h).map(|e| e.1.clone()).unwrap_or_else(ParamFrac::zero)
    }

    /// `Σ coeff · Ψ(e_h)` as `numerator / denominator`.
    pub fn rebuild(&self, flavor: &Flavor, grading: &[u32]) -> Result<(ShuffleElement, ParamPoly)> {
        self.rebuild_with(flavor, grading, &mut PsiCache::new(self.choice.clone()))
    }

    pub fn rebuild_with(&self, flavor: &Flavor, grading: &[u32], cache: &mut PsiCache) -> Result<(ShuffleElement, ParamPoly)> {
        let mut acc = Frac::zero(ShuffleElement::zero(*flavor, grading.to_vec()));
        for (h, c) in &self.entries {
            acc.sub_scaled(&cache.get(h)?, &-c)?;
        }
        Ok((acc.num, acc.den))
    }
}

/// `num / den` with an element numerator.
struct Frac {
    num: ShuffleElement,
    den: ParamPoly,
}

impl Frac {
    fn zero(num: ShuffleElement) -> Self {
        Frac { num, den: ParamPoly::one() }
    }

    /// `self − c · e`
    fn sub_scaled(&mut self, e: &ShuffleElement, c: &ParamFrac) -> Result<()> {
        let num = self.num.scale(c.den()).sub(&e.scale(&(c.num() * &self.den)))?;
        let den = &self.den * c.den();
        let g = num.numerator.content().gcd(&den);
        if g.is_zero() || num.is_zero() {
            self.num = num;
            self.den = ParamPoly::one();
            return Ok(());
        }
        self.num = ShuffleElement { numerator: num.numerator.divide_params(&g).expect("content divides"), ..num };
        self.den = den.divide_exact(&g)?.expect("gcd divides");
        Ok(())
    }
}

/// Block order on `y`-monomials: roots in order; inside a root total degree,
/// then `y_{β,1}, y_{β,2}, …` lexicographically.
fn block_key(m: &Mono, layout: &[(u32, u32)]) -> Vec<i64> {
    let mut key = Vec::new();
    for &(color, n) in layout {
        let exps: Vec<i64> = (1..=n).map(|s| crate::multipoly::mono_exp(m, VarId::y(color, s)) as i64).collect();
        key.push(exps.iter().sum());
        key.extend(exps);
    }
    key
}

fn lead(f: &XPoly, layout: &[(u32, u32)]) -> Option<(Vec<i64>, Mono, ParamPoly)> {
    f.groups().into_iter().map(|(m, c)| (block_key(&m, layout), m, c)).max_by(|a, b| a.0.cmp(&b.0))
}

fn layout(d: &DegreeVector) -> Vec<(u32, u32)> {
    d.counts.iter().enumerate().filter(|(_, n)| **n > 0).map(|(i, &n)| (i as u32 + 1, n)).collect()
}

/// Modes of the reference monomial of degree `d`: all zero, or `0, 1, …` on odd roots.
fn base_modes(root: &Root, n: u32) -> Vec<i32> {
    if root.parity {
        (0..n as i32).rev().collect()
    } else {
        vec![0; n as usize]
    }
}

struct Decomposer<'a> {
    flavor: Flavor,
    cache: &'a mut PsiCache,
}

impl Decomposer<'_> {
    fn psi(&mut self, h: &PbwdMonomial) -> Result<ShuffleElement> {
        self.cache.get(h)
    }

    /// Leading-term elimination of `φ_d(num)/den` against `{φ_d(Ψ(e_h))}`.
    fn solve_degree(&mut self, d: &DegreeVector, num: &XPoly, den: &ParamPoly) -> Result<Vec<(PbwdMonomial, ParamFrac)>> {
        let flavor = self.flavor;
        let plan = SpecPlan::canonical(&flavor, d);
        let lay = layout(d);
        let entries = d.entries(&flavor);
        let mut g = phi_poly(&flavor, num, &plan)?;
        if g.is_zero() {
            return Ok(Vec::new());
        }
        let mut h0 = PbwdMonomial::new();
        for (b, n) in &entries {
            for r in base_modes(b, *n) {
                h0.add(*b, r, 1);
            }
        }
        let k0 = phi_poly(&flavor, &self.psi(&h0)?.numerator, &plan)?;
        let (l0, _, _) = lead(&k0, &lay).ok_or_else(|| Error::Internal("reference monomial specializes to zero".into()))?;
        let mut s = den.clone();
        let mut out = Vec::new();
        let mut guard = 0usize;
        while let Some((e, _, lc_g)) = lead(&g, &lay) {
            guard += 1;
            if guard > 100_000 {
                return Err(Error::Internal("decomposition does not terminate".into()));
            }
            let h = self.monomial_for(d, &entries, &e, &l0)?;
            let k = phi_poly(&flavor, &self.psi(&h)?.numerator, &plan)?;
            let (ek, _, lc_k) = lead(&k, &lay).ok_or_else(|| Error::Internal("basis element specializes to zero".into()))?;
            if ek != e {
                return Err(Error::NonExact(alloc::format!(
                    "leading term at d = {:?} is not reached by any PBWD monomial; the element is not in the shuffle algebra",
                    d.counts
                )));
            }
            out.push((h, ParamFrac::new(lc_g.clone(), &s * &lc_k)?));
            g = &g.scale(&lc_k) - &k.scale(&lc_g);
            s = &s * &lc_k;
            let c = g.content().gcd(&s);
            if !c.is_zero() && !c.is_one() {
                g = g.divide_params(&c).expect("content divides");
                s = s.divide_exact(&c)?.expect("gcd divides");
            }
        }
        Ok(out)
    }

    fn monomial_for(&self, d: &DegreeVector, entries: &[(Root, u32)], e: &[i64], l0: &[i64]) -> Result<PbwdMonomial> {
        let mut h = PbwdMonomial::new();
        let mut pos = 0;
        for (b, n) in entries {
            pos += 1;
            let base = base_modes(b, *n);
            let mut modes = Vec::with_capacity(*n as usize);
            for s in 0..*n as usize {
                let r = e[pos + s] - l0[pos + s] + base[s] as i64;
                modes.push(i32::try_from(r).map_err(|_| Error::Internal("mode out of range".into()))?);
            }
            pos += *n as usize;
            let sorted = modes.windows(2).all(|w| if b.parity { w[0] > w[1] } else { w[0] >= w[1] });
            if !sorted || (self.flavor.kind.is_yangian() && modes.iter().any(|&r| r < 0)) {
                return Err(Error::NonExact(alloc::format!(
                    "leading term at d = {:?} gives modes {:?} on [{};{}]; the element is not in the shuffle algebra",
                    d.counts,
                    modes,
                    b.j,
                    b.i
                )));
            }
            for r in modes {
                h.add(*b, r, 1);
            }
        }
        Ok(h)
    }
}

/// Options for [`decompose_with`].
#[derive(Clone, Copy, Debug)]
pub struct DecomposeOptions {
    pub verify: bool,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions { verify: true }
    }
}

/// Coefficients of `F` in the ordered PBWD basis of `choice`.
pub fn decompose(f: &ShuffleElement, choice: &PbwdChoice) -> Result<Decomposition> {
    decompose_with(f, choice, DecomposeOptions::default())
}

pub fn decompose_with(f: &ShuffleElement, choice: &PbwdChoice, opts: DecomposeOptions) -> Result<Decomposition> {
    decompose_cached(f, &mut PsiCache::new(choice.clone()), opts)
}

/// [`decompose_with`] reusing the images stored in `cache`.
pub fn decompose_cached(f: &ShuffleElement, cache: &mut PsiCache, opts: DecomposeOptions) -> Result<Decomposition> {
    let flavor = f.flavor;
    let choice = &cache.choice().clone();
    if choice.flavor != flavor {
        return Err(Error::FlavorMismatch(alloc::format!("choice for {} used with {}", choice.flavor, flavor)));
    }
    choice.validate()?;
    let mut entries: Vec<(PbwdMonomial, ParamFrac)> = Vec::new();
    if f.is_zero() {
        return Ok(Decomposition { choice: choice.clone(), entries });
    }
    if let Some(bad) = wheel_failure(f) {
        return Err(Error::NonExact(alloc::format!(
            "the numerator misses the wheel condition at {:?}; the element is not in the shuffle algebra",
            bad
        )));
    }
    if f.degree() == 0 {
        let c = f.numerator.as_constant().expect("grading zero is constant");
        entries.push((PbwdMonomial::new(), ParamFrac::from_poly(c)));
        return Ok(Decomposition { choice: choice.clone(), entries });
    }
    let mut dec = Decomposer { flavor, cache };
    let mut cur = Frac::zero(f.clone());
    for d in degree_vectors(&flavor, &f.grading) {
        if cur.num.is_zero() {
            break;
        }
        let found = dec.solve_degree(&d, &cur.num.numerator, &cur.den)?;
        for (h, c) in found {
            let e = dec.psi(&h)?;
            cur.sub_scaled(&e, &c)?;
            entries.push((h, c));
        }
    }
    if !cur.num.is_zero() {
        return Err(Error::NonExact(String::from("a remainder survives every degree vector; the element is not in the shuffle algebra")));
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let out = Decomposition { choice: choice.clone(), entries };
    if opts.verify {
        let (num, den) = out.rebuild_with(&flavor, &f.grading, dec.cache)?;
        if num.numerator != f.numerator.scale(&den) {
            return Err(Error::Internal(String::from("decomposition does not rebuild the input")));
        }
    }
    Ok(out)
}

/// Whether every coefficient over the rescaled basis `ẽ_h` is a Laurent polynomial.
pub fn is_integral_by_basis(f: &ShuffleElement, choice: &PbwdChoice) -> Result<bool> {
    let dec = decompose(f, choice)?;
    let n = f.flavor.normalizer();
    for (h, c) in &dec.entries {
        if !c.div_poly(&n.pow(h.size()))?.as_poly().is_some_and(|p| coeff_in_base_ring(&f.flavor, &p)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ħ` is a polynomial variable; `v`, `u1`, `u2` are Laurent.
fn coeff_in_base_ring(flavor: &Flavor, c: &ParamPoly) -> bool {
    flavor.params() != ParamSet::Hbar || c.terms().iter().all(|(e, _)| e[0] >= 0)
}

/// Whether `d` divides `p` in the flavor's coefficient ring.
fn divides(flavor: &Flavor, p: &XPoly, d: &ParamPoly) -> bool {
    p.divide_params(d)
        .is_some_and(|q| flavor.params() != ParamSet::Hbar || q.terms().iter().all(|t| t.pexp[0] >= 0))
}

/// Why an element failed the integrality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegralFailure {
    /// The numerator is not divisible by the normalizer to the power `|k|`.
    Candidate,
    /// `φ_d(F)` is not divisible by `A·B`.
    Reduced { d: Vec<u32>, reason: String },
    /// `Υ_{d,t}(F)` is not divisible by `∏[t]_v!`.
    Factorial { d: Vec<u32>, t: Vec<Vec<u32>>, divisor: ParamPoly },
    /// A basis coefficient is not a Laurent polynomial.
    Basis,
}

/// Every `t` family for `d`, up to reordering inside a root.
pub fn t_families(d: &DegreeVector) -> Vec<Vec<Vec<u32>>> {
    let mut out: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
    for &n in &d.counts {
        let mut next = Vec::new();
        for prefix in &out {
            for p in partitions(n) {
                let mut q = prefix.clone();
                q.push(p);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Integrality test; `None` means integral.
pub fn integral_failure(f: &ShuffleElement) -> Result<Option<IntegralFailure>> {
    let flavor = f.flavor;
    match flavor.kind {
        FlavorKind::YangA | FlavorKind::YangSuper => {
            let ok = divides(&flavor, &f.numerator, &flavor.normalizer().pow(f.degree()));
            Ok((!ok).then_some(IntegralFailure::Candidate))
        }
        FlavorKind::TwoParam | FlavorKind::TrigSuper => {
            let ok = is_integral_by_basis(f, &PbwdChoice::default_for(flavor))?;
            Ok((!ok).then_some(IntegralFailure::Basis))
        }
        FlavorKind::TrigA => {
            if f.numerator.divide_params(&flavor.normalizer().pow(f.degree())).is_none() {
                return Ok(Some(IntegralFailure::Candidate));
            }
            for d in degree_vectors(&flavor, &f.grading) {
                let red = match reduced_phi(f, &d, false) {
                    Ok(r) => r,
                    Err(Error::NonExact(reason)) => return Ok(Some(IntegralFailure::Reduced { d: d.counts, reason })),
                    Err(e) => return Err(e),
                };
                for t in t_families(&d) {
                    let divisor = t_factorial(&t);
                    if divisor.is_one() {
                        continue;
                    }
                    let ups = varpi(&flavor, &red, &d, &t)?;
                    if ups.divide_params(&divisor).is_none() {
                        return Ok(Some(IntegralFailure::Factorial { d: d.counts, t, divisor }));
                    }
                }
            }
            Ok(None)
        }
    }
}

pub fn is_integral(f: &ShuffleElement) -> Result<bool> {
    Ok(integral_failure(f)?.is_none())
}

/// The first `d` at which `φ_d(F)` misses the required normalizer power.
pub fn good_failure(f: &ShuffleElement) -> Result<Option<Vec<u32>>> {
    let flavor = f.flavor;
    if matches!(flavor.kind, FlavorKind::TwoParam | FlavorKind::TrigSuper) {
        return Err(Error::Unsupported(alloc::format!("the good predicate is not implemented for {}", flavor)));
    }
    for d in degree_vectors(&flavor, &f.grading) {
        let p = phi_poly(&flavor, &f.numerator, &SpecPlan::canonical(&flavor, &d))?;
        if !divides(&flavor, &p, &flavor.normalizer().pow(d.spread(&flavor))) {
            return Ok(Some(d.counts));
        }
    }
    Ok(None)
}

pub fn is_good(f: &ShuffleElement) -> Result<bool> {
    Ok(good_failure(f)?.is_none())
}

/// All `h` of the given grading with modes in `[lo, hi]`.
pub fn monomials_in_window(flavor: &Flavor, grading: &[u32], lo: i32, hi: i32) -> Vec<PbwdMonomial> {
    let items: Vec<(Root, i32)> =
        positive_roots(flavor).into_iter().flat_map(|b| (lo..=hi).map(move |r| (b, r))).collect();
    let mut out = Vec::new();
    let mut rest = grading.to_vec();
    window_rec(flavor, &items, 0, &mut rest, &mut PbwdMonomial::new(), &mut out);
    out
}

fn window_rec(
    flavor: &Flavor,
    items: &[(Root, i32)],
    idx: usize,
    rest: &mut Vec<u32>,
    cur: &mut PbwdMonomial,
    out: &mut Vec<PbwdMonomial>,
) {
    if rest.iter().all(|&x| x == 0) {
        out.push(cur.clone());
        return;
    }
    if idx == items.len() {
        return;
    }
    let (b, r) = items[idx];
    if flavor.kind.is_yangian() && r < 0 {
        window_rec(flavor, items, idx + 1, rest, cur, out);
        return;
    }
    let mut max = (b.j..=b.i).map(|c| rest[(c - 1) as usize]).min().unwrap_or(0);
    if b.parity {
        max = max.min(1);
    }
    for m in 0..=max {
        for c in b.j..=b.i {
            rest[(c - 1) as usize] -= m;
        }
        let saved = cur.clone();
        cur.add(b, r, m);
        window_rec(flavor, items, idx + 1, rest, cur, out);
        *cur = saved;
        for c in b.j..=b.i {
            rest[(c - 1) as usize] += m;
        }
    }
}

/// Outcome of a linear independence check.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub monomials: Vec<PbwdMonomial>,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// `Σ c_h Ψ(e_h) = 0` when the rank is deficient.
    pub kernel: Option<Vec<ParamFrac>>,
}

impl Certificate {
    pub fn full_rank(&self) -> bool {
        self.rank == self.monomials.len()
    }
}

/// Exact rank of `{Ψ(e_h)}` over the fraction field.
pub fn independence_certificate(flavor: &Flavor, grading: &[u32], lo: i32, hi: i32, choice: &PbwdChoice) -> Result<Certificate> {
    let monomials = monomials_in_window(flavor, grading, lo, hi);
    if choice.flavor != *flavor {
        return Err(Error::FlavorMismatch(alloc::format!("choice for {} used with {}", choice.flavor, flavor)));
    }
    let mut cache = PsiCache::new(choice.clone());
    let images: Vec<XPoly> = monomials.iter().map(|h| cache.get(h).map(|e| e.numerator)).collect::<Result<_>>()?;
    let mut index: BTreeMap<Mono, usize> = BTreeMap::new();
    for p in &images {
        for (m, _) in p.groups() {
            let n = index.len();
            index.entry(m).or_insert(n);
        }
    }
    let rows = index.len();
    let cols = monomials.len();
    let mut mat = vec![vec![ParamFrac::zero(); cols]; rows];
    for (j, p) in images.iter().enumerate() {
        for (m, c) in p.groups() {
            mat[index[&m]][j] = ParamFrac::from_poly(c);
        }
    }
    let (rank, pivots) = row_reduce(&mut mat, cols);
    let kernel = (rank < cols).then(|| {
        let free = (0..cols).find(|c| !pivots.contains(c)).expect("a free column exists");
        let mut vec = vec![ParamFrac::zero(); cols];
        vec[free] = ParamFrac::one();
        for (row, &pc) in pivots.iter().enumerate() {
            vec[pc] = -&mat[row][free];
        }
        vec
    });
    Ok(Certificate { monomials, rows, cols, rank, kernel })
}

/// Reduced row echelon form in place; returns the rank and pivot columns.
#[allow(clippy::needless_range_loop)]
fn row_reduce(mat: &mut [Vec<ParamFrac>], cols: usize) -> (usize, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..mat.len()).find(|&r| !mat[r][col].is_zero()) else { continue };
        mat.swap(row, p);
        let inv = mat[row][col].recip().expect("nonzero pivot");
        for c in col..cols {
            mat[row][c] = &mat[row][c] * &inv;
        }
        for r in 0..mat.len() {
            if r != row && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..cols {
                    let sub = &f * &mat[row][c];
                    mat[r][c] = &mat[r][c] - &sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (row, pivots)
}

/// `B`-factors in readable form, for diagnostics.
pub fn describe_factor_b(flavor: &Flavor, d: &DegreeVector, printed: bool) -> Vec<String> {
    factor_b(flavor, d, printed)
        .into_iter()
        .map(|(a, b, e, n)| alloc::format!("({} - v^{}*{})^{}", a.key(), e, b.key(), n))
        .collect()
}
