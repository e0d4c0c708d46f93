//! Positive roots, PBWD root vectors built from iterated q-brackets, and
//! their images in the shuffle algebra.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ring::ParamPoly;
use crate::shuffle::{q_bracket, shuffle_product, Flavor, FlavorKind, ShuffleElement};

/// Interval root `α_j + … + α_i`. Ordered by `(j, i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub j: u32,
    pub i: u32,
    pub parity: bool,
}

impl Root {
    pub fn new(flavor: &Flavor, j: u32, i: u32) -> Result<Self> {
        if j == 0 || j > i || i > flavor.rank() {
            return Err(Error::Invalid(alloc::format!("[{};{}] is not a positive root of {}", j, i, flavor)));
        }
        let parity = flavor.skew_color().is_some_and(|m| j <= m && m <= i);
        Ok(Root { j, i, parity })
    }

    pub fn contains(&self, c: u32) -> bool {
        self.j <= c && c <= self.i
    }

    /// `i(β) − j(β)`
    pub fn spread(&self) -> u32 {
        self.i - self.j
    }

    pub fn grading(&self, rank: u32) -> Vec<u32> {
        (1..=rank).map(|c| self.contains(c) as u32).collect()
    }
}

/// All positive roots in increasing order.
pub fn positive_roots(flavor: &Flavor) -> Vec<Root> {
    let r = flavor.rank();
    let mut out = Vec::new();
    for j in 1..=r {
        for i in j..=r {
            out.push(Root::new(flavor, j, i).expect("interval in range"));
        }
    }
    out
}

/// Position of `β` in [`positive_roots`].
pub fn root_index(flavor: &Flavor, root: &Root) -> usize {
    let r = flavor.rank() as usize;
    let (j, i) = (root.j as usize, root.i as usize);
    // roots with smaller j come first: Σ_{j'<j} (r − j' + 1)
    (1..j).map(|jj| r - jj + 1).sum::<usize>() + (i - j)
}

/// Total order on the modes of one root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ModeOrder {
    #[default]
    Ascending,
    Descending,
}

impl ModeOrder {
    pub fn cmp(self, a: i32, b: i32) -> Ordering {
        match self {
            ModeOrder::Ascending => a.cmp(&b),
            ModeOrder::Descending => b.cmp(&a),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModeOrder::Ascending => "ascending",
            ModeOrder::Descending => "descending",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "ascending" => Ok(ModeOrder::Ascending),
            "descending" => Ok(ModeOrder::Descending),
            _ => Err(Error::Invalid(alloc::format!("unknown mode order {:?}", s))),
        }
    }
}

/// How `e_β(r)` is built: colors in bracket order, which factor carries `r`
/// (the others get `offsets`), and the bracket parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootChoice {
    pub seq: Vec<u32>,
    pub carrier: usize,
    pub offsets: Vec<i32>,
    pub lambdas: Vec<ParamPoly>,
    pub order: ModeOrder,
}

impl RootChoice {
    /// Modes `(r_1, …, r_p)` with `Σ r_t = r + Σ offsets`.
    pub fn modes(&self, r: i32) -> Vec<i32> {
        self.offsets.iter().enumerate().map(|(t, &o)| if t == self.carrier { o + r } else { o }).collect()
    }
}

/// One [`RootChoice`] per positive root, in root order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwdChoice {
    pub flavor: Flavor,
    pub roots: Vec<RootChoice>,
}

impl PbwdChoice {
    /// `[⋯[[e_{j,r}, e_{j+1,0}]_λ, e_{j+2,0}]_λ, ⋯, e_{i,0}]_λ` with the
    /// flavor's customary λ.
    pub fn default_for(flavor: Flavor) -> Self {
        let roots = positive_roots(&flavor)
            .iter()
            .map(|b| {
                let seq: Vec<u32> = (b.j..=b.i).collect();
                let lambdas = (b.j + 1..=b.i).map(|l| default_lambda(&flavor, l)).collect();
                RootChoice { offsets: vec![0; seq.len()], seq, carrier: 0, lambdas, order: ModeOrder::Ascending }
            })
            .collect();
        PbwdChoice { flavor, roots }
    }

    pub fn root(&self, root: &Root) -> &RootChoice {
        &self.roots[root_index(&self.flavor, root)]
    }

    pub fn root_mut(&mut self, root: &Root) -> &mut RootChoice {
        let idx = root_index(&self.flavor, root);
        &mut self.roots[idx]
    }

    /// Structural checks; nonzeroness is checked when elements are built.
    pub fn validate(&self) -> Result<()> {
        let roots = positive_roots(&self.flavor);
        if roots.len() != self.roots.len() {
            return Err(Error::Invalid("choice does not list every positive root".into()));
        }
        for (b, rc) in roots.iter().zip(&self.roots) {
            let mut s = rc.seq.clone();
            s.sort_unstable();
            if s != (b.j..=b.i).collect::<Vec<_>>() {
                return Err(Error::Invalid(alloc::format!("sequence {:?} does not sum to [{};{}]", rc.seq, b.j, b.i)));
            }
            if rc.offsets.len() != rc.seq.len() || rc.carrier >= rc.seq.len() || rc.lambdas.len() + 1 != rc.seq.len() {
                return Err(Error::Invalid(alloc::format!("inconsistent lengths in the choice for [{};{}]", b.j, b.i)));
            }
        }
        Ok(())
    }
}

/// `v`, `u1^2`, `v_l`, or `1`.
pub fn default_lambda(flavor: &Flavor, l: u32) -> ParamPoly {
    match flavor.kind {
        FlavorKind::TrigA => ParamPoly::v(),
        FlavorKind::TwoParam => ParamPoly::u_pow(2, 0),
        FlavorKind::TrigSuper => {
            if l <= flavor.m {
                ParamPoly::v()
            } else {
                ParamPoly::v_pow(-1)
            }
        }
        FlavorKind::YangA | FlavorKind::YangSuper => ParamPoly::one(),
    }
}

/// Finitely supported multiplicities on `(root, mode)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PbwdMonomial {
    pub support: BTreeMap<(Root, i32), u32>,
}

impl PbwdMonomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(root: Root, r: i32, mult: u32) -> Self {
        let mut m = Self::new();
        m.add(root, r, mult);
        m
    }

    pub fn add(&mut self, root: Root, r: i32, mult: u32) {
        if mult > 0 {
            *self.support.entry((root, r)).or_insert(0) += mult;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// `Σ h(β, r)`
    pub fn size(&self) -> u32 {
        self.support.values().sum()
    }

    pub fn grading(&self, rank: u32) -> Vec<u32> {
        let mut g = vec![0; rank as usize];
        for ((b, _), m) in &self.support {
            for c in b.j..=b.i {
                g[(c - 1) as usize] += m;
            }
        }
        g
    }

    pub fn degree(&self, flavor: &Flavor) -> DegreeVector {
        let mut counts = vec![0; positive_roots(flavor).len()];
        for ((b, _), m) in &self.support {
            counts[root_index(flavor, b)] += m;
        }
        DegreeVector { counts }
    }

    /// Modes of `β`, each repeated by multiplicity, in the root's order.
    pub fn modes_of(&self, root: &Root, order: ModeOrder) -> Vec<i32> {
        let mut out: Vec<i32> = Vec::new();
        for ((b, r), m) in &self.support {
            if b == root {
                out.extend(core::iter::repeat_n(*r, *m as usize));
            }
        }
        out.sort_by(|a, b| order.cmp(*a, *b));
        out
    }

    /// The ordered factor list `(β, r)` of `e_h`.
    pub fn factors(&self, choice: &PbwdChoice) -> Vec<(Root, i32)> {
        let mut roots: Vec<Root> = self.support.keys().map(|(b, _)| *b).collect();
        roots.dedup();
        let mut out = Vec::new();
        for b in roots {
            for r in self.modes_of(&b, choice.root(&b).order) {
                out.push((b, r));
            }
        }
        out
    }

    pub fn validate(&self, flavor: &Flavor) -> Result<()> {
        for ((b, r), m) in &self.support {
            if *b != Root::new(flavor, b.j, b.i)? {
                return Err(Error::Invalid("root parity does not match the flavor".into()));
            }
            if b.parity && *m > 1 {
                return Err(Error::Invalid(alloc::format!("odd root [{};{}] has multiplicity {} at r = {}", b.j, b.i, m, r)));
            }
            if flavor.kind.is_yangian() && *r < 0 {
                return Err(Error::Invalid("Yangian modes must be non-negative".into()));
            }
            if *m == 0 {
                return Err(Error::Invalid("zero multiplicity stored".into()));
            }
        }
        Ok(())
    }
}

/// Root multiplicities `d_β` in root order.
///
/// `d < d'` iff at the first root where they differ `d` has the larger count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeVector {
    pub counts: Vec<u32>,
}

impl Ord for DegreeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        other.counts.cmp(&self.counts)
    }
}

impl PartialOrd for DegreeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl DegreeVector {
    pub fn grading(&self, flavor: &Flavor) -> Vec<u32> {
        let mut g = vec![0; flavor.rank() as usize];
        for (b, &d) in positive_roots(flavor).iter().zip(&self.counts) {
            for c in b.j..=b.i {
                g[(c - 1) as usize] += d;
            }
        }
        g
    }

    /// `(β, d_β)` for the roots that occur.
    pub fn entries(&self, flavor: &Flavor) -> Vec<(Root, u32)> {
        positive_roots(flavor).into_iter().zip(self.counts.iter().copied()).filter(|(_, d)| *d > 0).collect()
    }

    pub fn from_entries(flavor: &Flavor, entries: &[(Root, u32)]) -> Self {
        let mut counts = vec![0; positive_roots(flavor).len()];
        for (b, d) in entries {
            counts[root_index(flavor, b)] += d;
        }
        DegreeVector { counts }
    }

    /// `Σ d_β (i(β) − j(β))`
    pub fn spread(&self, flavor: &Flavor) -> u32 {
        positive_roots(flavor).iter().zip(&self.counts).map(|(b, d)| b.spread() * d).sum()
    }
}

/// `T_k`: all degree vectors with `Σ d_β [β] = k`, largest first.
pub fn degree_vectors(flavor: &Flavor, grading: &[u32]) -> Vec<DegreeVector> {
    let roots = positive_roots(flavor);
    let mut out = Vec::new();
    let mut counts = vec![0u32; roots.len()];
    let mut rest = grading.to_vec();
    dv_rec(&roots, 0, &mut rest, &mut counts, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn dv_rec(roots: &[Root], idx: usize, rest: &mut Vec<u32>, counts: &mut Vec<u32>, out: &mut Vec<DegreeVector>) {
    if idx == roots.len() {
        if rest.iter().all(|&x| x == 0) {
            out.push(DegreeVector { counts: counts.clone() });
        }
        return;
    }
    let b = roots[idx];
    let max = (b.j..=b.i).map(|c| rest[(c - 1) as usize]).min().unwrap_or(0);
    for d in 0..=max {
        for c in b.j..=b.i {
            rest[(c - 1) as usize] -= d;
        }
        counts[idx] = d;
        dv_rec(roots, idx + 1, rest, counts, out);
        for c in b.j..=b.i {
            rest[(c - 1) as usize] += d;
        }
    }
    counts[idx] = 0;
}

/// `Ψ(e_β(r))`
pub fn pbwd_element(flavor: &Flavor, root: &Root, r: i32, choice: &PbwdChoice) -> Result<ShuffleElement> {
    if choice.flavor != *flavor {
        return Err(Error::FlavorMismatch(alloc::format!("choice for {} used with {}", choice.flavor, flavor)));
    }
    let rc = choice.root(root);
    let modes = rc.modes(r);
    if flavor.kind.is_yangian() && modes.iter().any(|&m| m < 0) {
        return Err(Error::Invalid(alloc::format!("Yangian split of r = {} has a negative mode: {:?}", r, modes)));
    }
    let mut acc = ShuffleElement::generator(*flavor, rc.seq[0], modes[0])?;
    for ((&c, &m), lambda) in rc.seq.iter().zip(&modes).skip(1).zip(&rc.lambdas) {
        let g = ShuffleElement::generator(*flavor, c, m)?;
        acc = q_bracket(&acc, &g, lambda)?;
    }
    if acc.is_zero() {
        return Err(Error::Invalid(alloc::format!("degenerate choice: e[{};{}]({}) vanishes", root.j, root.i, r)));
    }
    Ok(acc)
}

/// Left-to-right product of generators `x_{i,1}^r`.
pub fn psi_word(flavor: &Flavor, word: &[(u32, i32)]) -> Result<ShuffleElement> {
    let mut acc = ShuffleElement::unit(*flavor);
    for &(i, r) in word {
        acc = shuffle_product(&acc, &ShuffleElement::generator(*flavor, i, r)?)?;
    }
    Ok(acc)
}

/// `Ψ(e_h)`: the ordered product of root vectors.
pub fn psi_monomial(flavor: &Flavor, h: &PbwdMonomial, choice: &PbwdChoice) -> Result<ShuffleElement> {
    h.validate(flavor)?;
    let mut cache: BTreeMap<(Root, i32), ShuffleElement> = BTreeMap::new();
    let mut acc = ShuffleElement::unit(*flavor);
    for (b, r) in h.factors(choice) {
        if let alloc::collections::btree_map::Entry::Vacant(slot) = cache.entry((b, r)) {
            slot.insert(pbwd_element(flavor, &b, r, choice)?);
        }
        acc = shuffle_product(&acc, &cache[&(b, r)])?;
    }
    Ok(acc)
}

/// Memoized `Ψ(e_h)` for one choice; products share their prefixes.
#[derive(Clone, Debug)]
pub struct PsiCache {
    choice: PbwdChoice,
    map: BTreeMap<PbwdMonomial, ShuffleElement>,
}

impl PsiCache {
    pub fn new(choice: PbwdChoice) -> Self {
        PsiCache { choice, map: BTreeMap::new() }
    }

    pub fn choice(&self) -> &PbwdChoice {
        &self.choice
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `Ψ(e_h)`
    pub fn get(&mut self, h: &PbwdMonomial) -> Result<ShuffleElement> {
        if let Some(e) = self.map.get(h) {
            return Ok(e.clone());
        }
        let flavor = self.choice.flavor;
        h.validate(&flavor)?;
        let factors = h.factors(&self.choice);
        let e = match factors.split_last() {
            None => ShuffleElement::unit(flavor),
            Some((&(b, r), [])) => pbwd_element(&flavor, &b, r, &self.choice)?,
            Some((&(b, r), _)) => {
                let mut prefix = h.clone();
                let m = prefix.support.get_mut(&(b, r)).expect("factor in support");
                *m -= 1;
                if *m == 0 {
                    prefix.support.remove(&(b, r));
                }
                let head = self.get(&prefix)?;
                let last = self.get(&PbwdMonomial::single(b, r, 1))?;
                shuffle_product(&head, &last)?
            }
        };
        self.map.insert(h.clone(), e.clone());
        Ok(e)
    }
}

/// `F` times the flavor's normalizer to the power `count`.
pub fn tilde_scale(flavor: &Flavor, f: &ShuffleElement, count: u32) -> ShuffleElement {
    f.scale(&flavor.normalizer().pow(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{VarId, XPoly};

    #[test]
    fn roots_in_order() {
        let f = Flavor::trig_a(3);
        let r = positive_roots(&f);
        assert_eq!(r.iter().map(|b| (b.j, b.i)).collect::<Vec<_>>(), vec![(1, 1), (1, 2), (2, 2)]);
        for (k, b) in r.iter().enumerate() {
            assert_eq!(root_index(&f, b), k);
        }
        let s = positive_roots(&Flavor::trig_super(1, 1));
        assert_eq!(s.len(), 1);
        assert!(s[0].parity);
        assert_eq!(positive_roots(&Flavor::trig_a(2)).len(), 1);
    }

    #[test]
    fn degree_vector_order() {
        let f = Flavor::trig_a(3);
        let t = degree_vectors(&f, &[1, 1]);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].counts, vec![0, 1, 0]);
        assert_eq!(t[1].counts, vec![1, 0, 1]);
        assert!(t[1] < t[0]);
        let a = DegreeVector { counts: vec![2, 0, 0] };
        let b = DegreeVector { counts: vec![1, 1, 0] };
        assert!(a < b);
    }

    #[test]
    fn default_root_vector() {
        let f = Flavor::trig_a(3);
        let c = PbwdChoice::default_for(f);
        let b = Root::new(&f, 1, 2).unwrap();
        let e = pbwd_element(&f, &b, 0, &c).unwrap();
        let one_minus = &ParamPoly::one() - &ParamPoly::v_pow(2);
        assert_eq!(e.numerator, XPoly::var(VarId::x(1, 1)).scale(&one_minus));
        let y = Flavor::yang_a(3);
        let e = pbwd_element(&y, &Root::new(&y, 1, 2).unwrap(), 0, &PbwdChoice::default_for(y)).unwrap();
        assert_eq!(e.numerator, XPoly::constant(&ParamPoly::hbar().scale(&crate::ring::rat(-1))));
    }
}
