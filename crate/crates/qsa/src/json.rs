//! JSON forms of the core types.
//!
//! Every `to_json` has a matching `*_from_json` and the pair round-trips.
//! Output is canonical: terms come out in the core's sorted order and
//! object keys are sorted by `serde_json`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use qsa_core::membership::{Certificate, Decomposition};
use qsa_core::multipoly::{Term, VarId, XPoly};
use qsa_core::pbwd::{positive_roots, DegreeVector, ModeOrder, PbwdChoice, PbwdMonomial, Root, RootChoice};
use qsa_core::ring::{ParamFrac, ParamPoly, ParamSet, Rational};
use qsa_core::shuffle::{Flavor, FlavorKind, ShuffleElement};
use qsa_core::special::SpecPlan;
use serde_json::{json, Map, Value};

use crate::CliError;

type Res<T> = Result<T, CliError>;

fn bad(what: &str, v: &Value) -> CliError {
    CliError::Parse(format!("expected {what}, got {v}"))
}

fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Res<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("an integer", v)),
        Value::String(s) => s.parse().map_err(|_| bad("an integer", v)),
        _ => Err(bad("an integer", v)),
    }
}

fn i32_from(v: &Value) -> Res<i32> {
    v.as_i64().and_then(|x| i32::try_from(x).ok()).ok_or_else(|| bad("a small integer", v))
}

fn u32_from(v: &Value) -> Res<u32> {
    v.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| bad("a non-negative integer", v))
}

fn arr<'a>(v: &'a Value, what: &str) -> Res<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what, v))
}

fn field<'a>(v: &'a Value, key: &str) -> Res<&'a Value> {
    v.get(key).ok_or_else(|| CliError::Parse(format!("missing field {key:?} in {v}")))
}

fn exps_to_json(e: [i32; 2], params: ParamSet) -> Value {
    Value::Array(e[..params.len()].iter().map(|&x| json!(x)).collect())
}

fn exps_from_json(v: &Value, params: ParamSet) -> Res<[i32; 2]> {
    let a = arr(v, "an exponent vector")?;
    if a.len() != params.len() {
        return Err(CliError::Parse(format!("exponent vector {v} needs {} entries", params.len())));
    }
    let mut e = [0; 2];
    for (slot, x) in e.iter_mut().zip(a) {
        *slot = i32_from(x)?;
    }
    Ok(e)
}

/// `[[exps], num, den]` triples.
pub fn param_to_json(p: &ParamPoly, params: ParamSet) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(e, c)| json!([exps_to_json(*e, params), int_to_json(c.numer()), int_to_json(c.denom())]))
            .collect(),
    )
}

pub fn param_from_json(v: &Value, params: ParamSet) -> Res<ParamPoly> {
    let mut terms = Vec::new();
    for t in arr(v, "a list of parameter terms")? {
        let t = arr(t, "a [exps, num, den] triple")?;
        if t.len() != 3 {
            return Err(CliError::Parse(format!("parameter term needs 3 entries, got {}", t.len())));
        }
        let den = int_from_json(&t[2])?;
        if den == BigInt::from(0) {
            return Err(CliError::Parse("zero denominator".into()));
        }
        terms.push((exps_from_json(&t[0], params)?, Rational::new(int_from_json(&t[1])?, den)));
    }
    Ok(ParamPoly::from_terms(terms))
}

pub fn frac_to_json(c: &ParamFrac, params: ParamSet) -> Value {
    json!({ "num": param_to_json(c.num(), params), "den": param_to_json(c.den(), params) })
}

pub fn frac_from_json(v: &Value, params: ParamSet) -> Res<ParamFrac> {
    let num = param_from_json(field(v, "num")?, params)?;
    let den = param_from_json(field(v, "den")?, params)?;
    Ok(ParamFrac::new(num, den)?)
}

/// `[{vars: {"x:1:1": e}, coeff}]`, one entry per variable monomial.
pub fn xpoly_to_json(p: &XPoly, params: ParamSet) -> Value {
    Value::Array(
        p.groups()
            .iter()
            .map(|(m, c)| {
                let vars: Map<String, Value> = m.iter().map(|(v, e)| (v.key(), json!(e))).collect();
                json!({ "vars": vars, "coeff": param_to_json(c, params) })
            })
            .collect(),
    )
}

pub fn xpoly_from_json(v: &Value, params: ParamSet) -> Res<XPoly> {
    let mut out = Vec::new();
    for t in arr(v, "a list of monomials")? {
        let vars = field(t, "vars")?.as_object().ok_or_else(|| bad("a variable map", t))?;
        let mut mono: Vec<(VarId, i32)> = Vec::with_capacity(vars.len());
        for (k, e) in vars {
            let e = i32_from(e)?;
            if e != 0 {
                mono.push((VarId::parse(k)?, e));
            }
        }
        mono.sort();
        let c = param_from_json(field(t, "coeff")?, params)?;
        for (pexp, coeff) in c.terms() {
            out.push(Term { mono: mono.iter().copied().collect(), pexp: *pexp, coeff: coeff.clone() });
        }
    }
    Ok(XPoly::from_terms(out))
}

pub fn flavor_to_json(f: &Flavor) -> Value {
    if f.kind.is_super() {
        json!({ "kind": f.kind.name(), "n": [f.m, f.n] })
    } else {
        json!({ "kind": f.kind.name(), "n": f.n })
    }
}

pub fn flavor_from_json(v: &Value) -> Res<Flavor> {
    let kind = FlavorKind::parse(field(v, "kind")?.as_str().ok_or_else(|| bad("a flavor kind", v))?)?;
    let n = field(v, "n")?;
    let f = if kind.is_super() {
        let mn = arr(n, "[m, n]")?;
        if mn.len() != 2 {
            return Err(bad("[m, n]", n));
        }
        Flavor::new(kind, u32_from(&mn[0])?, u32_from(&mn[1])?)?
    } else {
        Flavor::new(kind, 0, u32_from(n)?)?
    };
    Ok(f)
}

fn u32s_to_json(xs: &[u32]) -> Value {
    Value::Array(xs.iter().map(|&x| json!(x)).collect())
}

fn u32s_from_json(v: &Value) -> Res<Vec<u32>> {
    arr(v, "a list of integers")?.iter().map(u32_from).collect()
}

pub fn element_to_json(e: &ShuffleElement) -> Value {
    json!({
        "flavor": flavor_to_json(&e.flavor),
        "grading": u32s_to_json(&e.grading),
        "numerator": xpoly_to_json(&e.numerator, e.flavor.params()),
    })
}

pub fn element_from_json(v: &Value) -> Res<ShuffleElement> {
    let flavor = flavor_from_json(field(v, "flavor")?)?;
    let grading = u32s_from_json(field(v, "grading")?)?;
    let num = xpoly_from_json(field(v, "numerator")?, flavor.params())?;
    Ok(ShuffleElement::new(flavor, grading, num)?)
}

fn root_to_json(b: &Root) -> Value {
    json!([b.j, b.i])
}

fn root_from_json(flavor: &Flavor, v: &Value) -> Res<Root> {
    let a = arr(v, "a root [j, i]")?;
    if a.len() != 2 {
        return Err(bad("a root [j, i]", v));
    }
    Ok(Root::new(flavor, u32_from(&a[0])?, u32_from(&a[1])?)?)
}

/// `[{root: [j, i], r, mult}]`
pub fn monomial_to_json(h: &PbwdMonomial) -> Value {
    Value::Array(
        h.support.iter().map(|((b, r), m)| json!({ "root": root_to_json(b), "r": r, "mult": m })).collect(),
    )
}

pub fn monomial_from_json(flavor: &Flavor, v: &Value) -> Res<PbwdMonomial> {
    let mut h = PbwdMonomial::new();
    for e in arr(v, "a list of monomial factors")? {
        let b = root_from_json(flavor, field(e, "root")?)?;
        h.add(b, i32_from(field(e, "r")?)?, u32_from(field(e, "mult")?)?);
    }
    h.validate(flavor)?;
    Ok(h)
}

pub fn choice_to_json(c: &PbwdChoice) -> Value {
    let params = c.flavor.params();
    let roots: Vec<Value> = positive_roots(&c.flavor)
        .iter()
        .zip(&c.roots)
        .map(|(b, rc)| {
            json!({
                "root": root_to_json(b),
                "seq": u32s_to_json(&rc.seq),
                "carrier": rc.carrier,
                "offsets": rc.offsets,
                "lambdas": rc.lambdas.iter().map(|l| param_to_json(l, params)).collect::<Vec<_>>(),
                "order": rc.order.name(),
            })
        })
        .collect();
    json!({ "flavor": flavor_to_json(&c.flavor), "roots": roots })
}

/// Roots missing from the list keep their default construction.
pub fn choice_from_json(v: &Value) -> Res<PbwdChoice> {
    let flavor = flavor_from_json(field(v, "flavor")?)?;
    let params = flavor.params();
    let mut choice = PbwdChoice::default_for(flavor);
    for e in arr(field(v, "roots")?, "a list of root choices")? {
        let b = root_from_json(&flavor, field(e, "root")?)?;
        let lambdas = arr(field(e, "lambdas")?, "a list of parameters")?
            .iter()
            .map(|l| param_from_json(l, params))
            .collect::<Res<Vec<_>>>()?;
        let offsets = arr(field(e, "offsets")?, "a list of offsets")?.iter().map(i32_from).collect::<Res<Vec<_>>>()?;
        let order = match e.get("order") {
            Some(o) => ModeOrder::parse(o.as_str().ok_or_else(|| bad("a mode order", o))?)?,
            None => ModeOrder::default(),
        };
        *choice.root_mut(&b) = RootChoice {
            seq: u32s_from_json(field(e, "seq")?)?,
            carrier: field(e, "carrier")?.as_u64().ok_or_else(|| bad("a carrier index", e))? as usize,
            offsets,
            lambdas,
            order,
        };
    }
    choice.validate()?;
    Ok(choice)
}

fn root_key(b: &Root) -> String {
    format!("{}:{}", b.j, b.i)
}

/// `{d: [[j, i, mult]], t: {"j:i": [..]}}`; slots are always canonical.
pub fn plan_to_json(flavor: &Flavor, plan: &SpecPlan) -> Value {
    let roots = positive_roots(flavor);
    let d: Vec<Value> = plan.d.entries(flavor).iter().map(|(b, n)| json!([b.j, b.i, n])).collect();
    let mut out = json!({ "d": d });
    if let Some(t) = &plan.t {
        let t: Map<String, Value> = roots
            .iter()
            .zip(t)
            .filter(|(_, parts)| !parts.is_empty())
            .map(|(b, parts)| (root_key(b), u32s_to_json(parts)))
            .collect();
        out["t"] = Value::Object(t);
    }
    out
}

/// Roots with `d_β > 0` missing from `t` get `t_β = (1, …, 1)`.
pub fn plan_from_json(flavor: &Flavor, v: &Value) -> Res<SpecPlan> {
    let mut entries = Vec::new();
    for e in arr(field(v, "d")?, "a list of [j, i, mult]")? {
        let a = arr(e, "[j, i, mult]")?;
        if a.len() != 3 {
            return Err(bad("[j, i, mult]", e));
        }
        entries.push((Root::new(flavor, u32_from(&a[0])?, u32_from(&a[1])?)?, u32_from(&a[2])?));
    }
    let d = DegreeVector::from_entries(flavor, &entries);
    let plan = SpecPlan::canonical(flavor, &d);
    let Some(t) = v.get("t") else { return Ok(plan) };
    let t = t.as_object().ok_or_else(|| bad("a map from roots to compositions", t))?;
    let roots = positive_roots(flavor);
    let mut given: BTreeMap<String, Vec<u32>> = BTreeMap::new();
    for (k, parts) in t {
        if !roots.iter().any(|b| &root_key(b) == k) {
            return Err(CliError::Parse(format!("unknown root {k:?} in t")));
        }
        given.insert(k.clone(), u32s_from_json(parts)?);
    }
    let full = roots
        .iter()
        .zip(&d.counts)
        .map(|(b, &n)| given.remove(&root_key(b)).unwrap_or_else(|| vec![1; n as usize]))
        .collect();
    Ok(plan.with_t(flavor, full)?)
}

pub fn decomposition_to_json(dec: &Decomposition) -> Value {
    let params = dec.choice.flavor.params();
    let entries: Vec<Value> = dec
        .entries
        .iter()
        .map(|(h, c)| json!({ "monomial": monomial_to_json(h), "coeff": frac_to_json(c, params) }))
        .collect();
    json!({ "choice": choice_to_json(&dec.choice), "entries": entries })
}

pub fn decomposition_from_json(v: &Value) -> Res<Decomposition> {
    let choice = choice_from_json(field(v, "choice")?)?;
    let params = choice.flavor.params();
    let mut entries = Vec::new();
    for e in arr(field(v, "entries")?, "a list of entries")? {
        entries.push((monomial_from_json(&choice.flavor, field(e, "monomial")?)?, frac_from_json(field(e, "coeff")?, params)?));
    }
    Ok(Decomposition { choice, entries })
}

pub fn certificate_to_json(flavor: &Flavor, c: &Certificate) -> Value {
    let params = flavor.params();
    json!({
        "rows": c.rows,
        "cols": c.cols,
        "rank": c.rank,
        "full_rank": c.full_rank(),
        "monomials": c.monomials.iter().map(monomial_to_json).collect::<Vec<_>>(),
        "kernel": c.kernel.as_ref().map(|k| k.iter().map(|x| frac_to_json(x, params)).collect::<Vec<_>>()),
    })
}

pub fn certificate_from_json(flavor: &Flavor, v: &Value) -> Res<Certificate> {
    let params = flavor.params();
    let usize_of = |key: &str| -> Res<usize> {
        field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| CliError::Parse(format!("bad {key:?}")))
    };
    let monomials =
        arr(field(v, "monomials")?, "a list of monomials")?.iter().map(|m| monomial_from_json(flavor, m)).collect::<Res<_>>()?;
    let kernel = match v.get("kernel") {
        None | Some(Value::Null) => None,
        Some(k) => Some(arr(k, "a kernel vector")?.iter().map(|x| frac_from_json(x, params)).collect::<Res<_>>()?),
    };
    Ok(Certificate { monomials, rows: usize_of("rows")?, cols: usize_of("cols")?, rank: usize_of("rank")?, kernel })
}

/// A rational as `"n"` or `"n/d"`, for reports.
pub fn rational_label(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
