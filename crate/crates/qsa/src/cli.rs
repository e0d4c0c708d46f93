//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qsa_core::membership::{
    decompose, good_failure, independence_certificate, integral_failure, is_integral_by_basis, IntegralFailure,
};
use qsa_core::multipoly::set_guard_limit;
use qsa_core::pbwd::{pbwd_element, positive_roots, psi_monomial, psi_word, PbwdChoice, Root};
use qsa_core::ring::{ParamPoly, ParamSet, Rational};
use qsa_core::shuffle::{check_pole, q_bracket, shuffle_product_all, wheel_failure, Flavor, FlavorKind, ShuffleElement};
use qsa_core::special::{cross_specialize, phi, reduced_phi};
use serde_json::{json, Value};

use crate::json::*;
use crate::verify;
use crate::CliError;

type Res<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "qsa", version, about = "Exact computations in shuffle algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Limit on symmetrization summands (overrides QSA_GUARD).
    #[arg(long, global = true)]
    pub guard: Option<u64>,
    /// Indent JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct FlavorArgs {
    #[arg(long, value_enum)]
    pub flavor: Option<KindArg>,
    /// Rank parameter `n` (type A kinds), or `n` of `(m|n)` when `--n2` is absent.
    #[arg(long)]
    pub n: Option<u32>,
    /// `m` of `(m|n)` for super kinds.
    #[arg(long)]
    pub m: Option<u32>,
    /// `n` of `(m|n)` for super kinds.
    #[arg(long)]
    pub n2: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    TrigA,
    #[value(name = "trig-2p")]
    Trig2p,
    TrigSuper,
    YangA,
    YangSuper,
}

impl KindArg {
    fn kind(self) -> FlavorKind {
        match self {
            KindArg::TrigA => FlavorKind::TrigA,
            KindArg::Trig2p => FlavorKind::TwoParam,
            KindArg::TrigSuper => FlavorKind::TrigSuper,
            KindArg::YangA => FlavorKind::YangA,
            KindArg::YangSuper => FlavorKind::YangSuper,
        }
    }
}

impl FlavorArgs {
    fn given(&self) -> bool {
        self.flavor.is_some()
    }

    fn flavor(&self) -> Res<Flavor> {
        let kind = self.flavor.ok_or_else(|| CliError::Usage("--flavor is required".into()))?.kind();
        let f = if kind.is_super() {
            let m = self.m.ok_or_else(|| CliError::Usage("super flavors need --m".into()))?;
            let n = self.n2.or(self.n).ok_or_else(|| CliError::Usage("super flavors need --n2".into()))?;
            Flavor::new(kind, m, n)?
        } else {
            if self.m.is_some() || self.n2.is_some() {
                return Err(CliError::Usage("--m and --n2 are only for super flavors".into()));
            }
            Flavor::new(kind, 0, self.n.ok_or_else(|| CliError::Usage("--n is required".into()))?)?
        };
        Ok(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Pole,
    Wheel,
    Integral,
    Good,
    IntegralByBasis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpecMode {
    Phi,
    Reduced,
    Cross,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Shuffle product of the input elements, left to right.
    Product {
        #[arg(long = "in", required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Image of a generator word, e.g. --word "e(1,0) e(2,1)".
    Psi {
        #[command(flatten)]
        flavor: FlavorArgs,
        #[arg(long)]
        word: String,
    },
    /// `[A, B]_λ = A⋆B − (−1)^{|A||B|} λ B⋆A`.
    Bracket {
        #[arg(long = "in", required = true, num_args = 1)]
        inputs: Vec<PathBuf>,
        /// A parameter monomial such as `v`, `v^-1`, `2*u1^2`, or a JSON parameter polynomial.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// A root vector (`--root j:i --r r`) or an ordered monomial (`--in h.json`).
    Pbwd {
        #[command(flatten)]
        flavor: FlavorArgs,
        #[arg(long)]
        root: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i32>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        choice: Option<PathBuf>,
    },
    /// Specialization maps under a plan file.
    Specialize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        plan: PathBuf,
        #[arg(long, value_enum, default_value = "phi")]
        mode: SpecMode,
        /// Use `v^{-2}` instead of `v^{2}` in the second B-factor (the uncorrected variant).
        #[arg(long)]
        printed: bool,
    },
    /// Evaluate a predicate; exit status 1 when it fails.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        predicate: Predicate,
        #[arg(long)]
        choice: Option<PathBuf>,
    },
    /// Coefficients in the ordered PBWD basis.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        choice: Option<PathBuf>,
    },
    /// Exact rank of the PBWD images in a mode window.
    Certify {
        #[command(flatten)]
        flavor: FlavorArgs,
        /// Comma-separated grading, e.g. `2,1`.
        #[arg(long)]
        grading: String,
        #[arg(long, default_value = "0:1", allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        choice: Option<PathBuf>,
    },
    /// Run a named identity suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "max-k")]
        max_k: Option<u32>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

/// What a subcommand produced: text to print and whether a property held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn json(v: &Value, pretty: bool, ok: bool) -> Res<Self> {
        let text = if pretty { serde_json::to_string_pretty(v)? } else { serde_json::to_string(v)? };
        Ok(Outcome { text, ok })
    }
}

fn read_text(path: &PathBuf) -> Res<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
    }
}

fn read_json(path: &PathBuf) -> Res<Value> {
    Ok(serde_json::from_str(&read_text(path)?)?)
}

fn read_element(path: &PathBuf) -> Res<ShuffleElement> {
    element_from_json(&read_json(path)?)
}

fn read_choice(path: &Option<PathBuf>, flavor: &Flavor) -> Res<PbwdChoice> {
    match path {
        None => Ok(PbwdChoice::default_for(*flavor)),
        Some(p) => {
            let c = choice_from_json(&read_json(p)?)?;
            if c.flavor != *flavor {
                return Err(CliError::Usage(format!("choice is for {}, element is {}", c.flavor, flavor)));
            }
            Ok(c)
        }
    }
}

/// `e(1,0) e(2,-1)` → `[(1, 0), (2, -1)]`
pub fn parse_word(s: &str) -> Res<Vec<(u32, i32)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix("e(").ok_or_else(|| CliError::Parse(format!("expected e(i,r) at {rest:?}")))?;
        let end = body.find(')').ok_or_else(|| CliError::Parse(format!("unclosed letter at {rest:?}")))?;
        let (i, r) = body[..end].split_once(',').ok_or_else(|| CliError::Parse(format!("expected e(i,r), got e({})", &body[..end])))?;
        let i = i.parse().map_err(|_| CliError::Parse(format!("bad color {i:?}")))?;
        let r = r.parse().map_err(|_| CliError::Parse(format!("bad mode {r:?}")))?;
        out.push((i, r));
        rest = &body[end + 1..];
    }
    if out.is_empty() {
        return Err(CliError::Parse("empty word".into()));
    }
    Ok(out)
}

/// `2*v^-1`, `u1^2*u2`, `h`, `1`, or a JSON parameter polynomial.
pub fn parse_param(s: &str, params: ParamSet) -> Res<ParamPoly> {
    let s = s.trim();
    if s.starts_with('[') {
        return param_from_json(&serde_json::from_str(s)?, params);
    }
    let mut exps = [0i32; 2];
    let mut coeff = Rational::from_integer(1.into());
    for factor in s.split('*').map(str::trim) {
        let (base, pow) = match factor.split_once('^') {
            Some((b, p)) => (b, p.parse::<i32>().map_err(|_| CliError::Parse(format!("bad exponent in {factor:?}")))?),
            None => (factor, 1),
        };
        if let Some(slot) = params.symbols().iter().position(|&sym| sym == base) {
            exps[slot] += pow;
        } else if let Ok(n) = base.parse::<i64>() {
            if pow < 0 {
                return Err(CliError::Parse(format!("negative power of an integer in {factor:?}")));
            }
            coeff *= Rational::from_integer(n.into()).pow(pow);
        } else {
            return Err(CliError::Parse(format!("unknown symbol {base:?}; this flavor uses {:?}", params.symbols())));
        }
    }
    Ok(ParamPoly::monomial(exps, coeff))
}

fn parse_window(s: &str) -> Res<(i32, i32)> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| CliError::Parse(format!("window must be lo:hi, got {s:?}")))?;
    let lo = lo.trim().parse().map_err(|_| CliError::Parse(format!("bad window bound {lo:?}")))?;
    let hi = hi.trim().parse().map_err(|_| CliError::Parse(format!("bad window bound {hi:?}")))?;
    if lo > hi {
        return Err(CliError::Parse(format!("empty window {s:?}")));
    }
    Ok((lo, hi))
}

fn parse_root(flavor: &Flavor, s: &str) -> Res<Root> {
    let (j, i) = s.split_once(':').ok_or_else(|| CliError::Parse(format!("root must be j:i, got {s:?}")))?;
    let j = j.parse().map_err(|_| CliError::Parse(format!("bad root {s:?}")))?;
    let i = i.parse().map_err(|_| CliError::Parse(format!("bad root {s:?}")))?;
    Ok(Root::new(flavor, j, i)?)
}

/// `{[1;1]↦2}`
fn degree_label(flavor: &Flavor, counts: &[u32]) -> String {
    let parts: Vec<String> = positive_roots(flavor)
        .iter()
        .zip(counts)
        .filter(|(_, &n)| n > 0)
        .map(|(b, n)| format!("[{};{}]↦{}", b.j, b.i, n))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn check(input: &PathBuf, predicate: Predicate, choice: &Option<PathBuf>, pretty: bool) -> Res<Outcome> {
    let f = read_element(input)?;
    let name = predicate.to_possible_value().expect("named").get_name().to_string();
    let params = f.flavor.params();
    let (holds, detail): (bool, Value) = match predicate {
        Predicate::Pole => (check_pole(&f), Value::Null),
        Predicate::Wheel => match wheel_failure(&f) {
            None => (true, Value::Null),
            Some(bad) => (false, json!({ "pattern": bad.iter().map(|(c, s)| format!("x:{c}:{s}")).collect::<Vec<_>>() })),
        },
        Predicate::Integral => match integral_failure(&f)? {
            None => (true, Value::Null),
            Some(IntegralFailure::Candidate) => {
                (false, json!({ "reason": "numerator is not divisible by the normalizer to the power |k|" }))
            }
            Some(IntegralFailure::Reduced { d, reason }) => {
                (false, json!({ "d": degree_label(&f.flavor, &d), "reason": reason }))
            }
            Some(IntegralFailure::Factorial { d, t, divisor }) => {
                let roots = positive_roots(&f.flavor);
                let t_label: Vec<String> = roots
                    .iter()
                    .zip(&t)
                    .filter(|(_, parts)| !parts.is_empty())
                    .map(|(b, parts)| {
                        let p: Vec<String> = parts.iter().map(u32::to_string).collect();
                        format!("[{};{}]: ({})", b.j, b.i, p.join(","))
                    })
                    .collect();
                let fact: Vec<String> = t.iter().flatten().filter(|&&p| p > 1).map(|p| format!("[{p}]_v!")).collect();
                (
                    false,
                    json!({
                        "d": degree_label(&f.flavor, &d),
                        "t": t_label.join(", "),
                        "divisor": fact.join("·"),
                        "divisor_poly": param_to_json(&divisor, params),
                        "reason": "cross specialization is not divisible by the product of v-factorials",
                    }),
                )
            }
            Some(IntegralFailure::Basis) => (false, json!({ "reason": "a basis coefficient is not a Laurent polynomial" })),
        },
        Predicate::Good => match good_failure(&f)? {
            None => (true, Value::Null),
            Some(d) => (false, json!({ "d": degree_label(&f.flavor, &d), "reason": "specialization misses the normalizer power" })),
        },
        Predicate::IntegralByBasis => (is_integral_by_basis(&f, &read_choice(choice, &f.flavor)?)?, Value::Null),
    };
    let mut report = json!({ "predicate": name, "holds": holds });
    if !detail.is_null() {
        report["failure"] = detail;
    }
    Outcome::json(&report, pretty, holds)
}

fn run_command(cli: &Cli) -> Res<Outcome> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Product { inputs } => {
            let els = inputs.iter().map(read_element).collect::<Res<Vec<_>>>()?;
            let p = shuffle_product_all(els[0].flavor, &els)?;
            Outcome::json(&element_to_json(&p), pretty, true)
        }
        Command::Psi { flavor, word } => {
            let f = flavor.flavor()?;
            Outcome::json(&element_to_json(&psi_word(&f, &parse_word(word)?)?), pretty, true)
        }
        Command::Bracket { inputs, lambda } => {
            if inputs.len() != 2 {
                return Err(CliError::Usage("bracket takes exactly two --in files".into()));
            }
            let (a, b) = (read_element(&inputs[0])?, read_element(&inputs[1])?);
            let l = parse_param(lambda, a.flavor.params())?;
            Outcome::json(&element_to_json(&q_bracket(&a, &b, &l)?), pretty, true)
        }
        Command::Pbwd { flavor, root, r, input, choice } => {
            let (f, h) = match (input, root) {
                (Some(path), None) => {
                    let v = read_json(path)?;
                    let f = if flavor.given() { flavor.flavor()? } else { flavor_from_json(v.get("flavor").unwrap_or(&Value::Null))? };
                    let h = monomial_from_json(&f, v.get("monomial").unwrap_or(&v))?;
                    (f, Some(h))
                }
                (None, Some(_)) => (flavor.flavor()?, None),
                _ => return Err(CliError::Usage("pbwd takes either --root j:i --r r or --in monomial.json".into())),
            };
            let c = read_choice(choice, &f)?;
            let el = match h {
                Some(h) => psi_monomial(&f, &h, &c)?,
                None => {
                    let b = parse_root(&f, root.as_deref().expect("checked"))?;
                    pbwd_element(&f, &b, r.ok_or_else(|| CliError::Usage("--root needs --r".into()))?, &c)?
                }
            };
            Outcome::json(&element_to_json(&el), pretty, true)
        }
        Command::Specialize { input, plan, mode, printed } => {
            let f = read_element(input)?;
            let plan = plan_from_json(&f.flavor, &read_json(plan)?)?;
            plan.validate(&f.flavor, &f.grading)?;
            let out = match mode {
                SpecMode::Phi => phi(&f, &plan)?,
                SpecMode::Reduced => reduced_phi(&f, &plan.d, *printed)?,
                SpecMode::Cross => {
                    if plan.t.is_none() {
                        return Err(CliError::Usage("cross specialization needs t in the plan".into()));
                    }
                    cross_specialize(&f, &plan, *printed)?
                }
            };
            Outcome::json(&xpoly_to_json(&out, f.flavor.params()), pretty, true)
        }
        Command::Check { input, predicate, choice } => check(input, *predicate, choice, pretty),
        Command::Decompose { input, choice } => {
            let f = read_element(input)?;
            let dec = decompose(&f, &read_choice(choice, &f.flavor)?)?;
            Outcome::json(&decomposition_to_json(&dec), pretty, true)
        }
        Command::Certify { flavor, grading, window, choice } => {
            let f = flavor.flavor()?;
            let g: Vec<u32> = grading
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| CliError::Parse(format!("bad grading {grading:?}"))))
                .collect::<Res<_>>()?;
            if g.len() != f.rank() as usize {
                return Err(CliError::Usage(format!("grading needs {} entries", f.rank())));
            }
            let (lo, hi) = parse_window(window)?;
            let cert = independence_certificate(&f, &g, lo, hi, &read_choice(choice, &f)?)?;
            Outcome::json(&certificate_to_json(&f, &cert), pretty, cert.full_rank())
        }
        Command::Verify { suite, max_k, seed } => {
            let names: Vec<&str> = if suite == "all" { verify::SUITES.to_vec() } else { vec![suite.as_str()] };
            if let Some(bad) = names.iter().find(|s| !verify::SUITES.contains(s)) {
                return Err(CliError::Usage(format!("unknown suite {bad:?}; expected all or one of {}", verify::SUITES.join(", "))));
            }
            let opts = verify::Options { max_k: *max_k, seed: *seed };
            let mut text = Vec::new();
            let mut ok = true;
            for s in names {
                let rep = verify::run(s, &opts)?;
                ok &= rep.passed();
                text.push(rep.to_string());
            }
            Ok(Outcome { text: text.join("\n"), ok })
        }
    }
}

fn guard_from_env() -> Res<Option<u64>> {
    match std::env::var("QSA_GUARD") {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| CliError::Usage(format!("QSA_GUARD must be an integer, got {s:?}"))),
        Err(_) => Ok(None),
    }
}

/// Run with explicit arguments; returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    let result = (|| -> Res<Outcome> {
        let guard = match cli.guard {
            Some(g) => Some(g),
            None => guard_from_env()?,
        };
        if let Some(g) = guard {
            set_guard_limit(g);
        }
        run_command(&cli)
    })();
    match result {
        Ok(out) => {
            let written = match &cli.out {
                Some(p) => std::fs::write(p, format!("{}\n", out.text)),
                None => writeln!(stdout, "{}", out.text),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "qsa: cannot write output: {e}");
                return 2;
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "qsa: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(parse_word("e(1,0) e(2,-1)").unwrap(), vec![(1, 0), (2, -1)]);
        assert_eq!(parse_word(" e( 3 , 4 )e(1,1) ").unwrap(), vec![(3, 4), (1, 1)]);
        for bad in ["", "e(1,0", "f(1,0)", "e(1)", "e(-1,0)", "e(1,x)"] {
            assert!(parse_word(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn parameters() {
        let v = ParamSet::V;
        assert_eq!(parse_param("v^-1", v).unwrap(), ParamPoly::v_pow(-1));
        assert_eq!(parse_param("2*v", v).unwrap(), ParamPoly::v().scale(&qsa_core::ring::ratio(2, 1)));
        assert_eq!(parse_param("1", v).unwrap(), ParamPoly::one());
        assert_eq!(parse_param("u1^2*u2^-1", ParamSet::U1U2).unwrap(), ParamPoly::u_pow(2, -1));
        assert_eq!(parse_param("[[[1],1,2]]", v).unwrap(), ParamPoly::v().scale(&qsa_core::ring::ratio(1, 2)));
        assert!(parse_param("u1", v).is_err());
        assert!(parse_param("2^-1", v).is_err());
    }

    #[test]
    fn windows() {
        assert_eq!(parse_window("-1:1").unwrap(), (-1, 1));
        assert!(parse_window("1:0").is_err());
        assert!(parse_window("1").is_err());
    }
}
