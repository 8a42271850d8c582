//! The `nsq` command line.
//!
//! [`run`] parses arguments, dispatches to the library and returns the exit
//! code with the buffered output, so the binary stays a three-line wrapper
//! and tests can drive every subcommand in-process.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 resource cap
//! exceeded, 4 failed internal cross-check or `--verify` disagreement.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::ctengine::{ct_report, ct_rgf_rational, ct_series, parse_expr, render_expr, CtSeries};
use crate::error::Error;
use crate::exactalg::{Poly, RationalFunction};
use crate::quotient::{
    enumerate_tp, frobenius_quotient, generators_thm, minimal_quotient_generators, quotient_membership,
    quotient_table, table1_generators, verify_generators, QuotientSpec,
};
use crate::rgf::{bigint_json, frobenius_from_rgf, gens_from_rgf, rgf_rational, rgf_series, RgfRational};
use crate::semigroup::{build_membership, denumerant, denumerant_series, minimal_generators, GeneratorList, Limits};

#[derive(Parser, Debug)]
#[command(name = "nsq", version, about = "Numerical semigroups, their quotients and representation generating functions")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximum cells in one membership sieve.
    #[arg(long, global = true, env = "NSQ_SIEVE_CAP")]
    pub sieve_cap: Option<u64>,
    /// Maximum tuples visited when enumerating T_p.
    #[arg(long, global = true, env = "NSQ_TP_CAP")]
    pub tp_cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct GensArg {
    /// Comma-separated positive integers.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1.., value_parser = clap::value_parser!(u64).range(1..))]
    pub gens: Vec<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct QuotArgs {
    #[command(flatten)]
    pub gens: GensArg,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub p: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Members of ⟨A⟩ up to a bound, or membership of a single integer.
    Membership {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long, conflicts_with = "n")]
        bound: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    Frobenius {
        #[command(flatten)]
        gens: GensArg,
    },
    Gaps {
        #[command(flatten)]
        gens: GensArg,
    },
    /// Apéry set with respect to m (default: the multiplicity).
    Apery {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long)]
        m: Option<u64>,
    },
    MinimalGens {
        #[command(flatten)]
        gens: GensArg,
    },
    /// d(n; A), or the coefficients d(0..=trunc; A).
    Denumerant {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long, conflicts_with = "trunc", required_unless_present = "trunc")]
        n: Option<u64>,
        #[arg(long)]
        trunc: Option<u64>,
    },
    #[command(subcommand)]
    Quotient(QuotientCmd),
    /// Residue tuples T_p over the generators not divisible by p.
    Tp {
        #[command(flatten)]
        q: QuotArgs,
    },
    #[command(subcommand)]
    Rgf(RgfCmd),
    #[command(subcommand)]
    Ct(CtCmd),
    /// Cross-check every method on one instance or on a seeded random batch.
    Verify {
        #[arg(long, value_delimiter = ',', num_args = 1.., value_parser = clap::value_parser!(u64).range(1..), requires = "p", conflicts_with = "random")]
        gens: Option<Vec<u64>>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        p: Option<u64>,
        #[arg(long, required_unless_present = "gens")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        max_a: u64,
        #[arg(long, default_value_t = 6)]
        max_p: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum QuotientCmd {
    /// The explicit generator system from residues mod p.
    Gens {
        #[command(flatten)]
        q: QuotArgs,
        #[arg(long)]
        minimal: bool,
    },
    Minimal {
        #[command(flatten)]
        q: QuotArgs,
    },
    Frobenius {
        #[command(flatten)]
        q: QuotArgs,
    },
    Membership {
        #[command(flatten)]
        q: QuotArgs,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Compare the generator system against the direct sieve.
    Verify {
        #[command(flatten)]
        q: QuotArgs,
    },
    /// Generators from the closed-form table for three generators, p ∈ {2, 3}.
    Table1 {
        #[command(flatten)]
        q: QuotArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum RgfCmd {
    Series {
        #[command(flatten)]
        q: QuotArgs,
        #[arg(long, default_value_t = 20)]
        trunc: u64,
        #[arg(long)]
        verify: bool,
    },
    Rational {
        #[command(flatten)]
        q: QuotArgs,
        #[arg(long)]
        verify: bool,
    },
    Frobenius {
        #[command(flatten)]
        q: QuotArgs,
        #[arg(long)]
        verify: bool,
    },
    Gens {
        #[command(flatten)]
        q: QuotArgs,
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CtCmd {
    /// Constant term in L of an expression such as "1/((1 - x*L^-3)*(1 - L^5))".
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// x-order of the direct expansion used by --verify and the fallback.
        #[arg(long, default_value_t = 20)]
        trunc: i64,
        #[arg(long)]
        verify: bool,
    },
    /// RGF_p through the constant-term engine.
    Rgf {
        #[command(flatten)]
        q: QuotArgs,
        #[arg(long)]
        verify: bool,
    },
}

/// Exit code and buffered streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::InternalMismatch(_) | Error::CertificationFailed { .. } => 4,
        Error::Parse(_) => 1,
        _ => 2,
    }
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

struct Ctx {
    format: Format,
    limits: Limits,
    stdout: String,
    stderr: String,
    code: i32,
}

impl Ctx {
    fn emit(&mut self, text: impl AsRef<str>, json: Value) {
        match self.format {
            Format::Text => {
                self.stdout.push_str(text.as_ref());
                if !text.as_ref().ends_with('\n') {
                    self.stdout.push('\n');
                }
            }
            Format::Json => {
                self.stdout.push_str(&json.to_string());
                self.stdout.push('\n');
            }
        }
    }

    fn warn(&mut self, msg: impl AsRef<str>) {
        self.stderr.push_str("warning: ");
        self.stderr.push_str(msg.as_ref());
        self.stderr.push('\n');
    }

    fn verdict(&mut self, ok: bool, what: &str) {
        if !ok {
            self.code = 4;
            self.stderr.push_str(&format!("verify failed: {what}\n"));
        }
    }
}

pub fn dispatch(cli: &Cli) -> Outcome {
    let defaults = Limits::default();
    let mut ctx = Ctx {
        format: cli.format,
        limits: Limits {
            sieve_cells: cli.sieve_cap.unwrap_or(defaults.sieve_cells),
            tp_tuples: cli.tp_cap.unwrap_or(defaults.tp_tuples),
        },
        stdout: String::new(),
        stderr: String::new(),
        code: 0,
    };
    if let Err(e) = execute(&cli.command, &mut ctx) {
        ctx.code = exit_code(&e);
        ctx.stderr.push_str(&format!("error: {e}\n"));
    }
    Outcome {
        code: ctx.code,
        stdout: ctx.stdout,
        stderr: ctx.stderr,
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn opt_text(v: Option<u64>) -> String {
    v.map_or_else(|| "none".to_string(), |f| f.to_string())
}

fn quot(q: &QuotArgs) -> crate::Result<QuotientSpec> {
    QuotientSpec::from_slice(&q.gens.gens, q.p)
}

fn gl(g: &GensArg) -> crate::Result<GeneratorList> {
    GeneratorList::new(&g.gens)
}

fn rational_json(c: &BigRational) -> Value {
    if c.is_integer() {
        bigint_json(c.numer())
    } else {
        json!(c.to_string())
    }
}

fn poly_json(p: &Poly) -> Value {
    let m: Map<String, Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e.to_string(), rational_json(c)))
        .collect();
    Value::Object(m)
}

/// `{"num": {exp: coeff}, "den": {exp: coeff}}` with integer coefficients as
/// numbers and others as `"a/b"` strings.
pub fn ratfunc_json(f: &RationalFunction) -> Value {
    json!({ "num": poly_json(f.num()), "den": poly_json(f.den()) })
}

pub fn ratfunc_from_json(v: &Value) -> crate::Result<RationalFunction> {
    let bad = || Error::Parse("rational function json".into());
    let poly = |v: Option<&Value>| -> crate::Result<Poly> {
        let obj = v.and_then(Value::as_object).ok_or_else(bad)?;
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (k, c) in obj {
            let e: usize = k.parse().map_err(|_| bad())?;
            let c = match c {
                Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(BigInt::from(i))),
                Value::String(s) => s.parse::<BigRational>().ok(),
                _ => None,
            }
            .ok_or_else(bad)?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigRational::zero());
            }
            coeffs[e] = c;
        }
        Ok(Poly::from_coeffs(coeffs))
    };
    RationalFunction::new(poly(v.get("num"))?, poly(v.get("den"))?)
}

fn execute(cmd: &Command, ctx: &mut Ctx) -> crate::Result<()> {
    let limits = ctx.limits;
    match cmd {
        Command::Membership { gens, bound, n } => {
            let g = gl(gens)?;
            match n {
                Some(n) => {
                    let mut t = build_membership(&g, None, &limits)?;
                    if t.contains(*n).is_none() {
                        t = build_membership(&g, Some(*n), &limits)?;
                    }
                    let member = t.contains(*n).expect("bound covers n");
                    ctx.emit(member.to_string(), json!({ "n": n, "member": member }));
                }
                None => {
                    let t = build_membership(&g, *bound, &limits)?;
                    let members = t.members();
                    ctx.emit(
                        join(&members),
                        json!({ "bound": t.bound(), "certified": t.is_certified(), "members": members }),
                    );
                }
            }
        }
        Command::Frobenius { gens } => {
            let f = crate::semigroup::frobenius(&gl(gens)?, &limits)?;
            ctx.emit(opt_text(f), json!({ "frobenius": f }));
        }
        Command::Gaps { gens } => {
            let g = crate::semigroup::gaps(&gl(gens)?, &limits)?;
            ctx.emit(join(&g), json!({ "gaps": g }));
        }
        Command::Apery { gens, m } => {
            let g = gl(gens)?;
            let m = m.unwrap_or(g.min());
            let a = crate::semigroup::apery(&g, m, &limits)?;
            ctx.emit(join(&a), json!({ "m": m, "apery": a }));
        }
        Command::MinimalGens { gens } => {
            let m = minimal_generators(&gl(gens)?, &limits)?;
            ctx.emit(join(&m), json!({ "minimal_generators": m }));
        }
        Command::Denumerant { gens, n, trunc } => {
            let g = gl(gens)?;
            if let Some(n) = n {
                limits.check_sieve(n.saturating_add(1))?;
                let d = denumerant(*n, &g);
                ctx.emit(d.to_string(), json!({ "n": n, "denumerant": bigint_json(&d.into()) }));
            } else {
                let t = trunc.expect("clap requires n or trunc");
                limits.check_sieve(t.saturating_add(1))?;
                let s = denumerant_series(&g, t);
                let text = s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
                let vals: Vec<Value> = s.coeffs().iter().map(|c| bigint_json(&c.clone().into())).collect();
                ctx.emit(text, json!({ "trunc": t, "denumerants": vals }));
            }
        }
        Command::Quotient(qc) => quotient_cmd(qc, ctx)?,
        Command::Tp { q } => {
            let part: Vec<u64> = q.gens.gens.iter().copied().filter(|a| a % q.p != 0).collect();
            let tp = enumerate_tp(&part, q.p, &limits)?;
            let rows: Vec<Value> = tp
                .tuples
                .iter()
                .zip(&tp.values)
                .map(|(t, v)| json!({ "tuple": t, "value": v }))
                .collect();
            ctx.emit(tp.to_string(), json!({ "p": q.p, "rows": rows }));
        }
        Command::Rgf(rc) => rgf_cmd(rc, ctx)?,
        Command::Ct(cc) => ct_cmd(cc, ctx)?,
        Command::Verify {
            gens,
            p,
            random,
            seed,
            max_a,
            max_p,
        } => match (gens, random) {
            (Some(g), _) => {
                let q = QuotientSpec::from_slice(g, p.expect("clap requires p"))?;
                let checks = verify_instance(&q, &limits)?;
                report_checks(ctx, &[(q, checks)]);
            }
            (None, Some(n)) => {
                if *max_a < 2 || *max_p < 2 {
                    return Err(Error::PreconditionUnmet("--max-a and --max-p must be at least 2".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut results = Vec::with_capacity(*n);
                for _ in 0..*n {
                    let q = random_instance(&mut rng, *max_a, *max_p);
                    let checks = verify_instance(&q, &limits)?;
                    results.push((q, checks));
                }
                report_checks(ctx, &results);
            }
            (None, None) => unreachable!("clap requires --gens or --random"),
        },
    }
    Ok(())
}

fn quotient_cmd(qc: &QuotientCmd, ctx: &mut Ctx) -> crate::Result<()> {
    let limits = ctx.limits;
    match qc {
        QuotientCmd::Gens { q, minimal } => {
            let q = quot(q)?;
            let g = if *minimal {
                minimal_quotient_generators(&q, &limits)?
            } else {
                generators_thm(&q, &limits)?
            };
            ctx.emit(join(&g), json!({ "generators": g }));
        }
        QuotientCmd::Minimal { q } => {
            let g = minimal_quotient_generators(&quot(q)?, &limits)?;
            ctx.emit(join(&g), json!({ "minimal_generators": g }));
        }
        QuotientCmd::Frobenius { q } => {
            let f = frobenius_quotient(&quot(q)?, &limits)?;
            ctx.emit(opt_text(f), json!({ "frobenius": f }));
        }
        QuotientCmd::Membership { q, bound } => {
            let q = quot(q)?;
            let t = match bound {
                Some(b) => quotient_membership(&q, *b, &limits)?,
                None => quotient_table(&q, &limits)?,
            };
            let members = t.members();
            ctx.emit(
                join(&members),
                json!({ "bound": t.bound(), "certified": t.is_certified(), "members": members }),
            );
        }
        QuotientCmd::Verify { q } => {
            let r = verify_generators(&quot(q)?, &limits)?;
            let text = format!(
                "generators: {}\nbound: {}\npassed: {}",
                join(&r.generators),
                r.bound,
                r.passed
            );
            ctx.emit(
                text,
                json!({ "generators": r.generators, "bound": r.bound, "passed": r.passed }),
            );
            ctx.verdict(r.passed, "generator system differs from the quotient");
        }
        QuotientCmd::Table1 { q } => {
            let g = table1_generators(&quot(q)?)?;
            ctx.emit(join(&g), json!({ "generators": g }));
        }
    }
    Ok(())
}

fn rgf_cmd(rc: &RgfCmd, ctx: &mut Ctx) -> crate::Result<()> {
    let limits = ctx.limits;
    match rc {
        RgfCmd::Series { q, trunc, verify } => {
            let qs = quot(q)?;
            let s = rgf_series(qs.gens(), q.p, *trunc, &limits)?;
            let text = s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
            let vals: Vec<Value> = s.coeffs().iter().map(|c| bigint_json(&c.clone().into())).collect();
            ctx.emit(text, json!({ "p": q.p, "trunc": trunc, "coefficients": vals }));
            if *verify {
                let t = quotient_membership(&qs, *trunc, &limits)?;
                let ok = s.coeffs().iter().zip(t.flags()).all(|(c, &m)| !c.is_zero() == m);
                ctx.verdict(ok, "nonzero coefficients differ from quotient membership");
            }
        }
        RgfCmd::Rational { q, verify } => {
            let qs = quot(q)?;
            let r = rgf_rational(qs.gens(), q.p, &limits)?;
            ctx.emit(r.to_string(), r.to_json());
            if *verify {
                let h = 2 * r.certified_to().unwrap_or(0).max(1);
                let s = rgf_series(qs.gens(), q.p, h, &limits)?;
                let expanded = r.expand(h as usize);
                let ok = s.coeffs().iter().zip(&expanded).all(|(a, b)| &BigInt::from(a.clone()) == b);
                ctx.verdict(ok, "closed form disagrees with the series");
            }
        }
        RgfCmd::Frobenius { q, verify } => {
            let qs = quot(q)?;
            let f = frobenius_from_rgf(qs.gens(), q.p, &limits)?;
            ctx.emit(opt_text(f), json!({ "frobenius": f }));
            if *verify {
                let g = frobenius_quotient(&qs, &limits)?;
                ctx.verdict(f == g, "Frobenius number differs from the sieve");
            }
        }
        RgfCmd::Gens { q, minimal, verify } => {
            let qs = quot(q)?;
            let r = rgf_rational(qs.gens(), q.p, &limits)?;
            let mut g = gens_from_rgf(&r)?;
            if *minimal {
                g = minimal_generators(&GeneratorList::new(&g)?, &limits)?;
            }
            ctx.emit(join(&g), json!({ "generators": g }));
            if *verify {
                let direct = quotient_table(&qs, &limits)?;
                let generated = build_membership(&GeneratorList::new(&g)?, None, &limits)?;
                ctx.verdict(direct.same_semigroup(&generated)?, "generators do not give the quotient");
            }
        }
    }
    Ok(())
}

fn ct_cmd(cc: &CtCmd, ctx: &mut Ctx) -> crate::Result<()> {
    let limits = ctx.limits;
    match cc {
        CtCmd::Eval { expr, trunc, verify } => {
            let e = parse_expr(expr)?;
            let canonical = render_expr(&e).expect("parsed expressions have integer coefficients");
            match ct_report(&e) {
                Ok(rep) => {
                    let mut out = json!({
                        "expr": canonical,
                        "ct": ratfunc_json(&rep.primal),
                        "dual_checked": rep.dual.is_some(),
                        "method": "residues",
                    });
                    if *verify {
                        let direct = ct_series(&e, *trunc)?;
                        let ok = match rep.primal.series(direct.order().max(0) as usize) {
                            Ok(s) => (direct.x_offset..=direct.order()).all(|k| {
                                let got = if k < 0 { BigRational::zero() } else { s.coeffs()[k as usize].clone() };
                                direct.coeff(k) == Some(got)
                            }),
                            // a pole at x = 0: compare after clearing it
                            Err(_) => laurent_agrees(&rep.primal, &direct),
                        };
                        out["verified"] = json!(ok);
                        ctx.verdict(ok, "constant term disagrees with direct expansion");
                    }
                    ctx.emit(format!("{canonical}\n{}", rep.primal), out);
                }
                Err(Error::NonCoprimeFactors { first, second }) => {
                    ctx.warn(format!(
                        "factors {first} and {second} share a root; falling back to direct expansion"
                    ));
                    let s = ct_series(&e, *trunc)?;
                    let coeffs: Vec<Value> = s.coeffs.iter().map(rational_json).collect();
                    ctx.emit(
                        format!("{canonical}\n{}", s.to_string_in("x")),
                        json!({
                            "expr": canonical,
                            "series": { "x_offset": s.x_offset, "coeffs": coeffs },
                            "method": "series",
                        }),
                    );
                }
                Err(e) => return Err(e),
            }
        }
        CtCmd::Rgf { q, verify } => {
            let qs = quot(q)?;
            match ct_rgf_rational(qs.gens(), q.p) {
                Ok(f) => {
                    let den: Vec<u64> = qs.gens().original().iter().map(|&a| a / num::integer::gcd(a, q.p)).collect();
                    let closed = RgfRational::from_rational_function(&f, &den);
                    let (text, mut js) = match &closed {
                        Some(r) => (r.to_string(), r.to_json()),
                        None => (f.to_string(), ratfunc_json(&f)),
                    };
                    js["method"] = json!("ct");
                    ctx.emit(text, js);
                    if *verify {
                        let r = rgf_rational(qs.gens(), q.p, &limits)?;
                        ctx.verdict(r.to_rational_function() == f, "constant term differs from the series closed form");
                    }
                }
                Err(Error::NonCoprimeFactors { first, second }) => {
                    ctx.warn(format!(
                        "factors {first} and {second} share a root; falling back to the series method"
                    ));
                    let r = rgf_rational(qs.gens(), q.p, &limits)?;
                    let mut js = r.to_json();
                    js["method"] = json!("series");
                    ctx.emit(r.to_string(), js);
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

/// `f·x^k` for the pole order `k` at zero, compared against `x^k·direct`.
fn laurent_agrees(f: &RationalFunction, direct: &CtSeries) -> bool {
    let k = f.den().valuation();
    let shifted = f * &RationalFunction::x_pow(k as i64);
    let Ok(s) = shifted.series((direct.order() + k as i64).max(0) as usize) else {
        return false;
    };
    (direct.x_offset..=direct.order()).all(|e| {
        let idx = e + k as i64;
        let got = if idx < 0 { BigRational::zero() } else { s.coeffs()[idx as usize].clone() };
        direct.coeff(e) == Some(got)
    })
}

/// Outcome of one cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
}

fn check(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Check {
    Check {
        name,
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail(detail()) },
    }
}

/// Run every independent route to `⟨A⟩/p` and `RGF_p` against each other.
pub fn verify_instance(q: &QuotientSpec, limits: &Limits) -> crate::Result<Vec<Check>> {
    let mut out = Vec::new();
    let (gens, p) = (q.gens(), q.p());
    let table = quotient_table(q, limits)?;

    let r = verify_generators(q, limits)?;
    out.push(check("generator-system", r.passed, || format!("{:?}", r.generators)));

    let contained = gens.sorted().iter().all(|&a| table.contains(a) == Some(true));
    out.push(check("contains-A", contained, String::new));
    let base = build_membership(gens, None, limits)?;
    let p_in = base.contains(p).unwrap_or(false);
    let is_n = table.frobenius()?.is_none();
    out.push(check("all-of-N-iff-p-in-A", p_in == is_n, || {
        format!("p in A: {p_in}, quotient = N: {is_n}")
    }));

    let rr = rgf_rational(gens, p, limits)?;
    let h = 2 * rr.certified_to().unwrap_or(1);
    let s = rgf_series(gens, p, h, limits)?;
    let agree = s
        .coeffs()
        .iter()
        .zip(rr.expand(h as usize))
        .all(|(a, b)| BigInt::from(a.clone()) == b);
    out.push(check("closed-form-vs-series", agree, || format!("to order {h}")));

    match gens_from_rgf(&rr) {
        Ok(g) => {
            let generated = build_membership(&GeneratorList::new(&g)?, None, limits)?;
            out.push(check("closed-form-generators", table.same_semigroup(&generated)?, || {
                format!("{g:?}")
            }));
        }
        Err(Error::NegativeNumerator { exponent }) => out.push(Check {
            name: "closed-form-generators",
            status: CheckStatus::Skip(format!("negative numerator coefficient at x^{exponent}")),
        }),
        Err(e) => return Err(e),
    }

    let f1 = frobenius_from_rgf(gens, p, limits)?;
    let f2 = table.frobenius()?;
    out.push(check("frobenius-rgf-vs-sieve", f1 == f2, || format!("{f1:?} vs {f2:?}")));

    match ct_rgf_rational(gens, p) {
        Ok(f) => out.push(check("constant-term-vs-closed-form", f == rr.to_rational_function(), || {
            f.to_string()
        })),
        Err(Error::NonCoprimeFactors { first, second }) => out.push(Check {
            name: "constant-term-vs-closed-form",
            status: CheckStatus::Skip(format!("factors {first} and {second} share a root")),
        }),
        Err(e) => return Err(e),
    }
    Ok(out)
}

/// `2 ≤ n ≤ 4` generators in `1..=max_a` with gcd 1, and `2 ≤ p ≤ max_p`.
pub fn random_instance<R: Rng>(rng: &mut R, max_a: u64, max_p: u64) -> QuotientSpec {
    loop {
        let n = rng.gen_range(2..=4);
        let gens: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=max_a)).collect();
        let p = rng.gen_range(2..=max_p);
        if let Ok(q) = QuotientSpec::from_slice(&gens, p) {
            return q;
        }
    }
}

fn report_checks(ctx: &mut Ctx, results: &[(QuotientSpec, Vec<Check>)]) {
    let mut lines = Vec::new();
    let mut cases = Vec::new();
    let mut failures = 0usize;
    for (q, checks) in results {
        let label = format!("A={} p={}", join(q.gens().original()).replace(' ', ","), q.p());
        let mut js = Map::new();
        for c in checks {
            let (word, detail) = match &c.status {
                CheckStatus::Pass => ("pass", None),
                CheckStatus::Fail(d) => {
                    failures += 1;
                    ("FAIL", Some(d))
                }
                CheckStatus::Skip(d) => ("skip", Some(d)),
            };
            lines.push(match detail {
                Some(d) if !d.is_empty() => format!("{label} {}: {word} ({d})", c.name),
                _ => format!("{label} {}: {word}", c.name),
            });
            js.insert(c.name.to_string(), json!(word.to_lowercase()));
        }
        cases.push(json!({ "gens": q.gens().original(), "p": q.p(), "checks": js }));
    }
    lines.push(format!("{} instances, {} failures", results.len(), failures));
    ctx.emit(lines.join("\n"), json!({ "cases": cases, "failures": failures }));
    ctx.verdict(failures == 0, &format!("{failures} cross-checks disagree"));
}

/// Exit status helper for the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let out = run(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
