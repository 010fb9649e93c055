//! The `octic` command line: argument parsing, text and JSON rendering,
//! exit codes and the parallel sweep.
//!
//! | exit | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | `x^8 - m` is reducible |
//! | 3 | invalid input |
//! | 4 | internal assertion failed |

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::panic::{self, AssertUnwindSafe};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Number, Value};

use crate::arith::{is_prime_u64, ArithError, FactoredInteger, IntPoly};
use crate::field::{FieldElement, DEGREE};
use crate::monogenity::{
    monogenic_verdict_with_bound, search_generator, splitting_at_2, MonogenityError, SearchOutcome, Verdict,
    DEFAULT_SEARCH_BOUND,
};
use crate::newton::{common_index_divisor_test, ore_index_and_splitting, OreOutcome, SplittingReport};
use crate::octic::{
    classify_case, index_of_f, integral_basis, is_irreducible_pure_octic, reduce_parameter, squarefree_decompose,
    CaseId, Decomposition, IndexReport, IntegralBasis, OcticError,
};
use crate::oracle::{verify_basis, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REDUCIBLE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "octic", version, about = "Integral bases, indices and monogenity of pure octic fields")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Single {
    /// The parameter m of x^8 - m.
    #[arg(short = 'm', allow_negative_numbers = true, value_parser = parse_bigint)]
    m: BigInt,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integral basis of the ring of integers.
    Basis(Single),
    /// Case of m and its decomposition.
    Classify(Single),
    /// Index of x^8 - m and the field discriminant.
    Index(Single),
    /// Splitting of a prime.
    Split {
        #[command(flatten)]
        single: Single,
        #[arg(short = 'p', default_value_t = 2)]
        p: u64,
    },
    /// Monogenity verdict.
    Monogenic {
        #[command(flatten)]
        single: Single,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u32,
    },
    /// Bounded search for a small-index generator.
    Search {
        #[command(flatten)]
        single: Single,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u32,
    },
    /// Oracle checks on the integral basis.
    Verify(Single),
    /// Every reduced irreducible m in a range.
    Sweep {
        #[arg(long, allow_negative_numbers = true, value_parser = parse_bigint)]
        min: BigInt,
        #[arg(long, allow_negative_numbers = true, value_parser = parse_bigint)]
        max: BigInt,
        /// Run the oracle on every basis.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u32,
    },
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s).map_err(|e| format!("not an integer: {e}"))
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

#[derive(Debug)]
enum Failure {
    Reducible(BigInt),
    Invalid(String),
    Internal(String),
}

impl From<OcticError> for Failure {
    fn from(e: OcticError) -> Self {
        match e {
            OcticError::Reducible(m) => Failure::Reducible(m),
            OcticError::TooSmall(_) | OcticError::NotReduced(_) => Failure::Invalid(e.to_string()),
            OcticError::Arith(ArithError::PrimeTooLarge(_)) => Failure::Invalid(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl From<MonogenityError> for Failure {
    fn from(e: MonogenityError) -> Self {
        match e {
            MonogenityError::Octic(o) => o.into(),
            MonogenityError::NotApplicable(_) | MonogenityError::Unsupported(_) => Failure::Invalid(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_INVALID, text),
            };
        }
    };
    let result = panic::catch_unwind(AssertUnwindSafe(|| dispatch(&cli)));
    match result {
        Ok(Ok(stdout)) => Outcome::ok(stdout),
        Ok(Err(Failure::Reducible(m))) => Outcome::fail(EXIT_REDUCIBLE, format!("x^8 - ({m}) is reducible over Q\n")),
        Ok(Err(Failure::Invalid(msg))) => Outcome::fail(EXIT_INVALID, format!("invalid input: {msg}\n")),
        Ok(Err(Failure::Internal(msg))) => Outcome::fail(EXIT_INTERNAL, format!("internal error: {msg}\n")),
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            Outcome::fail(EXIT_INTERNAL, format!("internal error: {msg}\n"))
        }
    }
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Basis(s) => single(cli.json, &s.m, |f| f.basis()),
        Command::Classify(s) => single(cli.json, &s.m, |f| f.classify()),
        Command::Index(s) => single(cli.json, &s.m, |f| f.index()),
        Command::Split { single: s, p } => single(cli.json, &s.m, |f| f.split(*p)),
        Command::Monogenic { single: s, bound } => single(cli.json, &s.m, |f| f.monogenic(*bound)),
        Command::Search { single: s, bound } => single(cli.json, &s.m, |f| f.search(*bound)),
        Command::Verify(s) => single(cli.json, &s.m, |f| f.verify()),
        Command::Sweep { min, max, verify, bound } => sweep(cli.json, min, max, *verify, *bound),
    })
}

/// A validated field: original and reduced parameter, decomposition, case.
struct Field {
    m: BigInt,
    reduced: BigInt,
    decomposition: Decomposition,
    case: CaseId,
}

/// Rendered sections: JSON fields and text lines.
#[derive(Default)]
struct Sections {
    json: Map<String, Value>,
    text: Vec<String>,
}

impl Sections {
    fn push(&mut self, key: &str, value: Value, text: String) {
        self.json.insert(key.to_string(), value);
        self.text.push(text);
    }
}

fn field(m: &BigInt) -> Result<Field, Failure> {
    let reduced = reduce_parameter(m)?.reduced;
    if !is_irreducible_pure_octic(&reduced) {
        return Err(Failure::Reducible(m.clone()));
    }
    let decomposition = squarefree_decompose(&reduced)?;
    let case = classify_case(&reduced);
    Ok(Field { m: m.clone(), reduced, decomposition, case })
}

fn single(json: bool, m: &BigInt, body: impl FnOnce(&Field) -> Result<Sections, Failure>) -> Result<String, Failure> {
    let f = field(m)?;
    let sections = body(&f)?;
    let mut obj = header_json(&f);
    obj.extend(sections.json);
    if json {
        Ok(render_json(&Value::Object(obj)))
    } else {
        let mut out = header_text(&f);
        for line in sections.text {
            out.push_str(&line);
            if !line.ends_with('\n') {
                out.push('\n');
            }
        }
        Ok(out)
    }
}

/// Pretty JSON with a trailing newline. Numbers keep their exact digits, so
/// parsing and re-rendering gives the same bytes.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn num(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

fn factored_json(f: &FactoredInteger) -> Value {
    Value::Array(f.factors().iter().map(|&(p, e)| json!([p, e])).collect())
}

fn header_json(f: &Field) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("m".into(), num(&f.m));
    obj.insert("reduced_m".into(), num(&f.reduced));
    obj.insert("case".into(), Value::String(f.case.label().to_string()));
    obj.insert(
        "decomposition".into(),
        json!({
            "a": f.decomposition.a_values().iter().map(num).collect::<Vec<_>>(),
            "A": f.decomposition.big_a_values().iter().map(num).collect::<Vec<_>>(),
        }),
    );
    obj
}

fn header_text(f: &Field) -> String {
    let mut out = String::new();
    writeln!(out, "m = {}", f.m).unwrap();
    if f.reduced != f.m {
        writeln!(out, "reduced m = {}", f.reduced).unwrap();
    }
    writeln!(out, "case = {}", f.case).unwrap();
    let a: Vec<String> = f.decomposition.a_values().iter().map(ToString::to_string).collect();
    let big: Vec<String> = f.decomposition.big_a_values().iter().map(ToString::to_string).collect();
    writeln!(out, "a1..a7 = {}", a.join(", ")).unwrap();
    writeln!(out, "A2..A7 = {}", big.join(", ")).unwrap();
    out
}

fn element_json(numerator: &IntPoly, denominator: &BigInt) -> Value {
    let coeffs: Vec<Value> = (0..DEGREE).map(|i| num(&numerator.coeff(i))).collect();
    json!({ "numerator": coeffs, "denominator": num(denominator) })
}

fn field_element_json(e: &FieldElement) -> Value {
    let (scaled, d) = e.integral_numerator();
    let coeffs: Vec<BigInt> = scaled.coords().iter().map(|c| c.to_integer()).collect();
    element_json(&IntPoly::new(coeffs), &d)
}

fn basis_json(b: &IntegralBasis) -> Value {
    Value::Array(b.elements().iter().map(|e| element_json(e.numerator(), e.denominator())).collect())
}

fn index_json(r: &IndexReport) -> Value {
    json!({ "factored": factored_json(&r.index), "value": num(&r.index.to_integer()) })
}

fn d_k_json(r: &IndexReport) -> Value {
    json!({ "sign": r.d_k.sign(), "factored": factored_json(&r.d_k.abs()) })
}

fn verification_json(r: &VerificationReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    json!({ "overall": r.overall(), "checks": checks })
}

fn splitting_json(r: &SplittingReport, source: &str) -> Value {
    let entries: Vec<Value> = r.pairs().iter().map(|&(e, f)| json!({ "e": e, "f": f })).collect();
    json!({
        "p": r.p,
        "supported": true,
        "source": source,
        "primes": entries,
        "sum_ef": r.total_degree(),
        "common_index_divisor": common_index_divisor_test(r),
    })
}

fn search_json(o: &SearchOutcome) -> Value {
    json!({
        "bound": o.bound,
        "examined": o.examined,
        "exhaustive": o.exhaustive,
        "not_primitive": o.not_primitive,
        "index_one_count": o.index_one_count,
        "minimal_index": o.minimal_index().map(num),
        "best": o.best.as_ref().map(|c| json!({
            "coordinates": c.coordinates.map(|y| y.to_vec()),
            "element": field_element_json(&c.element),
            "index": num(&c.index),
        })),
    })
}

fn verdict_json(v: &Verdict) -> Value {
    json!({
        "tag": v.tag.label(),
        "reason": v.reason.to_string(),
        "reason_code": v.reason.code(),
        "witness": v.witness.as_ref().map(field_element_json),
        "evidence": v.evidence.as_ref().map(search_json),
    })
}

fn search_text(o: &SearchOutcome) -> String {
    let mut out = format!(
        "search box |y_k| <= {}: {} candidates, {} not primitive, {} of index 1",
        o.bound, o.examined, o.not_primitive, o.index_one_count
    );
    if let Some(best) = &o.best {
        write!(out, "\nminimal index {} at {}", best.index, best.element).unwrap();
    }
    out
}

impl Field {
    fn basis(&self) -> Result<Sections, Failure> {
        let b = integral_basis(&self.reduced)?;
        let r = index_of_f(&self.reduced)?;
        let mut s = Sections::default();
        let lines: Vec<String> = b.elements().iter().enumerate().map(|(k, e)| format!("  w{k} = {e}")).collect();
        s.push("basis", basis_json(&b), format!("basis:\n{}", lines.join("\n")));
        s.push("index", index_json(&r), format!("ind(f) = {}", r.index));
        Ok(s)
    }

    fn classify(&self) -> Result<Sections, Failure> {
        let mut s = Sections::default();
        let inc = self.case.two_adic_increment();
        s.push("two_adic_increment", json!(inc), format!("2-adic increment = {inc}"));
        Ok(s)
    }

    fn index(&self) -> Result<Sections, Failure> {
        let r = index_of_f(&self.reduced)?;
        let mut s = Sections::default();
        s.push("index", index_json(&r), format!("ind(f) = {} = {}", r.index, r.index.to_integer()));
        s.push("d_K", d_k_json(&r), format!("d_K = {}", r.d_k));
        s.push(
            "disc_f",
            json!({ "sign": r.disc_f.sign(), "factored": factored_json(&r.disc_f.abs()) }),
            format!("disc(f) = {}", r.disc_f),
        );
        Ok(s)
    }

    fn split(&self, p: u64) -> Result<Sections, Failure> {
        if !is_prime_u64(p) {
            return Err(Failure::Invalid(format!("{p} is not prime")));
        }
        let mut s = Sections::default();
        let found = if p == 2 {
            match splitting_at_2(&self.reduced) {
                Ok((r, src)) => Some((r, format!("{src:?}").to_lowercase())),
                Err(MonogenityError::Unsupported(_)) => None,
                Err(e) => return Err(e.into()),
            }
        } else {
            let f = IntPoly::pure(8, &self.reduced);
            match ore_index_and_splitting(&f, p) {
                Ok(OreOutcome::Regular { report, .. }) => Some((report, "ore".to_string())),
                Ok(OreOutcome::Irregular(_)) => None,
                Err(e) => return Err(Failure::Internal(e.to_string())),
            }
        };
        match found {
            Some((r, src)) => s.push("splitting", splitting_json(&r, &src), format!("{r} [{src}]")),
            None => s.push(
                "splitting",
                json!({ "p": p, "supported": false }),
                format!("p={p}: not covered (the polygon is not p-regular)"),
            ),
        }
        Ok(s)
    }

    fn monogenic(&self, bound: u32) -> Result<Sections, Failure> {
        let v = monogenic_verdict_with_bound(&self.reduced, bound)?;
        let mut s = Sections::default();
        let mut text = format!("verdict = {}\nreason = {}", v.tag, v.reason);
        if let Some(w) = &v.witness {
            write!(text, "\nwitness = {w}").unwrap();
        }
        if let Some(o) = &v.evidence {
            write!(text, "\n{}", search_text(o)).unwrap();
        }
        s.push("verdict", verdict_json(&v), text);
        Ok(s)
    }

    fn search(&self, bound: u32) -> Result<Sections, Failure> {
        let o = search_generator(&self.reduced, bound)?;
        let mut s = Sections::default();
        s.push("search", search_json(&o), search_text(&o));
        Ok(s)
    }

    fn verify(&self) -> Result<Sections, Failure> {
        let b = integral_basis(&self.reduced)?;
        let r = index_of_f(&self.reduced)?;
        let v = verify_basis(&self.reduced)?;
        let mut s = Sections::default();
        s.push("basis", basis_json(&b), format!("basis = {b}"));
        s.push("index", index_json(&r), format!("ind(f) = {}", r.index));
        s.push("d_K", d_k_json(&r), format!("d_K = {}", r.d_k));
        s.push("verification", verification_json(&v), v.to_string());
        if !v.overall() {
            return Err(Failure::Internal(format!("verification failed:\n{v}")));
        }
        Ok(s)
    }
}

/// One row of a sweep.
struct SweepRow {
    m: BigInt,
    case: CaseId,
    index: FactoredInteger,
    verdict: Verdict,
    verification: Option<VerificationReport>,
}

fn sweep_one(m: &BigInt, verify: bool, bound: u32) -> Result<Option<SweepRow>, Failure> {
    if m.magnitude() < &2u32.into() {
        return Ok(None);
    }
    let red = reduce_parameter(m)?;
    if &red.reduced != m || !is_irreducible_pure_octic(m) {
        return Ok(None);
    }
    let case = classify_case(m);
    let index = index_of_f(m)?.index;
    let verdict = monogenic_verdict_with_bound(m, bound)?;
    let verification = if verify { Some(verify_basis(m)?) } else { None };
    Ok(Some(SweepRow { m: m.clone(), case, index, verdict, verification }))
}

fn sweep(json: bool, min: &BigInt, max: &BigInt, verify: bool, bound: u32) -> Result<String, Failure> {
    if min > max {
        return Err(Failure::Invalid(format!("empty range [{min}, {max}]")));
    }
    let width = max - min;
    let width: u64 = u64::try_from(&width).map_err(|_| Failure::Invalid("range too wide".into()))?;
    let ms: Vec<BigInt> = (0..=width).map(|k| min + k).collect();
    let rows: Vec<Result<Option<SweepRow>, Failure>> = ms.par_iter().map(|m| sweep_one(m, verify, bound)).collect();
    let mut kept = Vec::new();
    for r in rows {
        if let Some(row) = r? {
            kept.push(row);
        }
    }

    let mut cases: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut verdicts: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut failures = Vec::new();
    for row in &kept {
        *cases.entry(row.case.label()).or_default() += 1;
        *verdicts.entry(row.verdict.tag.label()).or_default() += 1;
        if let Some(v) = &row.verification {
            if !v.overall() {
                let names: Vec<&str> = v.failures().iter().map(|c| c.name).collect();
                failures.push((row.m.clone(), names.join(",")));
            }
        }
    }

    let out = if json {
        let rows: Vec<Value> = kept
            .iter()
            .map(|r| {
                json!({
                    "m": num(&r.m),
                    "case": r.case.label(),
                    "index": factored_json(&r.index),
                    "verdict": r.verdict.tag.label(),
                    "reason_code": r.verdict.reason.code(),
                    "verified": r.verification.as_ref().map(|v| v.overall()),
                })
            })
            .collect();
        render_json(&json!({
            "range": [num(min), num(max)],
            "fields": kept.len(),
            "verified": verify,
            "bound": bound,
            "cases": cases,
            "verdicts": verdicts,
            "failures": failures.iter().map(|(m, c)| json!({ "m": num(m), "checks": c })).collect::<Vec<_>>(),
            "rows": rows,
        }))
    } else {
        let mut out = String::new();
        for r in &kept {
            let check = match &r.verification {
                Some(v) if v.overall() => " verified",
                Some(_) => " VERIFICATION FAILED",
                None => "",
            };
            writeln!(out, "{:>8} {:<11} ind={:<16} {}{}", r.m, r.case.label(), r.index, r.verdict.tag, check).unwrap();
        }
        writeln!(out, "fields: {}", kept.len()).unwrap();
        for (c, n) in &cases {
            writeln!(out, "  {c}: {n}").unwrap();
        }
        for (v, n) in &verdicts {
            writeln!(out, "  {v}: {n}").unwrap();
        }
        if verify {
            writeln!(out, "verification failures: {}", failures.len()).unwrap();
            for (m, c) in &failures {
                writeln!(out, "  m={m}: {c}").unwrap();
            }
        }
        out
    };
    if !failures.is_empty() {
        return Err(Failure::Internal(format!("{out}verification failed for {} fields", failures.len())));
    }
    Ok(out)
}
