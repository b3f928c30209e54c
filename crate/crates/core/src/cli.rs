//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (or an internal
//! inconsistency), 2 invalid input.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::combine::{check_certificate, combine_n, CombinationCertificate};
use crate::cyclo::{
    gcd_oracle, theorem0_certificate, theorem0_products, DivisorInstance, MAX_DEGREE,
};
use crate::error::Error;
use crate::int::{ext_gcd, Integers};
use crate::poly::{IntPolys, PolyZ};
use crate::products::{check_sum_products, int_sum_of_products, SumProductsCertificate};
use crate::ring::{BezoutPair, GcdRing, Ring};
use crate::wire::{self, CertificateKind, WireElement, WireError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gcdcert",
    version,
    about = "Build and check gcd and ideal-product certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Int,
    Polyz,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Express the gcd of the elements as a linear combination of them.
    Combine {
        #[arg(long, value_enum)]
        ring: RingArg,
        /// Comma-separated integers (int ring only).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        elements: Vec<String>,
        /// JSON file with "elements" and optional "witnesses".
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certificate for the family (1 - x^D) / (1 - x^d) over the divisors.
    Theorem0 {
        #[arg(short = 'D')]
        degree: usize,
        #[arg(short = 'd', value_delimiter = ',', required = true)]
        divisors: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generator of the sum of all products omitting one element.
    Products {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        elements: Vec<String>,
        #[arg(short = 'D')]
        degree: Option<usize>,
        #[arg(short = 'd', value_delimiter = ',')]
        divisors: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate file.
    Verify { path: PathBuf },
}

/// A command failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn verify(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VERIFY,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() {
            EXIT_INPUT
        } else {
            EXIT_VERIFY
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<WireError> for Failure {
    fn from(e: WireError) -> Self {
        Failure::input(e.to_string())
    }
}

type CmdResult = Result<Value, Failure>;

type WitnessTable<E> = HashMap<(usize, usize), (E, E)>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let (value, output) = match command {
        Command::Combine {
            ring,
            elements,
            file,
            output,
        } => (run_combine(ring, &elements, file.as_deref())?, output),
        Command::Theorem0 {
            degree,
            divisors,
            output,
        } => (run_theorem0(degree, divisors)?, output),
        Command::Products {
            ring,
            elements,
            degree,
            divisors,
            output,
        } => (run_products(ring, &elements, degree, divisors)?, output),
        Command::Verify { path } => {
            let (report, ok) = run_verify(&path)?;
            emit(&report, None, out)?;
            return Ok(if ok { EXIT_OK } else { EXIT_VERIFY });
        }
    };
    emit(&value, output.as_deref(), out)?;
    Ok(EXIT_OK)
}

fn emit(value: &Value, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    let written = match path {
        Some(path) => fs::write(path, text + "\n"),
        None => writeln!(out, "{text}"),
    };
    written.map_err(|e| Failure::input(format!("cannot write output: {e}")))
}

fn parse_ints(raw: &[String]) -> Result<Vec<BigInt>, Failure> {
    raw.iter()
        .map(|s| BigInt::from_wire(&Value::String(s.trim().to_string())))
        .collect::<Result<_, _>>()
        .map_err(Failure::from)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{} is not valid JSON: {e}", path.display())))
}

fn ring_name(ring: RingArg) -> &'static str {
    match ring {
        RingArg::Int => BigInt::RING,
        RingArg::Polyz => PolyZ::RING,
    }
}

/// Witnesses given as `{"i": 0, "j": 1, "u": …, "v": …}` with zero-based
/// indices into "elements".
fn parse_witnesses<E: WireElement>(value: Option<&Value>) -> Result<WitnessTable<E>, Failure> {
    let mut table = HashMap::new();
    let Some(value) = value else {
        return Ok(table);
    };
    let entries = value
        .as_array()
        .ok_or_else(|| Failure::input("\"witnesses\" must be an array"))?;
    for entry in entries {
        let index = |key: &str| {
            entry
                .get(key)
                .and_then(Value::as_u64)
                .map(|i| i as usize)
                .ok_or_else(|| Failure::input(format!("witness needs a numeric \"{key}\"")))
        };
        let coeff = |key: &str| {
            entry
                .get(key)
                .ok_or_else(|| Failure::input(format!("witness needs \"{key}\"")))
                .and_then(|v| E::from_wire(v).map_err(Failure::from))
        };
        let (i, j) = (index("i")?, index("j")?);
        let (u, v) = (coeff("u")?, coeff("v")?);
        if i < j {
            table.insert((i, j), (u, v));
        } else {
            table.insert((j, i), (v, u));
        }
    }
    Ok(table)
}

fn certify_combination<R>(
    ring: &R,
    elements: &[R::Elem],
    witnesses: &WitnessTable<R::Elem>,
    fallback: Option<&dyn Fn(&R::Elem, &R::Elem) -> BezoutPair<R::Elem>>,
) -> CmdResult
where
    R: GcdRing,
    R::Elem: WireElement,
{
    let cert = combine_n(ring, elements, |i, j| {
        let (a, b) = (&elements[i], &elements[j]);
        match (witnesses.get(&(i, j)), fallback) {
            (Some((u, v)), _) => {
                let pair = BezoutPair {
                    a: a.clone(),
                    b: b.clone(),
                    g: ring.zero(),
                    u: u.clone(),
                    v: v.clone(),
                };
                Ok(BezoutPair {
                    g: pair.combination(ring),
                    ..pair
                })
            }
            (None, Some(fill)) => Ok(fill(a, b)),
            (None, None) => Err(Error::MissingWitness { i, j }),
        }
    })?;
    self_check_combination(ring, &cert)?;
    Ok(wire::combination_to_json(&cert))
}

fn self_check_combination<R>(
    ring: &R,
    cert: &CombinationCertificate<R::Elem>,
) -> Result<(), Failure>
where
    R: GcdRing,
{
    let failures = check_certificate(cert, ring);
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::verify(format!(
            "certificate failed self-check: {failures:?}"
        )))
    }
}

fn run_combine(ring: RingArg, inline: &[String], file: Option<&Path>) -> CmdResult {
    let doc = file.map(read_json).transpose()?;
    if let Some(doc) = &doc {
        if !inline.is_empty() {
            return Err(Failure::input(
                "give elements inline or in --file, not both",
            ));
        }
        if let Ok(tag) = wire::ring_tag(doc) {
            if tag != ring_name(ring) {
                return Err(Failure::input(format!("file is for ring {tag:?}")));
            }
        }
    }
    let field = |key: &str| doc.as_ref().and_then(|d| d.get(key));
    match ring {
        RingArg::Int => {
            let elements = match field("elements") {
                Some(v) => wire::elements_from_wire::<BigInt>(v)?,
                None => parse_ints(inline)?,
            };
            let witnesses = parse_witnesses::<BigInt>(field("witnesses"))?;
            let fill = |a: &BigInt, b: &BigInt| ext_gcd(a, b);
            certify_combination(&Integers, &elements, &witnesses, Some(&fill))
        }
        RingArg::Polyz => {
            if !inline.is_empty() || doc.is_none() {
                return Err(Failure::input("polynomials are only read from --file"));
            }
            let elements = field("elements")
                .ok_or_else(|| Failure::input("missing field \"elements\""))
                .and_then(|v| wire::elements_from_wire::<PolyZ>(v).map_err(Failure::from))?;
            let witnesses = parse_witnesses::<PolyZ>(field("witnesses"))?;
            certify_combination(&IntPolys, &elements, &witnesses, None)
        }
    }
}

fn instance(degree: usize, divisors: Vec<usize>) -> Result<DivisorInstance, Failure> {
    if degree > MAX_DEGREE {
        return Err(Failure::input(format!(
            "D = {degree} exceeds the limit {MAX_DEGREE}"
        )));
    }
    Ok(DivisorInstance::new(degree, divisors)?)
}

fn run_theorem0(degree: usize, divisors: Vec<usize>) -> CmdResult {
    let instance = instance(degree, divisors)?;
    let cert = theorem0_certificate(&instance)?;
    self_check_combination(&IntPolys, &cert)?;
    let oracle = gcd_oracle(&instance)?;
    if oracle != cert.gcd {
        return Err(Failure::verify(format!(
            "certificate gcd {} differs from oracle gcd {oracle}",
            cert.gcd
        )));
    }
    Ok(wire::combination_to_json(&cert))
}

fn products_value<R>(ring: &R, cert: &SumProductsCertificate<R::Elem>) -> CmdResult
where
    R: Ring,
    R::Elem: WireElement,
{
    let failures = check_sum_products(cert, ring);
    if !failures.is_empty() {
        return Err(Failure::verify(format!(
            "certificate failed self-check: {failures:?}"
        )));
    }
    Ok(wire::products_to_json(cert))
}

fn run_products(
    ring: RingArg,
    inline: &[String],
    degree: Option<usize>,
    divisors: Vec<usize>,
) -> CmdResult {
    match ring {
        RingArg::Int => {
            if degree.is_some() || !divisors.is_empty() {
                return Err(Failure::input("-D/-d apply to --ring polyz only"));
            }
            let elements = parse_ints(inline)?;
            if elements.len() < 2 {
                return Err(Failure::input("at least two elements are required"));
            }
            if let Some(i) = elements.iter().position(|e| e == &BigInt::default()) {
                return Err(Error::ZeroElement { index: i }.into());
            }
            products_value(&Integers, &int_sum_of_products(&elements)?)
        }
        RingArg::Polyz => {
            if !inline.is_empty() {
                return Err(Failure::input(
                    "--ring polyz takes -D and -d, not --elements",
                ));
            }
            let degree = degree.ok_or_else(|| Failure::input("-D is required for --ring polyz"))?;
            let instance = instance(degree, divisors)?;
            if instance.divisors.len() < 2 {
                return Err(Failure::input("at least two divisors are required"));
            }
            products_value(&IntPolys, &theorem0_products(&instance)?)
        }
    }
}

fn report<F: std::fmt::Display>(kind: &str, ring: &str, failures: &[F]) -> (Value, bool) {
    let list: Vec<String> = failures.iter().map(ToString::to_string).collect();
    let ok = list.is_empty();
    (
        json!({ "certificate": kind, "ring": ring, "valid": ok, "failures": list }),
        ok,
    )
}

/// The structured report and whether the certificate is valid.
fn run_verify(path: &Path) -> Result<(Value, bool), Failure> {
    let doc = read_json(path)?;
    let kind = wire::certificate_kind(&doc)?;
    let tag = wire::ring_tag(&doc)?.to_string();
    let result = match (kind, tag.as_str()) {
        (CertificateKind::Combination, "int") => {
            let cert = wire::combination_from_json::<BigInt>(&doc)?;
            report("combination", &tag, &check_certificate(&cert, &Integers))
        }
        (CertificateKind::Combination, "polyz") => {
            let cert = wire::combination_from_json::<PolyZ>(&doc)?;
            report("combination", &tag, &check_certificate(&cert, &IntPolys))
        }
        (CertificateKind::SumProducts, "int") => {
            let cert = wire::products_from_json::<BigInt>(&doc)?;
            report("products", &tag, &check_sum_products(&cert, &Integers))
        }
        (CertificateKind::SumProducts, "polyz") => {
            let cert = wire::products_from_json::<PolyZ>(&doc)?;
            report("products", &tag, &check_sum_products(&cert, &IntPolys))
        }
        (_, other) => return Err(Failure::input(format!("unknown ring {other:?}"))),
    };
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("gcdcert").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn json_out(args: &[&str]) -> Value {
        let (code, out, err) = run_args(args);
        assert_eq!(code, 0, "{err}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn combine_int_inline() {
        let v = json_out(&["combine", "--ring", "int", "--elements", "6,10,15"]);
        assert_eq!(v["gcd"], json!("1"));
        let v = json_out(&["combine", "--ring", "int", "--elements", "7"]);
        assert_eq!(
            (v["gcd"].clone(), v["coefficients"].clone()),
            (json!("7"), json!(["1"]))
        );
        let v = json_out(&["combine", "--ring", "int", "--elements", "-9"]);
        assert_eq!(v["coefficients"], json!(["-1"]));
    }

    #[test]
    fn combine_rejects_bad_input() {
        assert_eq!(
            run_args(&["combine", "--ring", "int", "--elements", "6,x"]).0,
            2
        );
        assert_eq!(
            run_args(&["combine", "--ring", "int", "--elements", "6,0"]).0,
            2
        );
        assert_eq!(
            run_args(&["combine", "--ring", "polyz", "--elements", "1"]).0,
            2
        );
        assert_eq!(run_args(&["combine", "--ring", "rational"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
    }

    #[test]
    fn theorem0_examples() {
        let v = json_out(&["theorem0", "-D", "6", "-d", "2,3"]);
        assert_eq!(v["gcd"], json!({"coeffs": ["1", "-1", "1"]}));
        assert_eq!(v["ring"], json!("polyz"));
        json_out(&["theorem0", "-D", "6", "-d", "1,2,3"]);
        assert_eq!(run_args(&["theorem0", "-D", "6", "-d", "4"]).0, 2);
        assert_eq!(run_args(&["theorem0", "-D", "20000", "-d", "1"]).0, 2);
    }

    #[test]
    fn products_examples() {
        let v = json_out(&["products", "--ring", "int", "--elements", "4,6,10"]);
        assert_eq!(v["generator"], json!("4"));
        let v = json_out(&["products", "--ring", "int", "--elements", "2,3"]);
        assert_eq!(v["generator"], json!("1"));
        let v = json_out(&["products", "--ring", "polyz", "-D", "6", "-d", "1,2,3"]);
        assert_eq!(v["products"].as_array().unwrap().len(), 3);
        assert_eq!(
            run_args(&["products", "--ring", "int", "--elements", "4"]).0,
            2
        );
        assert_eq!(run_args(&["products", "--ring", "polyz", "-d", "1,2"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("theorem0"));
    }
}
