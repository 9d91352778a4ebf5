//! Text formats: modular-form coefficient tables, Hecke-character local
//! data and AFE configuration.
//!
//! Coefficient file:
//!
//! ```text
//! weight 12 level 1 character trivial
//! 1 1
//! 2 -24
//! ```
//!
//! Hecke file (`k/n` means `e^{2πik/n}`, `re,im` a complex number):
//!
//! ```text
//! field-disc -3 chi-order 3
//! 7 split 1/3 2/3
//! 5 inert 0/1
//! ```
//!
//! Config file: `key = value` lines. Blank lines and lines starting with
//! `#` are ignored in all three formats.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::analytic::{AfeConfig, AnalyticError, EulerData};
use crate::localfactor::RepTag;
use crate::monomial::{ChiValue, HeckeLocalData, Splitting};
use crate::satake::{is_prime, satake_from_hecke, satake_from_integer, SatakeClass, SatakeError};

/// Indices above this are rejected; keeps the multiplicativity audit cheap.
pub const MAX_INDEX: u64 = 10_000_000;

/// Relative tolerance for multiplicativity of decimal coefficients.
pub const DECIMAL_TOL: f64 = 1e-9;

/// `| |χ| − 1 |` above this is a non-unit value.
pub const UNIT_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IngestError {
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("coefficient a_1 missing")]
    MissingA1,
    #[error("a_1 = {0}, expected 1")]
    NotNormalized(String),
    #[error("multiplicativity fails at a({m})·a({n}) != a({})", m * n)]
    Multiplicativity { m: u64, n: u64 },
    #[error("character {0:?} unsupported, only `trivial`")]
    UnsupportedCharacter(String),
    #[error("line {line}: prime {p} listed twice")]
    DuplicatePrime { line: usize, p: u64 },
    #[error("line {line}: {splitting} prime {p} takes {expected} value(s), found {found}")]
    Arity {
        line: usize,
        p: u64,
        splitting: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: |chi| != 1 at p = {p} with finite character order")]
    NonUnit { line: usize, p: u64 },
    #[error("line {line}: zero character value at p = {p}")]
    ZeroValue { line: usize, p: u64 },
    #[error("line {line}: {p} is not prime")]
    NotPrime { line: usize, p: u64 },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Satake(#[from] SatakeError),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
}

fn syntax(line: usize, msg: impl Into<String>) -> IngestError {
    IngestError::Syntax { line, msg: msg.into() }
}

fn read(path: &Path) -> Result<String, IngestError> {
    std::fs::read_to_string(path).map_err(|e| IngestError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational64, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: i64 = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: i64 = den.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if den == 0 {
        return Err(format!("zero denominator in {s:?}"));
    }
    // Rational64::new negates i64::MIN when normalizing a negative denominator
    if num == i64::MIN || den == i64::MIN {
        return Err(format!("out of range: {s:?}"));
    }
    Ok(Rational64::new(num, den))
}

/// A coefficient as written: exact integer or decimal.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(#[serde(serialize_with = "ser_bigint")] BigInt),
    Real(f64),
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Coefficient {
    pub fn to_f64(&self) -> f64 {
        match self {
            Coefficient::Int(b) => b.to_f64().unwrap_or(f64::NAN),
            Coefficient::Real(x) => *x,
        }
    }

    fn parse(s: &str) -> Option<Self> {
        let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
        if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
            return s.parse::<BigInt>().ok().map(Coefficient::Int);
        }
        s.parse::<f64>().ok().filter(|x| x.is_finite()).map(Coefficient::Real)
    }

    fn write(&self) -> String {
        match self {
            Coefficient::Int(b) => b.to_string(),
            Coefficient::Real(x) => format!("{x:?}"),
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Coefficient::Int(b) => b.is_one(),
            Coefficient::Real(x) => *x == 1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParsedForm {
    pub weight: u32,
    pub level: u64,
    pub coefficients: BTreeMap<u64, Coefficient>,
    pub source_path: String,
}

impl ParsedForm {
    /// `Δ = q∏(1−qⁿ)²⁴` up to `n_max`.
    pub fn delta(n_max: usize) -> Self {
        let coefficients = crate::delta::tau_bigints(n_max)
            .into_iter()
            .enumerate()
            .map(|(i, t)| (i as u64 + 1, Coefficient::Int(t)))
            .collect();
        Self {
            weight: 12,
            level: 1,
            coefficients,
            source_path: "builtin:delta".into(),
        }
    }

    pub fn get(&self, n: u64) -> Option<&Coefficient> {
        self.coefficients.get(&n)
    }

    /// Largest `N` such that every `1..=N` is present.
    pub fn contiguous_len(&self) -> u64 {
        let mut n = 0;
        for &k in self.coefficients.keys() {
            if k != n + 1 {
                break;
            }
            n = k;
        }
        n
    }
}

fn smallest_prime_power(n: u64) -> (u64, u64) {
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    let mut pk = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        pk *= p;
    }
    (pk, m)
}

/// Checks `a(p^k·m) = a(p^k)·a(m)` for every stored `n = p^k·m` with `p` its
/// smallest prime factor and `m > 1`, whenever both factors are stored.
/// Returns the first violation as `(p^k, m)`.
pub fn multiplicativity_audit(coeffs: &BTreeMap<u64, Coefficient>) -> Result<(), IngestError> {
    for (&n, a_n) in coeffs {
        if n < 6 {
            continue;
        }
        let (pk, m) = smallest_prime_power(n);
        if m == 1 {
            continue;
        }
        let (Some(a), Some(b)) = (coeffs.get(&pk), coeffs.get(&m)) else {
            continue;
        };
        let ok = match (a_n, a, b) {
            (Coefficient::Int(c), Coefficient::Int(a), Coefficient::Int(b)) => *c == a * b,
            _ => {
                let prod = a.to_f64() * b.to_f64();
                (a_n.to_f64() - prod).abs() <= DECIMAL_TOL * prod.abs().max(1.0)
            }
        };
        if !ok {
            return Err(IngestError::Multiplicativity { m: pk, n: m });
        }
    }
    Ok(())
}

fn parse_form_header(line: usize, text: &str) -> Result<(u32, u64), IngestError> {
    let t: Vec<&str> = text.split_whitespace().collect();
    match t.as_slice() {
        ["weight", k, "level", n, "character", ch] => {
            let k: u32 = k.parse().map_err(|_| syntax(line, format!("bad weight {k:?}")))?;
            let n: u64 = n.parse().map_err(|_| syntax(line, format!("bad level {n:?}")))?;
            if n == 0 {
                return Err(syntax(line, "level must be positive"));
            }
            if *ch != "trivial" {
                return Err(IngestError::UnsupportedCharacter(ch.to_string()));
            }
            Ok((k, n))
        }
        _ => Err(syntax(line, "expected `weight K level N character trivial`")),
    }
}

pub fn parse_form_str(text: &str, source: &str) -> Result<ParsedForm, IngestError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty file"))?;
    let (weight, level) = parse_form_header(hl, header)?;
    let mut coefficients = BTreeMap::new();
    let mut last = 0u64;
    for (ln, l) in lines {
        let mut parts = l.split_whitespace();
        let (Some(n), Some(a), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(syntax(ln, "expected `n a_n`"));
        };
        let n: u64 = n.parse().map_err(|_| syntax(ln, format!("bad index {n:?}")))?;
        if n == 0 || n > MAX_INDEX {
            return Err(syntax(ln, format!("index {n} outside 1..={MAX_INDEX}")));
        }
        if n <= last {
            return Err(syntax(ln, format!("index {n} not ascending")));
        }
        last = n;
        let a = Coefficient::parse(a).ok_or_else(|| syntax(ln, format!("bad coefficient {a:?}")))?;
        coefficients.insert(n, a);
    }
    match coefficients.get(&1) {
        None => return Err(IngestError::MissingA1),
        Some(a) if !a.is_one() => return Err(IngestError::NotNormalized(a.write())),
        _ => {}
    }
    multiplicativity_audit(&coefficients)?;
    Ok(ParsedForm {
        weight,
        level,
        coefficients,
        source_path: source.to_string(),
    })
}

pub fn parse_form(path: impl AsRef<Path>) -> Result<ParsedForm, IngestError> {
    let path = path.as_ref();
    parse_form_str(&read(path)?, &path.display().to_string())
}

pub fn serialize_form(f: &ParsedForm) -> String {
    let mut out = format!("weight {} level {} character trivial\n", f.weight, f.level);
    for (n, a) in &f.coefficients {
        let _ = writeln!(out, "{n} {}", a.write());
    }
    out
}

/// Satake classes at primes not dividing the level.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SatakeTable {
    pub classes: BTreeMap<u64, SatakeClass>,
    /// Primes dividing the level that were present in the file.
    pub skipped: Vec<u64>,
}

impl SatakeTable {
    pub fn ramified(&self, level: u64) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        let mut n = level;
        let mut p = 2;
        while p * p <= n {
            while n.is_multiple_of(p) {
                out.insert(p);
                n /= p;
            }
            p += 1;
        }
        if n > 1 {
            out.insert(n);
        }
        out
    }
}

pub fn satake_table(form: &ParsedForm) -> Result<SatakeTable, IngestError> {
    let mut classes = BTreeMap::new();
    let mut skipped = Vec::new();
    for (&p, a) in &form.coefficients {
        if !is_prime(p) {
            continue;
        }
        if form.level.is_multiple_of(p) {
            skipped.push(p);
            continue;
        }
        let c = match a {
            Coefficient::Int(b) => satake_from_integer(b, p, form.weight)?,
            Coefficient::Real(x) => {
                satake_from_hecke(Complex64::new(*x, 0.0), p, form.weight, Complex64::new(1.0, 0.0))?
            }
        };
        classes.insert(p, c);
    }
    Ok(SatakeTable { classes, skipped })
}

/// Local factors of `tag` at every stored prime outside the level.
pub fn euler_data(form: &ParsedForm, tag: RepTag) -> Result<EulerData, IngestError> {
    let table = satake_table(form)?;
    let ramified = table.ramified(form.level);
    Ok(EulerData::from_classes(&table.classes, tag, ramified, form.source_path.clone())?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParsedHeckeData {
    pub field_disc: i64,
    pub chi_order: Option<u32>,
    pub entries: Vec<HeckeLocalData>,
}

/// `k/n` or `re,im`.
pub fn parse_chi_value(s: &str) -> Result<ChiValue, String> {
    if let Some((k, n)) = s.split_once('/') {
        let k: i64 = k.parse().map_err(|_| format!("bad root numerator {k:?}"))?;
        let n: u32 = n.parse().map_err(|_| format!("bad root order {n:?}"))?;
        if n == 0 {
            return Err("root order must be positive".into());
        }
        return Ok(ChiValue::Root { k, n });
    }
    if let Some((re, im)) = s.split_once(',') {
        let re: f64 = re.parse().map_err(|_| format!("bad real part {re:?}"))?;
        let im: f64 = im.parse().map_err(|_| format!("bad imaginary part {im:?}"))?;
        if !(re.is_finite() && im.is_finite()) {
            return Err("non-finite value".into());
        }
        return Ok(ChiValue::Complex(Complex64::new(re, im)));
    }
    Err(format!("expected `k/n` or `re,im`, found {s:?}"))
}

fn write_chi(v: &ChiValue) -> String {
    match v {
        ChiValue::Root { k, n } => format!("{k}/{n}"),
        ChiValue::Complex(c) => format!("{:?},{:?}", c.re, c.im),
    }
}

pub fn parse_hecke_str(text: &str) -> Result<ParsedHeckeData, IngestError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty file"))?;
    let t: Vec<&str> = header.split_whitespace().collect();
    let (field_disc, chi_order) = match t.as_slice() {
        ["field-disc", d, "chi-order", n] => {
            let d: i64 = d.parse().map_err(|_| syntax(hl, format!("bad discriminant {d:?}")))?;
            let n = match *n {
                "unknown" | "?" => None,
                n => Some(
                    n.parse::<u32>()
                        .ok()
                        .filter(|&n| n > 0)
                        .ok_or_else(|| syntax(hl, format!("bad character order {n:?}")))?,
                ),
            };
            (d, n)
        }
        _ => return Err(syntax(hl, "expected `field-disc D chi-order n`")),
    };
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for (ln, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        if t.len() < 2 {
            return Err(syntax(ln, "expected `p split|inert values`"));
        }
        let p: u64 = t[0].parse().map_err(|_| syntax(ln, format!("bad prime {:?}", t[0])))?;
        if !is_prime(p) {
            return Err(IngestError::NotPrime { line: ln, p });
        }
        let (splitting, name, expected) = match t[1] {
            "split" => (Splitting::Split, "split", 2),
            "inert" => (Splitting::Inert, "inert", 1),
            other => return Err(syntax(ln, format!("unknown splitting {other:?}"))),
        };
        let vals = &t[2..];
        if vals.len() != expected {
            return Err(IngestError::Arity {
                line: ln,
                p,
                splitting: name,
                expected,
                found: vals.len(),
            });
        }
        if !seen.insert(p) {
            return Err(IngestError::DuplicatePrime { line: ln, p });
        }
        let vals: Vec<ChiValue> = vals
            .iter()
            .map(|v| parse_chi_value(v).map_err(|m| syntax(ln, m)))
            .collect::<Result<_, _>>()?;
        for v in &vals {
            if let ChiValue::Complex(c) = v {
                if c.norm() == 0.0 {
                    return Err(IngestError::ZeroValue { line: ln, p });
                }
                if chi_order.is_some() && (c.norm() - 1.0).abs() > UNIT_TOL {
                    return Err(IngestError::NonUnit { line: ln, p });
                }
            }
        }
        entries.push(HeckeLocalData {
            p,
            splitting,
            chi_p: vals[0],
            chi_pbar: vals.get(1).copied(),
        });
    }
    Ok(ParsedHeckeData {
        field_disc,
        chi_order,
        entries,
    })
}

pub fn parse_hecke(path: impl AsRef<Path>) -> Result<ParsedHeckeData, IngestError> {
    parse_hecke_str(&read(path.as_ref())?)
}

pub fn serialize_hecke(h: &ParsedHeckeData) -> String {
    let order = h.chi_order.map_or("unknown".to_string(), |n| n.to_string());
    let mut out = format!("field-disc {} chi-order {order}\n", h.field_disc);
    for e in &h.entries {
        let _ = write!(out, "{} ", e.p);
        match e.splitting {
            Splitting::Split => {
                let bar = e.chi_pbar.as_ref().map(write_chi).unwrap_or_default();
                let _ = writeln!(out, "split {} {bar}", write_chi(&e.chi_p));
            }
            Splitting::Inert => {
                let _ = writeln!(out, "inert {}", write_chi(&e.chi_p));
            }
        }
    }
    out
}

fn config_err(line: usize, msg: impl std::fmt::Display) -> IngestError {
    IngestError::Config(format!("line {line}: {msg}"))
}

fn parse_f64(line: usize, v: &str) -> Result<f64, IngestError> {
    v.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| config_err(line, format!("bad number {v:?}")))
}

fn parse_uint<T: std::str::FromStr>(line: usize, v: &str) -> Result<T, IngestError> {
    v.parse().map_err(|_| config_err(line, format!("bad integer {v:?}")))
}

/// AFE configuration. `gamma_shifts` is required; `conductor` defaults to 1,
/// `cutoff` to 4000, `self_dual` to true. The integration keys `contour`,
/// `step`, `height` and `probe_shift` are optional.
pub fn parse_config(text: &str) -> Result<AfeConfig, IngestError> {
    let mut cfg = AfeConfig::new(Vec::new(), 1, true, 4000);
    let mut degree = None;
    let mut seen = BTreeSet::new();
    for (ln, l) in content_lines(text) {
        let (k, v) = l
            .split_once('=')
            .ok_or_else(|| config_err(ln, "expected `key = value`"))?;
        let (k, v) = (k.trim(), v.trim());
        if !seen.insert(k.to_string()) {
            return Err(config_err(ln, format!("duplicate key {k:?}")));
        }
        match k {
            "gamma_shifts" => {
                cfg.gamma_shifts = v
                    .split(',')
                    .map(|x| parse_f64(ln, x.trim()))
                    .collect::<Result<_, _>>()?;
            }
            "degree" => degree = Some(parse_uint::<usize>(ln, v)?),
            "conductor" => cfg.conductor = parse_uint(ln, v)?,
            "cutoff" => cfg.cutoff = parse_uint(ln, v)?,
            "self_dual" => {
                cfg.self_dual = match v {
                    "true" => true,
                    "false" => false,
                    _ => return Err(config_err(ln, format!("bad boolean {v:?}"))),
                }
            }
            "contour" => cfg.contour = parse_f64(ln, v)?,
            "step" => cfg.step = parse_f64(ln, v)?,
            "height" => cfg.height = parse_f64(ln, v)?,
            "probe_shift" => cfg.probe_shift = parse_f64(ln, v)?,
            _ => return Err(config_err(ln, format!("unknown key {k:?}"))),
        }
    }
    if !seen.contains("gamma_shifts") {
        return Err(IngestError::Config("gamma_shifts missing".into()));
    }
    cfg.degree = degree.unwrap_or(2 * cfg.gamma_shifts.len());
    cfg.validate().map_err(|e| IngestError::Config(e.to_string()))?;
    if cfg.cutoff.is_zero() {
        return Err(IngestError::Config("cutoff must be positive".into()));
    }
    Ok(cfg)
}

pub fn parse_config_file(path: impl AsRef<Path>) -> Result<AfeConfig, IngestError> {
    parse_config(&read(path.as_ref())?)
}

pub fn serialize_config(cfg: &AfeConfig) -> String {
    let shifts: Vec<String> = cfg.gamma_shifts.iter().map(|k| format!("{k:?}")).collect();
    format!(
        "degree = {}\ngamma_shifts = {}\nconductor = {}\ncutoff = {}\nself_dual = {}\n\
         contour = {:?}\nstep = {:?}\nheight = {:?}\nprobe_shift = {:?}\n",
        cfg.degree,
        shifts.join(", "),
        cfg.conductor,
        cfg.cutoff,
        cfg.self_dual,
        cfg.contour,
        cfg.step,
        cfg.height,
        cfg.probe_shift,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const FORM: &str = "weight 12 level 1 character trivial\n1 1\n2 -24\n3 252\n4 -1472\n5 4830\n6 -6048\n";

    #[test]
    fn parses_delta_head() {
        let f = parse_form_str(FORM, "t").unwrap();
        assert_eq!(f.weight, 12);
        assert_eq!(f.get(2), Some(&Coefficient::Int(BigInt::from(-24))));
        assert_eq!(f.get(3), Some(&Coefficient::Int(BigInt::from(252))));
        assert_eq!(f.contiguous_len(), 6);
    }

    #[test]
    fn multiplicativity_witness() {
        let bad = FORM.replace("6 -6048", "6 -6047");
        assert_eq!(parse_form_str(&bad, "t"), Err(IngestError::Multiplicativity { m: 2, n: 3 }));
        let dec = "weight 2 level 11 character trivial\n1 1.0\n2 -2\n3 -1\n6 2.0000000000001\n";
        assert!(parse_form_str(dec, "t").is_ok());
    }

    #[test]
    fn form_errors() {
        assert_eq!(parse_form_str("", "t"), Err(syntax(1, "empty file")));
        assert!(matches!(parse_form_str("weight 12 level 1 character trivial\n2 3\n", "t"), Err(IngestError::MissingA1)));
        assert!(matches!(parse_form_str("weight 12 level 1 character trivial\n1 2\n", "t"), Err(IngestError::NotNormalized(_))));
        assert!(matches!(
            parse_form_str("weight 12 level 1 character trivial\n1 1\n3 1\n2 1\n", "t"),
            Err(IngestError::Syntax { line: 4, .. })
        ));
        assert!(matches!(
            parse_form_str("weight 12 level 1 character chi5\n1 1\n", "t"),
            Err(IngestError::UnsupportedCharacter(_))
        ));
        assert!(matches!(
            parse_form_str("weight 12 level 1 character trivial\n1 1\n2 nan\n", "t"),
            Err(IngestError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn form_roundtrip() {
        let f = ParsedForm::delta(60);
        let g = parse_form_str(&serialize_form(&f), "builtin:delta").unwrap();
        assert_eq!(f, g);
        let mut h = parse_form_str("weight 2 level 11 character trivial\n1 1.0\n2 -2.5\n", "x").unwrap();
        h.source_path = "x".into();
        assert_eq!(parse_form_str(&serialize_form(&h), "x").unwrap(), h);
    }

    #[test]
    fn satake_skips_level_primes() {
        let f = parse_form_str("weight 2 level 11 character trivial\n1 1\n2 -2\n3 -1\n11 1\n", "e11").unwrap();
        let t = satake_table(&f).unwrap();
        assert_eq!(t.classes.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(t.skipped, vec![11]);
        assert_eq!(t.ramified(44), BTreeSet::from([2, 11]));
    }

    #[test]
    fn hecke_lines() {
        let h = parse_hecke_str("field-disc -3 chi-order 3\n7 split 1/3 2/3\n11 inert 0/1\n").unwrap();
        assert_eq!(h.entries[0].chi_p, ChiValue::Root { k: 1, n: 3 });
        assert_eq!(h.entries[0].chi_pbar, Some(ChiValue::Root { k: 2, n: 3 }));
        assert_eq!(h.entries[1].chi_p, ChiValue::Root { k: 0, n: 1 });
        assert_eq!(h.chi_order, Some(3));
    }

    #[test]
    fn hecke_errors() {
        let head = "field-disc -3 chi-order 3\n";
        assert!(matches!(
            parse_hecke_str(&format!("{head}7 split 1/3\n")),
            Err(IngestError::Arity { line: 2, p: 7, expected: 2, found: 1, .. })
        ));
        assert!(matches!(
            parse_hecke_str(&format!("{head}7 split 1/3 2/3\n7 split 1/3 2/3\n")),
            Err(IngestError::DuplicatePrime { line: 3, p: 7 })
        ));
        assert!(matches!(
            parse_hecke_str(&format!("{head}5 inert 2.0,0.0\n")),
            Err(IngestError::NonUnit { line: 2, p: 5 })
        ));
        assert!(parse_hecke_str("field-disc -3 chi-order unknown\n5 inert 2.0,0.0\n").is_ok());
        assert!(matches!(parse_hecke_str(&format!("{head}9 inert 0/1\n")), Err(IngestError::NotPrime { .. })));
        assert!(matches!(parse_hecke_str(&format!("{head}5 inert 1/0\n")), Err(IngestError::Syntax { .. })));
    }

    #[test]
    fn hecke_roundtrip() {
        let text = "field-disc -4 chi-order 4\n5 split 1/4 0.0,-1.0\n3 inert -1/4\n";
        let h = parse_hecke_str(text).unwrap();
        assert_eq!(parse_hecke_str(&serialize_hecke(&h)).unwrap(), h);
    }

    #[test]
    fn config() {
        let c = parse_config("gamma_shifts = 5.5, 16.5\nconductor = 1\ncutoff = 4000\nself_dual = true\n").unwrap();
        assert_eq!(c, AfeConfig::delta_sym3());
        assert_eq!(parse_config(&serialize_config(&c)).unwrap(), c);
        assert!(parse_config("conductor = 1\n").is_err());
        assert!(parse_config("gamma_shifts = 1\nbogus = 2\n").is_err());
        assert!(parse_config("gamma_shifts = 1\ndegree = 3\n").is_err());
        assert!(parse_config("gamma_shifts = 1\ngamma_shifts = 2\n").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/10"), Ok(Rational64::new(1, 10)));
        assert_eq!(parse_rational(" -3 "), Ok(Rational64::from_integer(-3)));
        assert_eq!(parse_rational("4/-6"), Ok(Rational64::new(-2, 3)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("-9223372036854775808/1").is_err());
    }
}
