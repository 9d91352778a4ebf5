use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use symcube::analytic::{
    default_probe_points, dirichlet_coeffs, dirichlet_sum, epsilon_probe, partial_l, pole_scan, InjectedPole,
    PoleScanConfig, ScanVerdict,
};
use symcube::g2root::{beta, inverted_roots, pairing, reflect, rho_p, weyl_group, length, WeightVector};
use symcube::ingest::{euler_data, parse_config_file, parse_form, parse_hecke, parse_rational, satake_table};
use symcube::intertwining::{
    exact_pole_roots, gk_coefficient, intertwine_grid, l_ratio, linspace, region_grid, region_membership,
    winarsky_poles_exact, MuCase, MuOrder, PrincipalParams, Region,
};
use symcube::localfactor::{local_factor, run_suite, IdentitySuite};
use symcube::monomial::{check_monomial_r3, check_monomial_r30, pole_criterion, PoleVerdict, Splitting};
use symcube::satake::is_tempered;
use symcube::{AfeConfig, CoefficientTable, Cyclo, ParsedForm, RepTag, SatakeClass};

#[derive(Parser)]
#[command(name = "symcube", version, about = "Symmetric-cube L-function verification suites")]
struct Cli {
    /// Output format; `region` defaults to csv, everything else to table.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Seed for sampled suites.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Pass/fail threshold; each command documents its default.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// G2 root-system calculus.
    Roots {
        #[command(subcommand)]
        cmd: RootsCmd,
    },
    /// Classify an rs-grid against the unitary triangles.
    Region(RegionArgs),
    /// Satake parameters from a coefficient file.
    Satake(SatakeArgs),
    /// Local factor coefficients of a representation.
    Lfactor(LfactorArgs),
    /// Factorization identity suites (default tol 1e-12).
    Identity(IdentityArgs),
    /// Monomial factorizations from Hecke character data (default tol 1e-12).
    MonomialCheck(MonomialArgs),
    /// Root-by-root intertwining coefficient against the L-ratio (default tol 1e-10).
    Intertwine(IntertwineArgs),
    /// Euler product against Dirichlet series (default tol 1e-6).
    Euler(EulerArgs),
    /// Root-number probe via the approximate functional equation (default tol 1e-3).
    Afe(AfeArgs),
    /// Scan the completed L-function along the real segment [a, b].
    Scan(ScanArgs),
}

#[derive(Subcommand)]
enum RootsCmd {
    /// Coroot pairings of Λ(r, s); symbolic unless both --r and --s are set.
    Pairing {
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        s: Option<String>,
    },
    /// The twelve Weyl group elements with lengths and inverted roots.
    Weyl,
    /// ρ₁(Λ), ρ₆(Λ) and ρ_P.
    Rho,
}

#[derive(Args)]
struct RegionArgs {
    /// Points per axis on [0, 1/2] × [0, 1].
    #[arg(long, default_value_t = 200)]
    grid: usize,
    #[arg(long, default_value = "trivial")]
    mu: MuCase,
    /// Classify one exact point instead of a grid.
    #[arg(long, requires = "s")]
    r: Option<String>,
    #[arg(long, requires = "r")]
    s: Option<String>,
}

#[derive(Args)]
struct CoeffSource {
    /// Coefficient file; the built-in Δ is used when absent.
    #[arg(long)]
    coeffs: Option<PathBuf>,
}

#[derive(Args)]
struct SatakeArgs {
    #[command(flatten)]
    src: CoeffSource,
    /// Number of built-in Δ coefficients.
    #[arg(long, default_value_t = 100)]
    n: usize,
}

#[derive(Args)]
struct LfactorArgs {
    #[arg(long, default_value = "sym3")]
    rep: RepTag,
    /// `re,im` or a real number.
    #[arg(long, allow_hyphen_values = true, requires = "beta")]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "alpha")]
    beta: Option<String>,
    /// Residue field size for --alpha/--beta, or the prime to read from --coeffs.
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[command(flatten)]
    src: CoeffSource,
}

#[derive(Args)]
struct IdentityArgs {
    /// triple, twist, gj or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Roots of unity in exact cyclotomic arithmetic; passes only at error 0.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct MonomialArgs {
    #[arg(long)]
    hecke: PathBuf,
}

#[derive(Args)]
struct IntertwineArgs {
    /// μ(ϖ) as a root of unity `k/n`.
    #[arg(long, default_value = "0/1")]
    mu: String,
    #[arg(long, default_value_t = 5)]
    q: u64,
    /// Points per axis on r ∈ [0, 0.45], s ∈ [−1, 1.5].
    #[arg(long, default_value_t = 21)]
    grid: usize,
    #[arg(long)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Compare exact pole locations with the predicted set at --r.
    #[arg(long, requires = "r")]
    poles: bool,
}

#[derive(Args)]
struct EulerArgs {
    #[command(flatten)]
    src: CoeffSource,
    #[arg(long, default_value = "sym3")]
    rep: RepTag,
    /// `re,im` or a real number.
    #[arg(long, default_value = "3", allow_hyphen_values = true)]
    s: String,
    /// Product over p ≤ x and sum over n ≤ x.
    #[arg(long, default_value_t = 100_000)]
    x: u64,
    /// Emit the checkpoint trace instead of the comparison.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct AnalyticSource {
    #[command(flatten)]
    src: CoeffSource,
    /// AFE configuration; the shipped Δ-sym³ configuration when absent.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, default_value = "sym3")]
    rep: RepTag,
}

#[derive(Args)]
struct AfeArgs {
    #[command(flatten)]
    data: AnalyticSource,
    /// Heights t of the probe points 1/2 + it.
    #[arg(long, value_delimiter = ',', default_values_t = [0.5, 1.0, 2.0])]
    t: Vec<f64>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    data: AnalyticSource,
    #[arg(long, default_value_t = 0.55)]
    a: f64,
    #[arg(long, default_value_t = 0.95)]
    b: f64,
    #[arg(long, default_value_t = 9)]
    grid: usize,
    /// Multiply in a fake pole `σ₀,p`; the run then passes only if it is flagged.
    #[arg(long)]
    inject: Option<String>,
}

/// A rendered command result.
#[derive(Default)]
struct Report {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
    json: Value,
    /// Replaces the aligned table in table mode.
    lines: Option<Vec<String>>,
    /// Printed after the table in table mode.
    summary: Vec<String>,
    passed: bool,
}

impl Report {
    fn new(headers: &[&str]) -> Self {
        Self {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            passed: true,
            ..Default::default()
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn render(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)
            }
            Format::Csv => {
                let io = |e: csv::Error| match e.into_kind() {
                    csv::ErrorKind::Io(e) => e,
                    k => std::io::Error::other(format!("{k:?}")),
                };
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.headers).map_err(io)?;
                for r in &self.rows {
                    w.write_record(r).map_err(io)?;
                }
                w.flush()
            }
            Format::Table => {
                if let Some(lines) = &self.lines {
                    for l in lines {
                        writeln!(out, "{l}")?;
                    }
                } else if !self.headers.is_empty() {
                    let mut width: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
                    for r in &self.rows {
                        for (w, c) in width.iter_mut().zip(r) {
                            *w = (*w).max(c.chars().count());
                        }
                    }
                    let line = |cells: &[String]| {
                        cells
                            .iter()
                            .zip(&width)
                            .map(|(c, w)| format!("{c:<w$}"))
                            .collect::<Vec<_>>()
                            .join("  ")
                            .trim_end()
                            .to_string()
                    };
                    writeln!(out, "{}", line(&self.headers))?;
                    for r in &self.rows {
                        writeln!(out, "{}", line(r))?;
                    }
                }
                for s in &self.summary {
                    writeln!(out, "{s}")?;
                }
                Ok(())
            }
        }
    }
}

type CmdResult = Result<Report, String>;

fn num(x: f64) -> String {
    format!("{x:?}")
}

fn cx(z: Complex64) -> String {
    format!("{:?}{:+?}i", z.re, z.im)
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("bad complex number {s:?}");
    match s.split_once(',') {
        Some((a, b)) => Ok(Complex64::new(
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        )),
        None => s.trim().parse::<f64>().map(|x| Complex64::new(x, 0.0)).map_err(|_| bad()),
    }
}

fn rat_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn parse_root(s: &str) -> Result<(i64, u32), String> {
    let (k, n) = s.split_once('/').ok_or_else(|| format!("expected k/n, found {s:?}"))?;
    let k: i64 = k.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let n: u32 = n.trim().parse().map_err(|_| format!("bad order in {s:?}"))?;
    if n == 0 {
        return Err("root order must be positive".into());
    }
    Ok((k, n))
}

fn load_form(src: &CoeffSource, n: usize) -> Result<ParsedForm, String> {
    match &src.coeffs {
        Some(p) => parse_form(p).map_err(|e| e.to_string()),
        None => Ok(ParsedForm::delta(n)),
    }
}

fn roots(cmd: &RootsCmd) -> CmdResult {
    let l = WeightVector::lambda();
    match cmd {
        RootsCmd::Pairing { r, s } => {
            let point = match (r, s) {
                (Some(r), Some(s)) => Some((parse_rational(r)?, parse_rational(s)?)),
                (None, None) => None,
                _ => return Err("--r and --s go together".into()),
            };
            let mut rep = Report::new(&["root", "pairing", "value"]);
            let mut lines = Vec::new();
            let mut js = Vec::new();
            for i in 1..=6 {
                let form = pairing(&l, &beta(i)).map_err(|e| e.to_string())?;
                let value = point.map(|(r, s)| form.eval(r, s));
                let vs = value.map(|v| v.to_string()).unwrap_or_default();
                lines.push(match value {
                    Some(v) => format!("beta{i} {form} = {v}"),
                    None => format!("beta{i} {form}"),
                });
                js.push(json!({"root": format!("beta{i}"), "pairing": form.to_string(), "value": value.map(|v| v.to_string())}));
                rep.row(vec![format!("beta{i}"), form.to_string(), vs]);
            }
            rep.lines = Some(lines);
            rep.json = Value::Array(js);
            Ok(rep)
        }
        RootsCmd::Weyl => {
            let mut rep = Report::new(&["word", "length", "matrix", "inverted"]);
            let mut js = Vec::new();
            for w in weyl_group() {
                let inv: Vec<String> = inverted_roots(&w).iter().map(|r| r.to_string()).collect();
                let m = w.matrix();
                let ms = format!("[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1]);
                js.push(json!({"word": w.word_string(), "length": length(&w), "matrix": m, "inverted": inv}));
                rep.row(vec![w.word_string(), length(&w).to_string(), ms, inv.join(" ")]);
            }
            rep.summary.push(format!("order {}", rep.rows.len()));
            rep.json = Value::Array(js);
            Ok(rep)
        }
        RootsCmd::Rho => {
            let r1 = reflect(&beta(1), &l).map_err(|e| e.to_string())?;
            let r6 = reflect(&beta(6), &l).map_err(|e| e.to_string())?;
            let rp = rho_p();
            let mut rep = Report::new(&["name", "value"]);
            for (k, v) in [("rho1(Lambda)", r1), ("rho6(Lambda)", r6), ("rho_P", rp)] {
                rep.row(vec![k.into(), v.to_string()]);
            }
            rep.json = json!({"rho1_lambda": r1.to_string(), "rho6_lambda": r6.to_string(), "rho_p": rp.to_string()});
            Ok(rep)
        }
    }
}

const VERTICES: [((i64, i64), (i64, i64)); 3] = [((1, 6), (1, 2)), ((1, 4), (3, 4)), ((0, 1), (1, 1))];

fn region(a: &RegionArgs) -> CmdResult {
    let mut rep = Report::new(&["kind", "i", "j", "r", "s", "region", "forbidden"]);
    if let (Some(r), Some(s)) = (&a.r, &a.s) {
        let (r, s) = (parse_rational(r)?, parse_rational(s)?);
        let reg = region_membership(r, s, a.mu);
        let forb = symcube::intertwining::forbidden_triangle_contains(r, s);
        rep.row(vec!["point".into(), "".into(), "".into(), r.to_string(), s.to_string(), reg.to_string(), forb.to_string()]);
        rep.json = json!({"r": r.to_string(), "s": s.to_string(), "region": reg, "forbidden": forb});
        return Ok(rep);
    }
    if a.grid < 2 {
        return Err("--grid must be at least 2".into());
    }
    let mut vjs = Vec::new();
    let mut vertices_ok = true;
    for ((rn, rd), (sn, sd)) in VERTICES {
        let (r, s) = (Rational64::new(rn, rd), Rational64::new(sn, sd));
        let reg = region_membership(r, s, a.mu);
        if a.mu == MuCase::Trivial {
            vertices_ok &= reg == Region::Boundary;
        }
        rep.row(vec!["vertex".into(), "".into(), "".into(), r.to_string(), s.to_string(), reg.to_string(), "false".into()]);
        vjs.push(json!({"r": r.to_string(), "s": s.to_string(), "region": reg}));
    }
    let pts = region_grid(&linspace(0.0, 0.5, a.grid), &linspace(0.0, 1.0, a.grid), a.mu);
    let overlap = pts.iter().filter(|p| p.forbidden && p.region == Region::UpperTriangle).count();
    for p in &pts {
        rep.row(vec![
            "grid".into(),
            p.i.to_string(),
            p.j.to_string(),
            num(p.r),
            num(p.s),
            p.region.to_string(),
            p.forbidden.to_string(),
        ]);
    }
    let count = |r: Region| pts.iter().filter(|p| p.region == r).count();
    rep.lines = Some(
        rep.rows[..3]
            .iter()
            .map(|r| format!("vertex ({}, {}): {}", r[3], r[4], r[5]))
            .chain([
                format!(
                    "grid {0}x{0}: upper-triangle {1}, lower-triangle {2}, boundary {3}, outside {4}",
                    a.grid,
                    count(Region::UpperTriangle),
                    count(Region::LowerTriangle),
                    count(Region::Boundary),
                    count(Region::Outside)
                ),
                format!("forbidden {}, shared with upper triangle {overlap}", pts.iter().filter(|p| p.forbidden).count()),
            ])
            .collect(),
    );
    rep.passed = vertices_ok && overlap == 0;
    rep.json = json!({"vertices": vjs, "overlap": overlap, "points": to_json(&pts)});
    Ok(rep)
}

fn satake(a: &SatakeArgs, tol: f64) -> CmdResult {
    let form = load_form(&a.src, a.n)?;
    let table = satake_table(&form).map_err(|e| e.to_string())?;
    let mut rep = Report::new(&["p", "alpha", "beta", "tempered"]);
    for (p, c) in &table.classes {
        rep.row(vec![p.to_string(), cx(c.alpha), cx(c.beta), is_tempered(c, tol).to_string()]);
    }
    if !table.skipped.is_empty() {
        rep.summary.push(format!("ramified primes skipped: {:?}", table.skipped));
    }
    rep.json = to_json(&table);
    Ok(rep)
}

fn lfactor(a: &LfactorArgs) -> CmdResult {
    let class = match (&a.alpha, &a.beta) {
        (Some(x), Some(y)) => SatakeClass::new(parse_complex(x)?, parse_complex(y)?, a.q),
        _ => {
            let form = load_form(&a.src, a.q as usize)?;
            let table = satake_table(&form).map_err(|e| e.to_string())?;
            *table
                .classes
                .get(&a.q)
                .ok_or_else(|| format!("no unramified coefficient at p = {}", a.q))?
        }
    };
    let f = local_factor(a.rep, &class).map_err(|e| e.to_string())?;
    let mut rep = Report::new(&["k", "coefficient"]);
    for (k, c) in f.coeffs().iter().enumerate() {
        rep.row(vec![k.to_string(), cx(*c)]);
    }
    rep.summary.push(format!("{} at q = {}: 1/P(q^-s), P of degree {}", a.rep, class.q, f.degree()));
    rep.json = json!({"rep": a.rep, "q": class.q, "class": to_json(&class), "coefficients": to_json(&f.coeffs())});
    Ok(rep)
}

fn suites(name: &str) -> Result<Vec<IdentitySuite>, String> {
    if name == "all" {
        Ok(IdentitySuite::ALL.to_vec())
    } else {
        Ok(vec![name.parse()?])
    }
}

fn identity(a: &IdentityArgs, seed: u64, tol: f64) -> CmdResult {
    let suites = suites(&a.suite)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::new(&["suite", "samples", "max_error", "tol", "status"]);
    let mut js = Vec::new();
    let primes = [2u64, 3, 5, 7, 11, 13];
    if a.exact {
        let pairs: Vec<(Cyclo, Cyclo)> = (0..a.samples)
            .map(|_| {
                let n = rng.random_range(1..=12u32);
                let mut k = || rng.random_range(0..n as i64);
                (Cyclo::root_of_unity(k(), n), Cyclo::root_of_unity(k(), n))
            })
            .collect();
        for suite in suites {
            let mut worst: f64 = 0.0;
            for (x, y) in &pairs {
                worst = worst.max(suite.check_generic(x, y, 5).map_err(|e| e.to_string())?);
            }
            let ok = worst == 0.0;
            rep.passed &= ok;
            rep.row(vec![suite.name().into(), a.samples.to_string(), num(worst), "0".into(), status(ok)]);
            js.push(json!({"suite": suite, "exact": true, "samples": a.samples, "max_error": worst, "pass": ok}));
        }
    } else {
        let classes: Vec<SatakeClass> = (0..a.samples)
            .map(|_| {
                let mut z = || {
                    Complex64::from_polar(4f64.powf(rng.random_range(-1.0..=1.0)), rng.random_range(0.0..std::f64::consts::TAU))
                };
                let (x, y) = (z(), z());
                SatakeClass::new(x, y, primes[rng.random_range(0..primes.len())])
            })
            .collect();
        for suite in suites {
            let errs = run_suite(suite, &classes).map_err(|e| e.to_string())?;
            let worst = errs.iter().copied().fold(0.0, f64::max);
            let ok = worst < tol;
            rep.passed &= ok;
            rep.row(vec![suite.name().into(), a.samples.to_string(), format!("{worst:e}"), format!("{tol:e}"), status(ok)]);
            js.push(json!({"suite": suite, "exact": false, "samples": a.samples, "max_error": worst, "tol": tol, "pass": ok}));
        }
    }
    rep.json = Value::Array(js);
    Ok(rep)
}

fn status(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.into()
}

fn monomial_check(a: &MonomialArgs, tol: f64) -> CmdResult {
    let data = parse_hecke(&a.hecke).map_err(|e| e.to_string())?;
    let mut rep = Report::new(&["p", "splitting", "r3_error", "r30_error", "exact", "status"]);
    let mut js = Vec::new();
    for d in &data.entries {
        let r3 = check_monomial_r3(d).map_err(|e| e.to_string())?;
        let r30 = check_monomial_r30(d).map_err(|e| e.to_string())?;
        let ok = if r3.exact {
            r3.error == 0.0 && r30.error == 0.0
        } else {
            r3.error < tol && r30.error < tol
        };
        rep.passed &= ok;
        let split = match d.splitting {
            Splitting::Split => "split",
            Splitting::Inert => "inert",
        };
        rep.row(vec![d.p.to_string(), split.into(), format!("{:e}", r3.error), format!("{:e}", r30.error), r3.exact.to_string(), status(ok)]);
        js.push(json!({"p": d.p, "splitting": d.splitting, "r3": to_json(&r3), "r30": to_json(&r30), "pass": ok}));
    }
    let verdict = match data.chi_order {
        Some(n) => match pole_criterion(n, false) {
            Ok(PoleVerdict::HasPole { at, .. }) => format!("chi order {n}: simple poles at s = {at:?}"),
            Ok(PoleVerdict::Entire) => format!("chi order {n}: entire"),
            Err(e) => format!("chi order {n}: {e}"),
        },
        None => "chi order unknown: pole criterion not applied".into(),
    };
    rep.summary.push(verdict.clone());
    rep.json = json!({"field_disc": data.field_disc, "chi_order": data.chi_order, "primes": js, "pole_criterion": verdict});
    Ok(rep)
}

/// Below this magnitude both sides are treated as a common zero.
const ZERO_SCALE: f64 = 1e-14;

fn intertwine(a: &IntertwineArgs, tol: f64) -> CmdResult {
    let (k, n) = parse_root(&a.mu)?;
    let mu = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64);
    if a.poles {
        let r = parse_rational(a.r.as_deref().unwrap_or_default())?;
        let order = MuOrder::of_root(k, n);
        let predicted = winarsky_poles_exact(order, r);
        let mut candidates: BTreeSet<Rational64> = (-160..=160).map(|j| Rational64::new(j, 40) * r).collect();
        candidates.extend((-40..=40).map(|j| Rational64::new(j, 20)));
        candidates.extend(predicted.iter().copied());
        let mut rep = Report::new(&["s", "predicted", "roots"]);
        let mut found = BTreeSet::new();
        let mut js = Vec::new();
        for s in candidates {
            let roots = exact_pole_roots((k, n), r, s);
            if roots.is_empty() && !predicted.contains(&s) {
                continue;
            }
            if !roots.is_empty() {
                found.insert(s);
            }
            let names: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
            rep.row(vec![s.to_string(), predicted.contains(&s).to_string(), names.join(" ")]);
            js.push(json!({"s": s.to_string(), "predicted": predicted.contains(&s), "roots": names}));
        }
        rep.passed = found == predicted;
        rep.summary.push(format!("mu = e(2pi i {k}/{n}), r = {r}: pole sets {}", if rep.passed { "match" } else { "differ" }));
        rep.json = json!({"mu": a.mu, "r": r.to_string(), "poles": js, "match": rep.passed});
        return Ok(rep);
    }
    let mut rep = Report::new(&["i", "j", "r", "s", "gk", "l_ratio", "rel_err", "pole_root"]);
    if let (Some(r), Some(s)) = (&a.r, &a.s) {
        let r = rat_f64(parse_rational(r)?);
        let s = match parse_rational(s) {
            Ok(q) => Complex64::new(rat_f64(q), 0.0),
            Err(_) => parse_complex(s)?,
        };
        let p = PrincipalParams::new(mu, a.q, r, s);
        let gk = gk_coefficient(&p).map_err(|e| e.to_string())?;
        let lr = l_ratio(&p).map_err(|e| e.to_string())?;
        let rel = (gk - lr).norm() / gk.norm();
        rep.passed = rel <= tol;
        rep.row(vec!["".into(), "".into(), num(r), cx(s), cx(gk), cx(lr), format!("{rel:e}"), "".into()]);
        rep.json = json!({"params": to_json(&p), "gk": to_json(&gk), "l_ratio": to_json(&lr), "rel_err": rel});
        return Ok(rep);
    }
    if a.grid < 2 {
        return Err("--grid must be at least 2".into());
    }
    let pts = intertwine_grid(mu, a.q, &linspace(0.0, 0.45, a.grid), &linspace(-1.0, 1.5, a.grid));
    let mut worst: f64 = 0.0;
    let mut zeros = 0;
    for p in &pts {
        let scale = p.gk.zip(p.l_ratio).map(|(a, b)| a.norm().max(b.norm()));
        if scale.is_some_and(|m| m < ZERO_SCALE) {
            zeros += 1;
        } else if let Some(e) = p.rel_err {
            worst = worst.max(e);
        }
        let opt = |z: Option<Complex64>| z.map(cx).unwrap_or_default();
        rep.row(vec![
            p.i.to_string(),
            p.j.to_string(),
            num(p.r),
            num(p.s),
            opt(p.gk),
            opt(p.l_ratio),
            p.rel_err.map(|e| format!("{e:e}")).unwrap_or_default(),
            p.pole_root.clone().unwrap_or_default(),
        ]);
    }
    rep.passed = worst <= tol;
    let poles = pts.iter().filter(|p| p.pole_root.is_some()).count();
    rep.lines = Some(vec![format!(
        "{} points, {poles} at poles, {zeros} at zeros; max relative error {worst:e} (tol {tol:e})",
        pts.len()
    )]);
    rep.json = json!({"max_rel_err": worst, "zeros": zeros, "points": to_json(&pts)});
    Ok(rep)
}

fn euler(a: &EulerArgs, tol: f64) -> CmdResult {
    let s = parse_complex(&a.s)?;
    let n = a.x as usize;
    let form = load_form(&a.src, n)?;
    let data = euler_data(&form, a.rep).map_err(|e| e.to_string())?;
    let prod = partial_l(s, a.x, &data).map_err(|e| e.to_string())?;
    if a.trace {
        let mut rep = Report::new(&["checkpoint", "X", "Re", "Im"]);
        for (i, c) in prod.trace.iter().enumerate() {
            rep.row(vec![i.to_string(), c.x.to_string(), num(c.value.re), num(c.value.im)]);
        }
        rep.json = to_json(&prod);
        return Ok(rep);
    }
    let table = dirichlet_coeffs(&data, n).map_err(|e| e.to_string())?;
    let sum = dirichlet_sum(s, &table, n).map_err(|e| e.to_string())?;
    let rel = (prod.value - sum).norm() / sum.norm();
    let gap = prod.last_doubling_gap().unwrap_or(f64::NAN) / prod.value.norm();
    let mut rep = Report::new(&["method", "cutoff", "value"]);
    rep.row(vec!["product".into(), a.x.to_string(), cx(prod.value)]);
    rep.row(vec!["sum".into(), a.x.to_string(), cx(sum)]);
    rep.summary.push(format!("relative difference {rel:e}; last doubling gap {gap:e} (tol {tol:e})"));
    if prod.noncontractual {
        rep.summary.push("Re s <= 1: outside absolute convergence, values are not limits".into());
    }
    rep.passed = rel < tol && gap < tol;
    rep.json = json!({"s": to_json(&s), "x": a.x, "product": to_json(&prod.value), "sum": to_json(&sum),
        "relative_difference": rel, "doubling_gap": gap, "noncontractual": prod.noncontractual, "pass": rep.passed});
    Ok(rep)
}

fn analytic_setup(d: &AnalyticSource) -> Result<(AfeConfig, CoefficientTable), String> {
    let cfg = match &d.config {
        Some(p) => parse_config_file(p).map_err(|e| e.to_string())?,
        None => AfeConfig::delta_sym3(),
    };
    let form = load_form(&d.src, cfg.cutoff)?;
    let data = euler_data(&form, d.rep).map_err(|e| e.to_string())?;
    let table = dirichlet_coeffs(&data, cfg.cutoff).map_err(|e| e.to_string())?;
    Ok((cfg, table))
}

fn afe(a: &AfeArgs, tol: f64) -> CmdResult {
    let (cfg, table) = analytic_setup(&a.data)?;
    let pts: Vec<Complex64> = a.t.iter().map(|&t| Complex64::new(0.5, t)).collect();
    let report = epsilon_probe(&pts, &cfg, &table).map_err(|e| e.to_string())?;
    let mut rep = Report::new(&["s", "epsilon", "tail_weight"]);
    for (s, e) in report.points.iter().zip(&report.estimates) {
        rep.row(vec![cx(*s), cx(*e), format!("{:e}", cfg.tail_weight(*s))]);
    }
    for sk in &report.skipped {
        rep.summary.push(format!("skipped {}: {}", cx(sk.s), sk.reason));
    }
    rep.summary.push(format!(
        "epsilon {}; pairwise deviation {:e}, modulus deviation {:e} (tol {tol:e})",
        cx(report.epsilon),
        report.max_pairwise_deviation,
        report.modulus_deviation
    ));
    rep.passed = report.passes(tol);
    rep.json = json!({"config": to_json(&cfg), "report": to_json(&report), "tol": tol, "pass": rep.passed});
    Ok(rep)
}

fn scan(a: &ScanArgs) -> CmdResult {
    let (cfg, table) = analytic_setup(&a.data)?;
    let injected = match &a.inject {
        Some(s) => {
            let (x, p) = s.split_once(',').ok_or("--inject expects sigma0,p")?;
            Some(InjectedPole {
                sigma0: x.trim().parse().map_err(|_| format!("bad sigma0 {x:?}"))?,
                p: p.trim().parse().map_err(|_| format!("bad prime {p:?}"))?,
            })
        }
        None => None,
    };
    let eps = if cfg.self_dual {
        epsilon_probe(&default_probe_points(), &cfg, &table).map_err(|e| e.to_string())?.epsilon
    } else {
        return Err("scan needs a self-dual configuration to fix epsilon".into());
    };
    let sc = PoleScanConfig { injected, ..PoleScanConfig::default() };
    let r = pole_scan(a.a, a.b, a.grid, eps, &cfg, &table, &sc).map_err(|e| e.to_string())?;
    let mut rep = Report::new(&["sigma", "Re", "Im", "abs"]);
    for (x, v) in r.points.iter().zip(&r.values) {
        rep.row(vec![num(*x), num(v.re), num(v.im), num(v.norm())]);
    }
    let verdict = match r.verdict {
        ScanVerdict::ConsistentWithHolomorphy => "consistent-with-holomorphy",
        ScanVerdict::GrowthDetected => "growth-detected",
    };
    rep.summary.push(format!("{}: {verdict}; max |Lambda| {:e}, spike at {:?}", r.label, r.max_abs, r.spike_at));
    rep.passed = match injected {
        None => r.verdict == ScanVerdict::ConsistentWithHolomorphy,
        Some(_) => r.verdict == ScanVerdict::GrowthDetected,
    };
    rep.json = to_json(&r);
    Ok(rep)
}

fn run(cli: &Cli) -> CmdResult {
    let tol = |d: f64| cli.tol.unwrap_or(d);
    match &cli.command {
        Command::Roots { cmd } => roots(cmd),
        Command::Region(a) => region(a),
        Command::Satake(a) => satake(a, tol(1e-8)),
        Command::Lfactor(a) => lfactor(a),
        Command::Identity(a) => identity(a, cli.seed, tol(1e-12)),
        Command::MonomialCheck(a) => monomial_check(a, tol(1e-12)),
        Command::Intertwine(a) => intertwine(a, tol(1e-10)),
        Command::Euler(a) => euler(a, tol(1e-6)),
        Command::Afe(a) => afe(a, tol(1e-3)),
        Command::Scan(a) => scan(a),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("SYMCUBE_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("SYMCUBE_THREADS must be a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let format = cli.format.unwrap_or(match cli.command {
        Command::Region(_) => Format::Csv,
        _ => Format::Table,
    });
    match run(&cli) {
        Ok(rep) => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            match rep.render(format, &mut out) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
                _ => {}
            }
            ExitCode::from(if rep.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
