//! Global numerics: Dirichlet coefficients from local factors, partial Euler
//! products, and an approximate functional equation for completed
//! L-functions.
//!
//! The completed function is `Λ(s) = N^{s/2} ∏_j Γ_C(s + κ_j) L(s)` with
//! `Γ_C(s) = 2(2π)^{−s}Γ(s)`. For a test function `G` with `G(0) = 1`,
//!
//! ```text
//! Λ(s) = Σ λ(n) f_G(s, n) + ε Σ λ̄(n) f_{G(−·)}(1 − s, n),
//! f_G(s, n) = (1/2πi) ∫_{(c)} N^{(s+w)/2} γ(s+w) n^{−s−w} G(w) dw/w.
//! ```
//!
//! The two sums are returned separately ([`AfeSides`]); `ε` is recovered
//! from two different test functions, since a single `G` leaves it
//! undetermined.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::localfactor::{local_factor, LocalFactorError, RepTag};
use crate::poly::ReciprocalPoly;
use crate::satake::SatakeClass;
use crate::special::{ln_gamma_c, primes_up_to, spf_sieve, split_smallest, ComplexSum};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalyticError {
    #[error("no local factor for prime {0}")]
    MissingPrime(u64),
    #[error("local factor at p = {0} vanishes at the evaluation point")]
    LocalPole(u64),
    #[error("coefficient table stops at {have}, need {need}")]
    InsufficientCoefficients { have: usize, need: usize },
    #[error("cutoff {cutoff} below heuristic requirement {needed}")]
    CutoffTooSmall { cutoff: usize, needed: usize },
    #[error("gamma shifts must be nonempty")]
    EmptyGamma,
    #[error("degree {degree} does not match {shifts} gamma shifts")]
    DegreeMismatch { degree: usize, shifts: usize },
    #[error("epsilon probe needs self-dual data")]
    NotSelfDual,
    #[error("lambda(1) must be 1")]
    NotNormalized,
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    LocalFactor(#[from] LocalFactorError),
}

/// Local factors at unramified primes plus the ramified set.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerData {
    pub factors: BTreeMap<u64, ReciprocalPoly>,
    pub ramified: BTreeSet<u64>,
    pub rep_tag: Option<RepTag>,
    pub source: String,
}

impl EulerData {
    pub fn from_classes(
        classes: &BTreeMap<u64, SatakeClass>,
        tag: RepTag,
        ramified: BTreeSet<u64>,
        source: impl Into<String>,
    ) -> Result<Self, AnalyticError> {
        let factors = classes
            .iter()
            .map(|(&p, c)| Ok((p, local_factor(tag, c)?)))
            .collect::<Result<_, AnalyticError>>()?;
        Ok(Self {
            factors,
            ramified,
            rep_tag: Some(tag),
            source: source.into(),
        })
    }

    fn factor(&self, p: u64) -> Result<Option<&ReciprocalPoly>, AnalyticError> {
        if self.ramified.contains(&p) {
            return Ok(None);
        }
        self.factors.get(&p).map(Some).ok_or(AnalyticError::MissingPrime(p))
    }
}

/// `λ(1..=N)`, stored with a dummy slot at index 0.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientTable {
    values: Vec<Complex64>,
    pub rep_tag: Option<RepTag>,
    pub source: String,
}

impl CoefficientTable {
    /// `values[0]` is `λ(1)`.
    pub fn new(values: Vec<Complex64>, rep_tag: Option<RepTag>, source: impl Into<String>) -> Result<Self, AnalyticError> {
        if values.first() != Some(&Complex64::new(1.0, 0.0)) {
            return Err(AnalyticError::NotNormalized);
        }
        let mut v = Vec::with_capacity(values.len() + 1);
        v.push(Complex64::new(0.0, 0.0));
        v.extend(values);
        Ok(Self {
            values: v,
            rep_tag,
            source: source.into(),
        })
    }

    /// Largest stored index.
    pub fn len(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: usize) -> Option<Complex64> {
        (n >= 1).then(|| self.values.get(n).copied()).flatten()
    }

    /// `λ(1..=N)`.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.values[1..]
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.values.iter().all(|z| z.im.abs() <= tol * z.re.abs().max(1.0))
    }
}

/// `λ(p^k)` for `k = 0..=kmax` from `λ(p^k) = −Σ_j c_j λ(p^{k−j})`.
pub fn prime_power_coeffs(p: &ReciprocalPoly, kmax: usize) -> Vec<Complex64> {
    let tail = p.tail();
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(Complex64::new(1.0, 0.0));
    for k in 1..=kmax {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in tail.iter().enumerate().take(k) {
            acc -= c * out[k - j - 1];
        }
        out.push(acc);
    }
    out
}

/// Largest coefficient of `P(T)·Σ λ(p^k)T^k − 1` in degrees `1..=K`.
pub fn recurrence_residual(p: &ReciprocalPoly, lambdas: &[Complex64]) -> f64 {
    let coeffs = p.coeffs();
    let mut worst: f64 = (lambdas[0] - 1.0).norm();
    for k in 1..lambdas.len() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in coeffs.iter().enumerate().take(k + 1) {
            acc += c * lambdas[k - j];
        }
        worst = worst.max(acc.norm());
    }
    worst
}

/// Expands the Euler product into `λ(1..=N)`; ramified primes contribute 1.
pub fn dirichlet_coeffs(data: &EulerData, n: usize) -> Result<CoefficientTable, AnalyticError> {
    let spf = spf_sieve(n);
    let primes = primes_up_to(n);
    for &p in &primes {
        data.factor(p)?;
    }
    let powers: Vec<(u64, Vec<Complex64>)> = primes
        .par_iter()
        .map(|&p| {
            let mut kmax = 0;
            let mut pk = 1u64;
            while pk * p <= n as u64 {
                pk *= p;
                kmax += 1;
            }
            let v = match data.factor(p).expect("checked above") {
                Some(f) => prime_power_coeffs(f, kmax),
                None => {
                    let mut v = vec![Complex64::new(0.0, 0.0); kmax + 1];
                    v[0] = Complex64::new(1.0, 0.0);
                    v
                }
            };
            (p, v)
        })
        .collect();
    let mut by_prime: Vec<&[Complex64]> = vec![&[]; n + 1];
    for (p, v) in &powers {
        by_prime[*p as usize] = v;
    }
    let mut values = vec![Complex64::new(0.0, 0.0); n.max(1)];
    values[0] = Complex64::new(1.0, 0.0);
    for k in 2..=n {
        let (p, e, m) = split_smallest(k, &spf);
        values[k - 1] = by_prime[p][e as usize] * values[m - 1];
    }
    CoefficientTable::new(values, data.rep_tag, data.source.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Checkpoint {
    pub x: u64,
    pub value: Complex64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartialL {
    pub value: Complex64,
    /// Partial products at `X, X/2, X/4, …`, ascending in `x`.
    pub trace: Vec<Checkpoint>,
    /// Set when `Re s ≤ 1`, outside the range of absolute convergence.
    pub noncontractual: bool,
}

impl PartialL {
    /// `|value − value at X/2|`, the last-doubling Cauchy difference.
    pub fn last_doubling_gap(&self) -> Option<f64> {
        let n = self.trace.len();
        (n >= 2).then(|| (self.trace[n - 1].value - self.trace[n - 2].value).norm())
    }

    pub fn trace_csv(&self) -> String {
        let mut out = String::from("checkpoint,X,Re,Im\n");
        for (i, c) in self.trace.iter().enumerate() {
            let _ = writeln!(out, "{i},{},{:.17e},{:.17e}", c.x, c.value.re, c.value.im);
        }
        out
    }
}

/// `∏_{p ≤ X, p ∉ S} 1/P_p(p^{−s})`, accumulated as a compensated sum of
/// logarithms in ascending prime order.
pub fn partial_l(s: Complex64, x: u64, data: &EulerData) -> Result<PartialL, AnalyticError> {
    let primes = primes_up_to(x as usize);
    let logs: Vec<(u64, Complex64)> = primes
        .par_iter()
        .map(|&p| match data.factor(p)? {
            None => Ok((p, Complex64::new(0.0, 0.0))),
            Some(f) => {
                let v = f.eval_at_s(s);
                if v.norm() == 0.0 || !v.is_finite() {
                    return Err(AnalyticError::LocalPole(p));
                }
                Ok((p, -v.ln()))
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<_, _>>()?;

    let mut checkpoints: Vec<u64> = (0..64)
        .map(|j| x >> j)
        .take_while(|&c| c >= 2)
        .collect();
    checkpoints.reverse();
    if checkpoints.is_empty() {
        checkpoints.push(x);
    }

    let mut acc = ComplexSum::default();
    let mut trace = Vec::with_capacity(checkpoints.len());
    let mut next = 0;
    for (p, l) in logs {
        while next < checkpoints.len() && checkpoints[next] < p {
            trace.push(Checkpoint {
                x: checkpoints[next],
                value: acc.value().exp(),
            });
            next += 1;
        }
        acc += l;
    }
    for &c in &checkpoints[next..] {
        trace.push(Checkpoint {
            x: c,
            value: acc.value().exp(),
        });
    }
    Ok(PartialL {
        value: acc.value().exp(),
        trace,
        noncontractual: s.re <= 1.0,
    })
}

const BLOCK: usize = 512;

/// Order-fixed compensated reduction of `f(n)` over `1..=n`, parallel over
/// fixed blocks.
fn block_sum(n: usize, f: impl Fn(usize) -> Complex64 + Sync) -> Complex64 {
    let blocks: Vec<Complex64> = (0..n.div_ceil(BLOCK))
        .into_par_iter()
        .map(|b| {
            let lo = b * BLOCK + 1;
            let hi = ((b + 1) * BLOCK).min(n);
            (lo..=hi).map(&f).collect::<ComplexSum>().value()
        })
        .collect();
    blocks.into_iter().collect::<ComplexSum>().value()
}

/// `Σ_{n ≤ N} λ(n) n^{−s}`.
pub fn dirichlet_sum(s: Complex64, table: &CoefficientTable, n: usize) -> Result<Complex64, AnalyticError> {
    if n > table.len() {
        return Err(AnalyticError::InsufficientCoefficients { have: table.len(), need: n });
    }
    let v = table.as_slice();
    Ok(block_sum(n, |k| v[k - 1] * (-s * (k as f64).ln()).exp()))
}

/// Archimedean and conductor data for a completed L-function.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AfeConfig {
    pub degree: usize,
    /// `κ_j` in `∏_j Γ_C(s + κ_j)`.
    pub gamma_shifts: Vec<f64>,
    pub conductor: u64,
    pub self_dual: bool,
    pub cutoff: usize,
    /// Real part of the integration contour.
    pub contour: f64,
    /// Trapezoid step along the contour.
    pub step: f64,
    /// The contour is truncated to `|Im w| ≤ height`.
    pub height: f64,
    /// `b` in the second test function `e^{w² + bw}`.
    pub probe_shift: f64,
}

impl AfeConfig {
    pub fn new(gamma_shifts: Vec<f64>, conductor: u64, self_dual: bool, cutoff: usize) -> Self {
        Self {
            degree: 2 * gamma_shifts.len(),
            gamma_shifts,
            conductor,
            self_dual,
            cutoff,
            contour: 1.0,
            step: 0.05,
            height: 10.0,
            probe_shift: 1.0,
        }
    }

    /// `Γ_C(s + 11/2)·Γ_C(s + 33/2)`, conductor 1: symmetric cube of `Δ`.
    pub fn delta_sym3() -> Self {
        Self::new(vec![5.5, 16.5], 1, true, 4000)
    }

    pub fn validate(&self) -> Result<(), AnalyticError> {
        if self.gamma_shifts.is_empty() {
            return Err(AnalyticError::EmptyGamma);
        }
        if self.degree != 2 * self.gamma_shifts.len() {
            return Err(AnalyticError::DegreeMismatch {
                degree: self.degree,
                shifts: self.gamma_shifts.len(),
            });
        }
        if self.conductor == 0 {
            return Err(AnalyticError::BadConfig("conductor must be positive".into()));
        }
        if !(self.step > 0.0 && self.height > 0.0 && self.contour > 0.0) {
            return Err(AnalyticError::BadConfig("contour parameters must be positive".into()));
        }
        Ok(())
    }

    /// `N·∏_j ((3 + |s + κ_j|)/2π)²`.
    pub fn analytic_conductor(&self, s: Complex64) -> f64 {
        self.gamma_shifts
            .iter()
            .map(|k| ((3.0 + (s + k).norm()) / (2.0 * PI)).powi(2))
            .product::<f64>()
            * self.conductor as f64
    }

    /// `⌈10·√(analytic conductor)⌉`.
    /// Default cutoff `⌈10·√(analytic conductor)⌉`; smaller cutoffs are
    /// rejected.
    pub fn needed_cutoff(&self, s: Complex64) -> usize {
        (10.0 * self.analytic_conductor(s).sqrt()).ceil() as usize
    }

    /// `|V(N)| / |V(1)|` for the smoothed weight at the configured cutoff,
    /// worst of the two sides. Far from the critical line the Gaussian
    /// smoothing decays slowly and this grows.
    pub fn tail_weight(&self, s: Complex64) -> f64 {
        let ln_n = (self.cutoff.max(1) as f64).ln();
        [s, Complex64::new(1.0, 0.0) - s]
            .iter()
            .map(|&z| {
                let nodes = kernel_nodes(z, TestFn::Gaussian, self);
                weight(&nodes, ln_n).norm() / weight(&nodes, 0.0).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// The test function in the smoothed integral.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TestFn {
    /// `e^{w²}`.
    Gaussian,
    /// `e^{w² + bw}`.
    Shifted(f64),
}

impl TestFn {
    fn eval(self, w: Complex64) -> Complex64 {
        match self {
            TestFn::Gaussian => (w * w).exp(),
            TestFn::Shifted(b) => (w * w + b * w).exp(),
        }
    }

    fn reflected(self) -> Self {
        match self {
            TestFn::Gaussian => TestFn::Gaussian,
            TestFn::Shifted(b) => TestFn::Shifted(-b),
        }
    }
}

/// Direct and dual sums; `Λ(s) = direct + ε·dual`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AfeSides {
    pub direct: Complex64,
    pub dual: Complex64,
}

impl AfeSides {
    pub fn value(&self, epsilon: Complex64) -> Complex64 {
        self.direct + epsilon * self.dual
    }
}

/// `Σ_{n ≤ cutoff} c(n) f_G(s, n)` by the trapezoid rule on `w = c + iy`.
/// Trapezoid nodes `(z, h·K(w)/2π)` on `Re w = contour` for the side
/// evaluated at `s`.
fn kernel_nodes(s: Complex64, g: TestFn, cfg: &AfeConfig) -> Vec<(Complex64, Complex64)> {
    let m = (cfg.height / cfg.step).ceil() as i64;
    let ln_n = (cfg.conductor as f64).ln();
    (-m..=m)
        .map(|k| {
            let w = Complex64::new(cfg.contour, k as f64 * cfg.step);
            let z = s + w;
            let ln_gamma: Complex64 = cfg.gamma_shifts.iter().map(|kappa| ln_gamma_c(z + kappa)).sum();
            let kernel = (0.5 * z * ln_n + ln_gamma).exp() * g.eval(w) / w;
            (z, kernel * cfg.step / (2.0 * PI))
        })
        .collect()
}

/// The smoothed weight at `n = e^{ln_n}`.
fn weight(nodes: &[(Complex64, Complex64)], ln_n: f64) -> Complex64 {
    nodes
        .iter()
        .map(|(z, k)| k * (-z * ln_n).exp())
        .collect::<ComplexSum>()
        .value()
}

fn smoothed_sum(s: Complex64, g: TestFn, cfg: &AfeConfig, coeffs: &[Complex64], conj: bool) -> Complex64 {
    let nodes = kernel_nodes(s, g, cfg);
    block_sum(coeffs.len(), |n| {
        let c = if conj { coeffs[n - 1].conj() } else { coeffs[n - 1] };
        if c == Complex64::new(0.0, 0.0) {
            return c;
        }
        c * weight(&nodes, (n as f64).ln())
    })
}

fn check_table(cfg: &AfeConfig, table: &CoefficientTable) -> Result<(), AnalyticError> {
    cfg.validate()?;
    if table.len() < cfg.cutoff {
        return Err(AnalyticError::InsufficientCoefficients {
            have: table.len(),
            need: cfg.cutoff,
        });
    }
    Ok(())
}

pub fn afe_sides(s: Complex64, g: TestFn, cfg: &AfeConfig, table: &CoefficientTable) -> Result<AfeSides, AnalyticError> {
    check_table(cfg, table)?;
    let needed = cfg.needed_cutoff(s);
    if cfg.cutoff < needed {
        return Err(AnalyticError::CutoffTooSmall {
            cutoff: cfg.cutoff,
            needed,
        });
    }
    let coeffs = &table.as_slice()[..cfg.cutoff];
    let one = Complex64::new(1.0, 0.0);
    Ok(AfeSides {
        direct: smoothed_sum(s, g, cfg, coeffs, false),
        dual: smoothed_sum(one - s, g.reflected(), cfg, coeffs, true),
    })
}

/// Both sides with the Gaussian test function.
pub fn afe_value(s: Complex64, cfg: &AfeConfig, table: &CoefficientTable) -> Result<AfeSides, AnalyticError> {
    afe_sides(s, TestFn::Gaussian, cfg, table)
}

/// `ε` from the two test functions: `A₁ + εB₁ = A₂ + εB₂`. `None` when the
/// system is numerically singular.
pub fn epsilon_at(s: Complex64, cfg: &AfeConfig, table: &CoefficientTable) -> Result<Option<Complex64>, AnalyticError> {
    let a = afe_sides(s, TestFn::Gaussian, cfg, table)?;
    let b = afe_sides(s, TestFn::Shifted(cfg.probe_shift), cfg, table)?;
    let den = b.dual - a.dual;
    let scale = a.direct.norm().max(b.direct.norm()).max(a.dual.norm()).max(b.dual.norm());
    if den.norm() <= 1e-10 * scale || scale == 0.0 {
        return Ok(None);
    }
    Ok(Some((a.direct - b.direct) / den))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SkippedPoint {
    pub s: Complex64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EpsilonReport {
    pub points: Vec<Complex64>,
    pub estimates: Vec<Complex64>,
    pub skipped: Vec<SkippedPoint>,
    pub max_pairwise_deviation: f64,
    pub modulus_deviation: f64,
    /// Mean of the estimates.
    pub epsilon: Complex64,
}

impl EpsilonReport {
    pub fn passes(&self, tol: f64) -> bool {
        !self.estimates.is_empty() && self.max_pairwise_deviation < tol && self.modulus_deviation < tol
    }
}

pub fn epsilon_probe(points: &[Complex64], cfg: &AfeConfig, table: &CoefficientTable) -> Result<EpsilonReport, AnalyticError> {
    if !cfg.self_dual {
        return Err(AnalyticError::NotSelfDual);
    }
    let mut used = Vec::new();
    let mut estimates = Vec::new();
    let mut skipped = Vec::new();
    for &s in points {
        match epsilon_at(s, cfg, table)? {
            Some(e) => {
                used.push(s);
                estimates.push(e);
            }
            None => skipped.push(SkippedPoint {
                s,
                reason: "dual sides below noise floor".into(),
            }),
        }
    }
    let mut dev: f64 = 0.0;
    for (i, a) in estimates.iter().enumerate() {
        for b in &estimates[i + 1..] {
            dev = dev.max((a - b).norm());
        }
    }
    let modulus = estimates.iter().map(|e| (e.norm() - 1.0).abs()).fold(0.0, f64::max);
    let epsilon = if estimates.is_empty() {
        Complex64::new(f64::NAN, f64::NAN)
    } else {
        estimates.iter().sum::<Complex64>() / estimates.len() as f64
    };
    Ok(EpsilonReport {
        points: used,
        estimates,
        skipped,
        max_pairwise_deviation: dev,
        modulus_deviation: modulus,
        epsilon,
    })
}

/// Probe points `1/2 + it`, `t ∈ {0.5, 1, 2}`.
pub fn default_probe_points() -> Vec<Complex64> {
    [0.5, 1.0, 2.0].iter().map(|&t| Complex64::new(0.5, t)).collect()
}

/// Multiplies evaluated values by `(1 − p^{σ₀ − s})⁻¹`, a factor with a pole
/// at `σ₀`. Used as a negative control for [`pole_scan`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InjectedPole {
    pub sigma0: f64,
    pub p: u64,
}

impl InjectedPole {
    pub fn factor(&self, s: Complex64) -> Complex64 {
        let x = ((self.sigma0 - s) * (self.p as f64).ln()).exp();
        1.0 / (1.0 - x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PoleScanConfig {
    pub threshold: f64,
    /// An interior grid value exceeding both neighbours by this factor is
    /// reported as a spike.
    pub spike_ratio: f64,
    pub injected: Option<InjectedPole>,
}

impl Default for PoleScanConfig {
    fn default() -> Self {
        Self {
            threshold: 1e6,
            spike_ratio: 2.0,
            injected: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanVerdict {
    ConsistentWithHolomorphy,
    GrowthDetected,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PoleScanReport {
    pub label: &'static str,
    pub points: Vec<f64>,
    pub values: Vec<Complex64>,
    pub max_abs: f64,
    pub threshold: f64,
    pub spike_at: Option<f64>,
    pub epsilon: Complex64,
    pub injected: Option<InjectedPole>,
    pub verdict: ScanVerdict,
}

/// Evaluates `Λ(σ) = direct + ε·dual` on `grid` points of `[a, b]` and looks
/// for unbounded values or an isolated interior spike. A consistency check,
/// not a proof of holomorphy.
pub fn pole_scan(
    a: f64,
    b: f64,
    grid: usize,
    epsilon: Complex64,
    cfg: &AfeConfig,
    table: &CoefficientTable,
    scan: &PoleScanConfig,
) -> Result<PoleScanReport, AnalyticError> {
    let points = if a == b {
        vec![a]
    } else {
        if grid < 2 {
            return Err(AnalyticError::BadConfig("grid must be at least 2".into()));
        }
        crate::intertwining::linspace(a, b, grid)
    };
    let mut values = Vec::with_capacity(points.len());
    for &sigma in &points {
        let s = Complex64::new(sigma, 0.0);
        let mut v = afe_value(s, cfg, table)?.value(epsilon);
        if let Some(inj) = scan.injected {
            v *= inj.factor(s);
        }
        values.push(v);
    }
    let mags: Vec<f64> = values
        .iter()
        .map(|v| if v.is_finite() { v.norm() } else { f64::INFINITY })
        .collect();
    let max_abs = mags.iter().copied().fold(0.0, f64::max);
    let spike_at = (1..mags.len().saturating_sub(1))
        .find(|&i| mags[i] > scan.spike_ratio * mags[i - 1] && mags[i] > scan.spike_ratio * mags[i + 1])
        .map(|i| points[i]);
    let bounded = max_abs.is_finite() && max_abs <= scan.threshold;
    let verdict = if bounded && spike_at.is_none() {
        ScanVerdict::ConsistentWithHolomorphy
    } else {
        ScanVerdict::GrowthDetected
    };
    Ok(PoleScanReport {
        label: "consistency check",
        points,
        values,
        max_abs,
        threshold: scan.threshold,
        spike_at,
        epsilon,
        injected: scan.injected,
        verdict,
    })
}
