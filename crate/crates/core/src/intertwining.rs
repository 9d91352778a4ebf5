//! Unramified constant-term calculus for the Siegel-type parabolic of G₂
//! whose Levi contains `β₁`.
//!
//! The scalar by which the long intertwining operator acts on the spherical
//! vector is assembled root by root over the unipotent radical, and checked
//! against the quotient of adjoint-cube and central-character L-factors.
//! The unitarity criteria and the `(r, s)` triangles live here as well.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::g2root::{coroot_decomposition, pairing, G2Error, PositiveRoot, RootVector, WeightVector};
use crate::localfactor::{local_factor, RepTag};
use crate::satake::{LocalRepClass, SatakeClass};

/// `|1 − χ q^{−t}|` below this counts as a pole in floating mode.
pub const POLE_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IntertwiningError {
    #[error("pole at root {root}: pairing {pairing}")]
    Pole { root: PositiveRoot, pairing: Complex64 },
    #[error("L-factor denominator vanishes")]
    ZeroDenominator,
    #[error("complementary series is classified by region membership")]
    ComplementaryRejected,
    #[error("r = {0} outside [0, 1/2)")]
    BadR(f64),
    #[error(transparent)]
    Root(#[from] G2Error),
}

/// Unramified principal series data: `μ(ϖ)`, residue field size, the
/// complementary exponent `r` and the induction parameter `s`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PrincipalParams {
    pub mu: Complex64,
    pub q: u64,
    pub r: f64,
    pub s: Complex64,
}

impl PrincipalParams {
    pub fn new(mu: Complex64, q: u64, r: f64, s: Complex64) -> Self {
        Self { mu, q, r, s }
    }

    /// `⟨Λ(r, s), β^∨⟩` at these parameters.
    pub fn pairing_value(&self, beta: &RootVector) -> Result<Complex64, G2Error> {
        Ok(pairing(&WeightVector::lambda(), beta)?.eval_complex(self.r, self.s))
    }
}

/// `χ(β^∨(ϖ)) = μ^{c6}` where `β^∨ = c1·β₁^∨ + c6·β₆^∨`.
pub fn torus_character_value(p: &PrincipalParams, beta: &RootVector) -> Result<Complex64, G2Error> {
    let (_, c6) = coroot_decomposition(beta)?;
    Ok(p.mu.powi(c6 as i32))
}

/// Product over the unipotent roots of
/// `(1 − χ_β q^{−t_β−1}) / (1 − χ_β q^{−t_β})`.
pub fn gk_coefficient(p: &PrincipalParams) -> Result<Complex64, IntertwiningError> {
    let lnq = (p.q as f64).ln();
    let mut acc = Complex64::new(1.0, 0.0);
    for root in PositiveRoot::UNIPOTENT {
        let v = root.vector();
        let chi = torus_character_value(p, &v)?;
        let t = p.pairing_value(&v)?;
        let x = chi * (-t * lnq).exp();
        let den = Complex64::new(1.0, 0.0) - x;
        if den.norm() < POLE_TOL {
            return Err(IntertwiningError::Pole { root, pairing: t });
        }
        let num = Complex64::new(1.0, 0.0) - x / p.q as f64;
        acc *= num / den;
    }
    Ok(acc)
}

/// Which class feeds the L-factors in [`l_ratio`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `(μq^{−r}, μq^{r})`.
    Direct,
    /// `(μ⁻¹q^{r}, μ⁻¹q^{−r})`.
    Contragredient,
}

/// The convention under which [`l_ratio`] agrees with [`gk_coefficient`].
pub const ADOPTED_CONVENTION: Convention = Convention::Direct;

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Direct, Convention::Contragredient];

    pub fn satake_class(self, p: &PrincipalParams) -> SatakeClass {
        let qr = (p.q as f64).powf(p.r);
        match self {
            Convention::Direct => SatakeClass::new(p.mu / qr, p.mu * qr, p.q),
            Convention::Contragredient => SatakeClass::new(p.mu.inv() * qr, p.mu.inv() / qr, p.q),
        }
    }
}

/// `L(s, r₃⁰)·L(2s, ∧²) / [L(1+s, r₃⁰)·L(1+2s, ∧²)]` for the class picked
/// by `conv`.
pub fn l_ratio_with(p: &PrincipalParams, conv: Convention) -> Result<Complex64, IntertwiningError> {
    let class = conv.satake_class(p);
    let adj = local_factor(RepTag::AdjointCube, &class).map_err(|_| IntertwiningError::ZeroDenominator)?;
    let wedge = local_factor(RepTag::Wedge2, &class).map_err(|_| IntertwiningError::ZeroDenominator)?;
    let one = Complex64::new(1.0, 0.0);
    let den = adj.eval_at_s(p.s) * wedge.eval_at_s(2.0 * p.s);
    if den.norm() < POLE_TOL {
        return Err(IntertwiningError::ZeroDenominator);
    }
    let num = adj.eval_at_s(p.s + one) * wedge.eval_at_s(2.0 * p.s + one);
    Ok(num / den)
}

pub fn l_ratio(p: &PrincipalParams) -> Result<Complex64, IntertwiningError> {
    l_ratio_with(p, ADOPTED_CONVENTION)
}

/// Relative discrepancy between the two closed forms under `conv`.
pub fn convention_discrepancy(p: &PrincipalParams, conv: Convention) -> Result<f64, IntertwiningError> {
    let gk = gk_coefficient(p)?;
    let lr = l_ratio_with(p, conv)?;
    Ok((gk - lr).norm() / gk.norm().max(f64::MIN_POSITIVE))
}

/// Picks the convention with the smaller worst-case discrepancy over
/// `samples`; returns it with both worst cases.
pub fn resolve_convention(samples: &[PrincipalParams]) -> (Convention, [f64; 2]) {
    let worst = Convention::ALL.map(|conv| {
        samples
            .iter()
            .filter_map(|p| convention_discrepancy(p, conv).ok())
            .fold(0.0, f64::max)
    });
    let pick = if worst[0] <= worst[1] {
        Convention::Direct
    } else {
        Convention::Contragredient
    };
    (pick, worst)
}

/// Roots contributing a pole to [`gk_coefficient`] for `μ = e^{2πik/n}`
/// and rational `r, s`, decided exactly: `μ^{c6} = 1` and `t_β = 0`.
pub fn exact_pole_roots(mu: (i64, u32), r: Rational64, s: Rational64) -> Vec<PositiveRoot> {
    let (k, n) = mu;
    PositiveRoot::UNIPOTENT
        .into_iter()
        .filter(|root| {
            let v = root.vector();
            let (_, c6) = coroot_decomposition(&v).expect("positive roots decompose");
            let trivial = (k * c6).rem_euclid(n as i64) == 0;
            let t = pairing(&WeightVector::lambda(), &v)
                .expect("nonzero root")
                .eval(r, s);
            trivial && t.is_zero()
        })
        .collect()
}

/// Order class of `μ` as far as the pole locus is concerned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MuOrder {
    One,
    Two,
    Other,
}

impl MuOrder {
    /// Order class of `e^{2πik/n}`.
    pub fn of_root(k: i64, n: u32) -> Self {
        let n = n as i64;
        match n / k.gcd(&n).max(1) {
            1 => MuOrder::One,
            2 => MuOrder::Two,
            _ => MuOrder::Other,
        }
    }

    pub fn from_order(order: u64) -> Self {
        match order {
            1 => MuOrder::One,
            2 => MuOrder::Two,
            _ => MuOrder::Other,
        }
    }
}

impl FromStr for MuOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1" | "one" | "trivial" => Ok(MuOrder::One),
            "2" | "two" | "order2" => Ok(MuOrder::Two),
            "other" => Ok(MuOrder::Other),
            _ => s
                .parse::<u64>()
                .ok()
                .filter(|&n| n > 0)
                .map(MuOrder::from_order)
                .ok_or_else(|| format!("bad order of mu: {s}")),
        }
    }
}

/// Real `s` at which the unnormalized intertwining scalar has poles.
pub fn winarsky_poles_exact(mu: MuOrder, r: Rational64) -> BTreeSet<Rational64> {
    let zero = Rational64::zero();
    match mu {
        MuOrder::One => {
            let three = Rational64::from_integer(3);
            [zero, r, -r, three * r, -three * r].into_iter().collect()
        }
        MuOrder::Two => [zero].into_iter().collect(),
        MuOrder::Other => BTreeSet::new(),
    }
}

/// Floating form of [`winarsky_poles_exact`], ascending and deduplicated.
pub fn winarsky_poles(mu: MuOrder, r: f64) -> Result<Vec<f64>, IntertwiningError> {
    if !(0.0..0.5).contains(&r) {
        return Err(IntertwiningError::BadR(r));
    }
    let mut v: Vec<f64> = match mu {
        MuOrder::One => vec![0.0, r, -r, 3.0 * r, -3.0 * r],
        MuOrder::Two => vec![0.0],
        MuOrder::Other => Vec::new(),
    };
    v.sort_by(f64::total_cmp);
    v.dedup();
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UnitarityCase {
    pub rep: LocalRepClass,
    pub s: f64,
}

/// Unitarity of the Langlands quotient for tempered inducing data.
pub fn quotient_unitary(u: &UnitarityCase) -> Result<bool, IntertwiningError> {
    let s = u.s;
    let half = s > 0.0 && s <= 0.5;
    let one = s > 0.0 && s <= 1.0;
    Ok(match u.rep {
        LocalRepClass::SupercuspidalSelfdualTrivialCentral => half,
        LocalRepClass::SupercuspidalS3Image => one,
        LocalRepClass::DiscreteNonsupercuspidal => half,
        LocalRepClass::PrincipalTempered { order_two: true, .. } => one,
        LocalRepClass::PrincipalTempered {
            mu_cubed_trivial: true,
            ..
        } => half || s == 1.0,
        LocalRepClass::PrincipalTempered { .. } => half,
        LocalRepClass::Complementary { .. } => return Err(IntertwiningError::ComplementaryRejected),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MuCase {
    Trivial,
    Order2,
}

impl FromStr for MuCase {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "trivial" | "1" => Ok(MuCase::Trivial),
            "order2" | "2" => Ok(MuCase::Order2),
            _ => Err(format!("bad mu case: {s}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    UpperTriangle,
    LowerTriangle,
    Boundary,
    Outside,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::UpperTriangle => "upper-triangle",
            Region::LowerTriangle => "lower-triangle",
            Region::Boundary => "boundary",
            Region::Outside => "outside",
        })
    }
}

/// Coordinates admitting a sign test on `a·r + b·s + c`.
pub trait PlaneCoord: Copy {
    fn sign(a: i64, b: i64, c: (i64, i64), r: Self, s: Self) -> Ordering;
}

/// Forms within this distance of zero count as zero for `f64` input.
pub const REGION_EPS: f64 = 1e-12;

impl PlaneCoord for f64 {
    fn sign(a: i64, b: i64, c: (i64, i64), r: f64, s: f64) -> Ordering {
        let v = a as f64 * r + b as f64 * s + c.0 as f64 / c.1 as f64;
        if v > REGION_EPS {
            Ordering::Greater
        } else if v < -REGION_EPS {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl PlaneCoord for Rational64 {
    fn sign(a: i64, b: i64, c: (i64, i64), r: Rational64, s: Rational64) -> Ordering {
        let v = Rational64::from_integer(a) * r + Rational64::from_integer(b) * s + Rational64::new(c.0, c.1);
        if v.is_positive() {
            Ordering::Greater
        } else if v.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// A triangle as three forms `a·r + b·s + c`, positive inside.
type Triangle = [(i64, i64, (i64, i64)); 3];

/// Vertices `(1/6, 1/2)`, `(1/4, 3/4)`, `(0, 1)`.
const UPPER: Triangle = [(3, 1, (-1, 1)), (-1, -1, (1, 1)), (-3, 1, (0, 1))];
/// Vertices `(0, 0)`, `(0, 1/2)`, `(1/6, 1/2)`.
const LOWER: Triangle = [(1, 0, (0, 1)), (0, -1, (1, 2)), (-3, 1, (0, 1))];
/// Vertices `(0, 1)`, `(1/6, 1/2)`, `(0, 1/2)`.
const FORBIDDEN: Triangle = [(1, 0, (0, 1)), (0, 1, (-1, 2)), (-3, -1, (1, 1))];

#[derive(PartialEq)]
enum Place {
    Interior,
    Edge,
    Off,
}

fn place<C: PlaneCoord>(t: &Triangle, r: C, s: C) -> Place {
    let signs = t.map(|(a, b, c)| C::sign(a, b, c, r, s));
    if signs.iter().all(|&o| o == Ordering::Greater) {
        Place::Interior
    } else if signs.iter().all(|&o| o != Ordering::Less) {
        Place::Edge
    } else {
        Place::Off
    }
}

/// Classifies `(r, s)` against the triangles relevant for `mu`. The upper
/// triangle only applies to trivial `μ`. Edges and vertices are boundary.
pub fn region_membership<C: PlaneCoord>(r: C, s: C, mu: MuCase) -> Region {
    let upper = match mu {
        MuCase::Trivial => place(&UPPER, r, s),
        MuCase::Order2 => Place::Off,
    };
    let lower = place(&LOWER, r, s);
    if upper == Place::Interior {
        Region::UpperTriangle
    } else if lower == Place::Interior {
        Region::LowerTriangle
    } else if upper == Place::Edge || lower == Place::Edge {
        Region::Boundary
    } else {
        Region::Outside
    }
}

/// Strict interior of the triangle `(0, 1)`, `(1/6, 1/2)`, `(0, 1/2)`.
pub fn forbidden_triangle_contains<C: PlaneCoord>(r: C, s: C) -> bool {
    place(&FORBIDDEN, r, s) == Place::Interior
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegionPoint {
    pub i: usize,
    pub j: usize,
    pub r: f64,
    pub s: f64,
    pub region: Region,
    pub forbidden: bool,
}

/// Evenly spaced samples of `[lo, hi]`, endpoints included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

/// Classifies every point of `rs × ss`, row-major in `(i, j)`.
pub fn region_grid(rs: &[f64], ss: &[f64], mu: MuCase) -> Vec<RegionPoint> {
    let mut pts: Vec<RegionPoint> = (0..rs.len() * ss.len())
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / ss.len(), idx % ss.len());
            let (r, s) = (rs[i], ss[j]);
            RegionPoint {
                i,
                j,
                r,
                s,
                region: region_membership(r, s, mu),
                forbidden: forbidden_triangle_contains(r, s),
            }
        })
        .collect();
    pts.sort_by_key(|p| (p.i, p.j));
    pts
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntertwinePoint {
    pub i: usize,
    pub j: usize,
    pub r: f64,
    pub s: f64,
    pub gk: Option<Complex64>,
    pub l_ratio: Option<Complex64>,
    pub rel_err: Option<f64>,
    /// Root responsible for a pole of the root-by-root product, if any.
    pub pole_root: Option<String>,
}

/// Evaluates both closed forms at real `s` over `rs × ss`.
pub fn intertwine_grid(mu: Complex64, q: u64, rs: &[f64], ss: &[f64]) -> Vec<IntertwinePoint> {
    let mut pts: Vec<IntertwinePoint> = (0..rs.len() * ss.len())
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / ss.len(), idx % ss.len());
            let p = PrincipalParams::new(mu, q, rs[i], Complex64::new(ss[j], 0.0));
            let gk = gk_coefficient(&p);
            let lr = l_ratio(&p).ok();
            let pole_root = match &gk {
                Err(IntertwiningError::Pole { root, .. }) => Some(root.to_string()),
                _ => None,
            };
            let gk = gk.ok();
            let rel_err = match (gk, lr) {
                (Some(a), Some(b)) => Some((a - b).norm() / a.norm().max(f64::MIN_POSITIVE)),
                _ => None,
            };
            IntertwinePoint {
                i,
                j,
                r: rs[i],
                s: ss[j],
                gk,
                l_ratio: lr,
                rel_err,
                pole_root,
            }
        })
        .collect();
    pts.sort_by_key(|p| (p.i, p.j));
    pts
}
