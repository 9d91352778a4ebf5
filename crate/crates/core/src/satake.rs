//! Unramified local parameters of GL(2).
//!
//! A [`SatakeClass`] is the semisimple class `diag(α, β)` together with the
//! residue cardinality `q`. Classes are unordered pairs; constructors that
//! produce them from data use a fixed tie-break so output is reproducible:
//! `α` is the root with the larger imaginary part, and among real roots the
//! one of larger modulus.
//!
//! The central character value is `αβ`. The global convention that the
//! central character be trivial on the positive reals has no local content
//! and is not modelled.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SatakeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("weight must be at least 2, got {0}")]
    BadWeight(u32),
    #[error("central character value {0} is not on the unit circle")]
    NonUnitaryCentral(Complex64),
    #[error("twisting character value is zero")]
    ZeroTwist,
    #[error("Satake parameter is zero")]
    ZeroParameter,
    #[error("coefficient {0} is too large for floating point")]
    Overflow(String),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SatakeClass {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub q: u64,
}

fn order_roots(a: Complex64, b: Complex64) -> (Complex64, Complex64) {
    let swap = if a.im != b.im {
        b.im > a.im
    } else {
        b.norm() > a.norm()
    };
    if swap {
        (b, a)
    } else {
        (a, b)
    }
}

impl SatakeClass {
    pub fn new(alpha: Complex64, beta: Complex64, q: u64) -> Self {
        Self { alpha, beta, q }
    }

    /// Same class with the tie-break ordering applied.
    pub fn normalized(self) -> Self {
        let (alpha, beta) = order_roots(self.alpha, self.beta);
        Self { alpha, beta, q: self.q }
    }

    /// The complementary-series class `{μq^{-r}, μq^{r}}`.
    pub fn complementary(mu: Complex64, r: f64, q: u64) -> Self {
        let qr = (q as f64).powf(r);
        Self::new(mu / qr, mu * qr, q)
    }

    /// Central character value `ω(ϖ) = αβ`.
    pub fn central(&self) -> Complex64 {
        self.alpha * self.beta
    }

    pub fn trace(&self) -> Complex64 {
        self.alpha + self.beta
    }

    /// Unordered comparison within `tol`.
    pub fn same_class(&self, other: &Self, tol: f64) -> bool {
        if self.q != other.q {
            return false;
        }
        let direct = (self.alpha - other.alpha).norm() <= tol
            && (self.beta - other.beta).norm() <= tol;
        let swapped = (self.alpha - other.beta).norm() <= tol
            && (self.beta - other.alpha).norm() <= tol;
        direct || swapped
    }

    /// Largest of `|α|, |β|, |α|⁻¹, |β|⁻¹`.
    pub fn spread(&self) -> f64 {
        let (a, b) = (self.alpha.norm(), self.beta.norm());
        a.max(b).max(1.0 / a).max(1.0 / b)
    }
}

/// Satake class from a Hecke eigenvalue in the arithmetic normalization
/// `a_p = p^{(k−1)/2}(α + β)`, with `αβ = ω(p)`.
pub fn satake_from_hecke(
    a_p: Complex64,
    p: u64,
    k: u32,
    omega_p: Complex64,
) -> Result<SatakeClass, SatakeError> {
    if !is_prime(p) {
        return Err(SatakeError::NotPrime(p));
    }
    if k < 2 {
        return Err(SatakeError::BadWeight(k));
    }
    if (omega_p.norm() - 1.0).abs() > 1e-12 {
        return Err(SatakeError::NonUnitaryCentral(omega_p));
    }
    let t = a_p / (p as f64).powf((k as f64 - 1.0) / 2.0);
    Ok(roots_of_quadratic(t, omega_p, p))
}

/// Integer eigenvalue variant: the big integer is rounded to floating point
/// exactly once, then scaled.
pub fn satake_from_integer(a_p: &BigInt, p: u64, k: u32) -> Result<SatakeClass, SatakeError> {
    let a = a_p
        .to_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| SatakeError::Overflow(a_p.to_string()))?;
    satake_from_hecke(Complex64::new(a, 0.0), p, k, Complex64::new(1.0, 0.0))
}

/// Roots of `X² − tX + ω`, taking the larger root by the stable formula and
/// the other as `ω/α` so the product is exact to rounding.
fn roots_of_quadratic(t: Complex64, omega: Complex64, q: u64) -> SatakeClass {
    let disc = (t * t - 4.0 * omega).sqrt();
    let (r1, r2) = ((t + disc) / 2.0, (t - disc) / 2.0);
    let big = if r1.norm() >= r2.norm() { r1 } else { r2 };
    let small = if big.is_zero() { big } else { omega / big };
    let (alpha, beta) = order_roots(big, small);
    SatakeClass { alpha, beta, q }
}

pub fn is_tempered(c: &SatakeClass, tol: f64) -> bool {
    (c.alpha.norm() - 1.0).abs() <= tol && (c.beta.norm() - 1.0).abs() <= tol
}

/// `(μ, r)` with `{α, β} = {μq^{-r}, μq^{r}}`, `|μ| = 1`, `0 < r < 1/2`.
pub fn complementary_params(c: &SatakeClass, tol: f64) -> Option<(Complex64, f64)> {
    let (a, b) = (c.alpha.norm(), c.beta.norm());
    if a == 0.0 || b == 0.0 {
        return None;
    }
    // |α||β| = 1 and equal arguments
    if (a * b - 1.0).abs() > tol {
        return None;
    }
    let (mu_a, mu_b) = (c.alpha / a, c.beta / b);
    if (mu_a - mu_b).norm() > tol {
        return None;
    }
    let r = (b / a).ln().abs() / (2.0 * (c.q as f64).ln());
    if r <= tol || r >= 0.5 {
        return None;
    }
    Some((mu_a, r))
}

/// `(αχ, βχ)`.
pub fn twist(c: &SatakeClass, chi_p: Complex64) -> Result<SatakeClass, SatakeError> {
    if chi_p.is_zero() {
        return Err(SatakeError::ZeroTwist);
    }
    Ok(SatakeClass::new(c.alpha * chi_p, c.beta * chi_p, c.q))
}

/// `(α⁻¹, β⁻¹)`.
pub fn contragredient(c: &SatakeClass) -> Result<SatakeClass, SatakeError> {
    if c.alpha.is_zero() || c.beta.is_zero() {
        return Err(SatakeError::ZeroParameter);
    }
    Ok(SatakeClass::new(c.alpha.inv(), c.beta.inv(), c.q))
}

/// Local representation types that enter the unitarity criteria.
///
/// Supercuspidal and discrete-series kinds are ramified and cannot be read
/// off from Satake data; they are tags supplied by the caller. Characters
/// are represented by their value at a uniformizer plus finite-order flags.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LocalRepClass {
    /// Self-dual supercuspidal with trivial central character.
    SupercuspidalSelfdualTrivialCentral,
    /// Self-dual supercuspidal whose Langlands parameter has image `S₃`.
    SupercuspidalS3Image,
    DiscreteNonsupercuspidal,
    /// `π(μ, μ⁻¹)` when `order_two` is false; `π(1, μ)` with `μ` of order
    /// two when it is set.
    PrincipalTempered {
        mu: Complex64,
        mu_cubed_trivial: bool,
        order_two: bool,
    },
    /// `π(μ|·|^r, μ|·|^{-r})` with `0 < r < 1/2`.
    Complementary { mu: Complex64, r: f64 },
}

impl LocalRepClass {
    pub fn principal(mu: Complex64, tol: f64) -> Self {
        let cube = mu * mu * mu;
        LocalRepClass::PrincipalTempered {
            mu,
            mu_cubed_trivial: (cube - 1.0).norm() <= tol,
            order_two: false,
        }
    }

    /// `π(1, μ)` with `μ` quadratic.
    pub fn principal_order_two(mu: Complex64) -> Self {
        LocalRepClass::PrincipalTempered {
            mu,
            mu_cubed_trivial: false,
            order_two: true,
        }
    }

    pub fn is_tempered(&self) -> bool {
        !matches!(self, LocalRepClass::Complementary { .. })
    }

    /// Classifies an unramified class: tempered classes of the form
    /// `(μ, μ⁻¹)` become principal, `{μq^{∓r}}` become complementary.
    pub fn from_satake(c: &SatakeClass, tol: f64) -> Option<Self> {
        if is_tempered(c, tol) {
            if (c.alpha * c.beta - 1.0).norm() <= tol {
                return Some(Self::principal(c.alpha, tol));
            }
            if (c.alpha - 1.0).norm() <= tol && (c.beta + 1.0).norm() <= tol
                || (c.beta - 1.0).norm() <= tol && (c.alpha + 1.0).norm() <= tol
            {
                return Some(Self::principal_order_two(Complex64::new(-1.0, 0.0)));
            }
            return None;
        }
        complementary_params(c, tol).map(|(mu, r)| LocalRepClass::Complementary { mu, r })
    }
}
