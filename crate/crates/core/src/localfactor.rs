//! Unramified local L-factors as reciprocal polynomials in `T = q^{-s}`,
//! and the factorization identities relating them.
//!
//! Each factor is `P(T) = ∏(1 − λᵢT)` over the eigenvalue multiset of the
//! defining representation evaluated on `diag(α, β)`. Identities are checked
//! in division-free form by comparing polynomial coefficients, which avoids
//! matching roots against each other.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::dd::DdComplex;
use crate::poly::ReciprocalPoly;
use crate::satake::{twist, SatakeClass};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalFactorError {
    #[error("{0} needs invertible Satake parameters")]
    Degenerate(RepTag),
    #[error("eigenvalue list is empty")]
    EmptyEigenvalues,
}

/// Representations of `GL₂(ℂ)` whose local factors appear here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepTag {
    /// `r₁`, the standard representation.
    Standard,
    Sym2,
    /// `r₃ = sym³`.
    Sym3,
    /// `r₃⁰ = r₃ ⊗ (∧²r₁)⁻¹`.
    AdjointCube,
    /// `∧²r₁`, i.e. the central character.
    Wedge2,
    /// Adjoint square lift to GL(3).
    GjAdjoint,
    /// `π × Π` with `Π` the adjoint square lift.
    RankinSelberg,
    /// `π × π × π`.
    Triple,
}

impl RepTag {
    pub const ALL: [RepTag; 8] = [
        RepTag::Standard,
        RepTag::Sym2,
        RepTag::Sym3,
        RepTag::AdjointCube,
        RepTag::Wedge2,
        RepTag::GjAdjoint,
        RepTag::RankinSelberg,
        RepTag::Triple,
    ];

    pub fn dimension(self) -> usize {
        match self {
            RepTag::Wedge2 => 1,
            RepTag::Standard => 2,
            RepTag::Sym2 | RepTag::GjAdjoint => 3,
            RepTag::Sym3 | RepTag::AdjointCube => 4,
            RepTag::RankinSelberg => 6,
            RepTag::Triple => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RepTag::Standard => "standard",
            RepTag::Sym2 => "sym2",
            RepTag::Sym3 => "sym3",
            RepTag::AdjointCube => "adjoint-cube",
            RepTag::Wedge2 => "wedge2",
            RepTag::GjAdjoint => "gj-adjoint",
            RepTag::RankinSelberg => "rankin-selberg",
            RepTag::Triple => "triple",
        }
    }

    fn needs_inverse(self) -> bool {
        matches!(
            self,
            RepTag::AdjointCube | RepTag::GjAdjoint | RepTag::RankinSelberg
        )
    }
}

impl fmt::Display for RepTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let tag = match key.as_str() {
            "standard" | "r1" | "std" => RepTag::Standard,
            "sym2" => RepTag::Sym2,
            "sym3" | "r3" => RepTag::Sym3,
            "adjoint-cube" | "r30" | "adjointcube" => RepTag::AdjointCube,
            "wedge2" => RepTag::Wedge2,
            "gj-adjoint" | "gj" => RepTag::GjAdjoint,
            "rankin-selberg" | "rs" => RepTag::RankinSelberg,
            "triple" => RepTag::Triple,
            _ => return Err(format!("unknown representation tag '{s}'")),
        };
        Ok(tag)
    }
}

/// Eigenvalues of `diag(α, β)` under `tag`, in the order of the defining
/// product formulas.
pub fn eigenvalues<S: Scalar>(tag: RepTag, alpha: &S, beta: &S) -> Result<Vec<S>, LocalFactorError> {
    let a = alpha.clone();
    let b = beta.clone();
    let (ai, bi) = if tag.needs_inverse() {
        match (a.try_inv(), b.try_inv()) {
            (Some(ai), Some(bi)) => (ai, bi),
            _ => return Err(LocalFactorError::Degenerate(tag)),
        }
    } else {
        (S::one(), S::one())
    };
    let ev = match tag {
        RepTag::Standard => vec![a, b],
        RepTag::Sym2 => vec![a.clone() * a.clone(), a.clone() * b.clone(), b.clone() * b],
        RepTag::Sym3 => sym_power(&a, &b, 3),
        RepTag::AdjointCube => vec![
            a.clone() * a.clone() * bi.clone(),
            a.clone(),
            b.clone(),
            ai.clone() * b.clone() * b,
        ],
        RepTag::Wedge2 => vec![a * b],
        RepTag::GjAdjoint => vec![a * bi, S::one(), ai * b],
        RepTag::RankinSelberg => {
            let gj = [a.clone() * bi, S::one(), ai * b.clone()];
            let std = [a, b];
            std.iter()
                .flat_map(|x| gj.iter().map(move |y| x.clone() * y.clone()))
                .collect()
        }
        RepTag::Triple => {
            let std = [a, b];
            let mut out = Vec::with_capacity(8);
            for x in &std {
                for y in &std {
                    for z in &std {
                        out.push(x.clone() * y.clone() * z.clone());
                    }
                }
            }
            out
        }
    };
    Ok(ev)
}

/// `α^{m−j} β^j` for `j = 0..=m`.
fn sym_power<S: Scalar>(a: &S, b: &S, m: u32) -> Vec<S> {
    (0..=m).map(|j| a.pow(m - j) * b.pow(j)).collect()
}

/// Generic form of [`local_factor`] over any coefficient field.
pub fn local_factor_generic<S: Scalar>(
    tag: RepTag,
    alpha: &S,
    beta: &S,
    q: u64,
) -> Result<ReciprocalPoly<S>, LocalFactorError> {
    let ev = eigenvalues(tag, alpha, beta)?;
    Ok(ReciprocalPoly::from_reciprocal_roots(&ev, q))
}

pub fn local_factor(tag: RepTag, c: &SatakeClass) -> Result<ReciprocalPoly, LocalFactorError> {
    local_factor_generic(tag, &c.alpha, &c.beta, c.q)
}

/// `∏_{i,j}(1 − aᵢbⱼT)` for `a = (α, β)` against an arbitrary eigenvalue list.
pub fn rankin_selberg_generic<S: Scalar>(
    alpha: &S,
    beta: &S,
    b_eigen: &[S],
    q: u64,
) -> Result<ReciprocalPoly<S>, LocalFactorError> {
    if b_eigen.is_empty() {
        return Err(LocalFactorError::EmptyEigenvalues);
    }
    let ev: Vec<S> = [alpha, beta]
        .iter()
        .flat_map(|x| b_eigen.iter().map(move |y| (*x).clone() * y.clone()))
        .collect();
    Ok(ReciprocalPoly::from_reciprocal_roots(&ev, q))
}

pub fn rankin_selberg(c: &SatakeClass, b_eigen: &[Complex64]) -> Result<ReciprocalPoly, LocalFactorError> {
    rankin_selberg_generic(&c.alpha, &c.beta, b_eigen, c.q)
}

pub fn triple_product_generic<S: Scalar>(alpha: &S, beta: &S, q: u64) -> ReciprocalPoly<S> {
    local_factor_generic(RepTag::Triple, alpha, beta, q).expect("triple product needs no inverses")
}

pub fn triple_product(c: &SatakeClass) -> ReciprocalPoly {
    triple_product_generic(&c.alpha, &c.beta, c.q)
}

/// Triple product against `L(s, π, r₃)·L(s, π ⊗ ω)²`.
pub fn check_triple_identity_generic<S: Scalar>(alpha: &S, beta: &S, q: u64) -> f64 {
    let lhs = triple_product_generic(alpha, beta, q);
    let sym3 = local_factor_generic(RepTag::Sym3, alpha, beta, q).expect("sym3 has no inverses");
    let omega = alpha.clone() * beta.clone();
    let tw = local_factor_generic(
        RepTag::Standard,
        &(alpha.clone() * omega.clone()),
        &(beta.clone() * omega),
        q,
    )
    .expect("standard has no inverses");
    let rhs = &(&sym3 * &tw) * &tw;
    lhs.max_discrepancy(&rhs)
}

pub fn check_triple_identity(c: &SatakeClass) -> f64 {
    let (a, b) = dd_pair(c);
    check_triple_identity_generic(&a, &b, c.q)
}

/// `L(s, π, r₃)` against `L(s, π ⊗ ω, r₃⁰)`.
pub fn check_twist_identity_generic<S: Scalar>(
    alpha: &S,
    beta: &S,
    q: u64,
) -> Result<f64, LocalFactorError> {
    let sym3 = local_factor_generic(RepTag::Sym3, alpha, beta, q)?;
    let omega = alpha.clone() * beta.clone();
    let adj = local_factor_generic(
        RepTag::AdjointCube,
        &(alpha.clone() * omega.clone()),
        &(beta.clone() * omega),
        q,
    )?;
    Ok(sym3.max_discrepancy(&adj))
}

pub fn check_twist_identity(c: &SatakeClass) -> Result<f64, LocalFactorError> {
    let (a, b) = dd_pair(c);
    check_twist_identity_generic(&a, &b, c.q)
}

/// Same comparison through the public `f64` twist. Rounding of `αω` makes
/// this agree only to relative precision.
pub fn check_twist_identity_f64(c: &SatakeClass) -> Result<f64, LocalFactorError> {
    let t = twist(c, c.central()).map_err(|_| LocalFactorError::Degenerate(RepTag::AdjointCube))?;
    let sym3 = local_factor(RepTag::Sym3, c)?;
    let adj = local_factor(RepTag::AdjointCube, &t)?;
    Ok(sym3.max_discrepancy(&adj))
}

/// `L(s, π × Π) = L(s, π, r₃⁰)·L(s, π)` with `Π` the adjoint square lift.
pub fn check_gj_identity_generic<S: Scalar>(alpha: &S, beta: &S, q: u64) -> Result<f64, LocalFactorError> {
    let gj = eigenvalues(RepTag::GjAdjoint, alpha, beta)?;
    let lhs = rankin_selberg_generic(alpha, beta, &gj, q)?;
    let adj = local_factor_generic(RepTag::AdjointCube, alpha, beta, q)?;
    let std = local_factor_generic(RepTag::Standard, alpha, beta, q)?;
    Ok(lhs.max_discrepancy(&(&adj * &std)))
}

pub fn check_gj_identity(c: &SatakeClass) -> Result<f64, LocalFactorError> {
    let (a, b) = dd_pair(c);
    check_gj_identity_generic(&a, &b, c.q)
}

/// Satake parameters lifted to double-double; the class-level checks run
/// there so large coefficients keep absolute errors far below `f64` ulp.
fn dd_pair(c: &SatakeClass) -> (DdComplex, DdComplex) {
    (c.alpha.into(), c.beta.into())
}

/// Which identity suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentitySuite {
    Triple,
    Twist,
    GelbartJacquet,
}

impl IdentitySuite {
    pub const ALL: [IdentitySuite; 3] = [
        IdentitySuite::Triple,
        IdentitySuite::Twist,
        IdentitySuite::GelbartJacquet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentitySuite::Triple => "triple",
            IdentitySuite::Twist => "twist",
            IdentitySuite::GelbartJacquet => "gj",
        }
    }

    pub fn check(self, c: &SatakeClass) -> Result<f64, LocalFactorError> {
        match self {
            IdentitySuite::Triple => Ok(check_triple_identity(c)),
            IdentitySuite::Twist => check_twist_identity(c),
            IdentitySuite::GelbartJacquet => check_gj_identity(c),
        }
    }

    pub fn check_generic<S: Scalar>(self, alpha: &S, beta: &S, q: u64) -> Result<f64, LocalFactorError> {
        match self {
            IdentitySuite::Triple => Ok(check_triple_identity_generic(alpha, beta, q)),
            IdentitySuite::Twist => check_twist_identity_generic(alpha, beta, q),
            IdentitySuite::GelbartJacquet => check_gj_identity_generic(alpha, beta, q),
        }
    }
}

impl FromStr for IdentitySuite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "triple" => Ok(IdentitySuite::Triple),
            "twist" => Ok(IdentitySuite::Twist),
            "gj" | "gelbart-jacquet" => Ok(IdentitySuite::GelbartJacquet),
            _ => Err(format!("unknown identity suite '{s}'")),
        }
    }
}

/// Worst discrepancy of `suite` over a batch, evaluated in parallel. The
/// per-item results are returned in input order.
pub fn run_suite(suite: IdentitySuite, classes: &[SatakeClass]) -> Result<Vec<f64>, LocalFactorError> {
    use rayon::prelude::*;
    classes.par_iter().map(|c| suite.check(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Cyclo;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn from_roots(roots: &[Complex64]) -> ReciprocalPoly {
        ReciprocalPoly::from_reciprocal_roots(roots, 2)
    }

    #[test]
    fn degrees_match_dimensions() {
        let s = SatakeClass::new(c(0.3, 1.1), c(-0.7, 0.2), 2);
        for tag in RepTag::ALL {
            let p = local_factor(tag, &s).unwrap();
            assert_eq!(p.degree(), tag.dimension(), "{tag}");
            assert_eq!(p.coeffs()[0], c(1.0, 0.0));
        }
    }

    #[test]
    fn sym3_at_identity() {
        let s = SatakeClass::new(c(1.0, 0.0), c(1.0, 0.0), 3);
        let p = local_factor(RepTag::Sym3, &s).unwrap();
        let expect = [1.0, -4.0, 6.0, -4.0, 1.0];
        for (a, e) in p.coeffs().iter().zip(expect) {
            assert_eq!(*a, c(e, 0.0));
        }
    }

    #[test]
    fn adjoint_cube_at_two_half() {
        let s = SatakeClass::new(c(2.0, 0.0), c(0.5, 0.0), 5);
        let p = local_factor(RepTag::AdjointCube, &s).unwrap();
        let expect = from_roots(&[c(8.0, 0.0), c(2.0, 0.0), c(0.5, 0.0), c(0.125, 0.0)]);
        assert!(p.max_discrepancy(&expect) < 1e-13);
    }

    #[test]
    fn wedge2_is_central_character() {
        let s = SatakeClass::new(c(0.3, 0.2), c(1.5, -0.4), 7);
        let p = local_factor(RepTag::Wedge2, &s).unwrap();
        assert_eq!(p.coeffs(), &[c(1.0, 0.0), -s.alpha * s.beta]);
    }

    #[test]
    fn degenerate_parameters_rejected() {
        let s = SatakeClass::new(c(0.0, 0.0), c(1.0, 0.0), 7);
        assert_eq!(
            local_factor(RepTag::AdjointCube, &s),
            Err(LocalFactorError::Degenerate(RepTag::AdjointCube))
        );
        assert!(local_factor(RepTag::Sym3, &s).is_ok());
        assert_eq!(rankin_selberg(&s, &[]), Err(LocalFactorError::EmptyEigenvalues));
    }

    #[test]
    fn rankin_selberg_examples() {
        let one = SatakeClass::new(c(1.0, 0.0), c(1.0, 0.0), 2);
        let p = rankin_selberg(&one, &[c(1.0, 0.0)]).unwrap();
        assert_eq!(p.coeffs(), &[c(1.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0)]);

        let i = SatakeClass::new(c(0.0, 1.0), c(0.0, -1.0), 2);
        let p = rankin_selberg(&i, &[c(1.0, 0.0)]).unwrap();
        assert!(p.max_discrepancy(&ReciprocalPoly::from_coeffs(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 2).unwrap()) < 1e-15);

        let s = SatakeClass::new(c(0.9, 0.3), c(-0.2, 1.4), 2);
        let gj = eigenvalues(RepTag::GjAdjoint, &s.alpha, &s.beta).unwrap();
        let p = rankin_selberg(&s, &gj).unwrap();
        let (a, b) = (s.alpha, s.beta);
        let expect = from_roots(&[a * a / b, a, a, b, b, b * b / a]);
        assert!(p.max_discrepancy(&expect) < 1e-13);
    }

    #[test]
    fn triple_product_linear_coefficient() {
        let s = SatakeClass::new(c(0.4, -0.9), c(1.3, 0.5), 2);
        let p = triple_product(&s);
        let t = s.alpha + s.beta;
        assert!((p.coeffs()[1] + t * t * t).norm() < 1e-13);
        let one = SatakeClass::new(c(1.0, 0.0), c(1.0, 0.0), 2);
        assert_eq!(check_triple_identity(&one), 0.0);
    }

    #[test]
    fn identities_hold_off_the_unit_circle() {
        let s = SatakeClass::new(c(2.0, 0.0), c(0.5, 0.0), 3);
        assert!(check_triple_identity(&s) < 1e-12);
        assert!(check_twist_identity(&s).unwrap() < 1e-12);
        assert!(check_gj_identity(&s).unwrap() < 1e-12);
        let q = 5.0f64;
        let comp = SatakeClass::new(c(q.powf(-0.25), 0.0), c(q.powf(0.25), 0.0), 5);
        assert!(check_gj_identity(&comp).unwrap() < 1e-12);
    }

    #[test]
    fn exact_identities_at_eighth_roots() {
        let a = Cyclo::root_of_unity(1, 8);
        let b = Cyclo::root_of_unity(3, 8);
        for suite in IdentitySuite::ALL {
            assert_eq!(suite.check_generic(&a, &b, 17).unwrap(), 0.0, "{suite:?}");
        }
        let z8 = Complex64::from_polar(1.0, std::f64::consts::TAU / 8.0);
        let s = SatakeClass::new(z8, z8 * z8 * z8, 17);
        assert!(check_twist_identity(&s).unwrap() < 1e-14);
    }

    #[test]
    fn exact_mode_detects_a_broken_identity() {
        let a = Cyclo::root_of_unity(1, 5);
        let b = Cyclo::root_of_unity(2, 5);
        let sym3 = local_factor_generic(RepTag::Sym3, &a, &b, 2).unwrap();
        let adj = local_factor_generic(RepTag::AdjointCube, &a, &b, 2).unwrap();
        // without the twist the two factors differ
        assert!(sym3.max_discrepancy(&adj) > 0.0);
    }

    #[test]
    fn tags_parse() {
        for tag in RepTag::ALL {
            assert_eq!(tag.name().parse::<RepTag>().unwrap(), tag);
        }
        assert!("sym9".parse::<RepTag>().is_err());
    }
}
