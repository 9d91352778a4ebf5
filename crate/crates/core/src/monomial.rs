//! Monomial (dihedral) representations: local parameters induced from a
//! Hecke character of a quadratic extension, and the factorization of their
//! symmetric-cube and adjoint-cube factors into Hecke L-factors.
//!
//! Splitting types and character values are input data; nothing here
//! constructs the character from a field. All factors are polynomials in
//! `T = p^{-s}` for the rational prime `p`, so inert primes (norm `p²`)
//! contribute polynomials in `T²`.
//!
//! Two conventions for the conjugate character are in play: the `sym³`
//! factorization uses `χ²χ′`, the adjoint-cube one `χ²χ′⁻¹`. Each is
//! checked against its own statement.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::cyclo::Cyclo;
use crate::poly::{det_poly, Poly, ReciprocalPoly};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MonomialError {
    #[error("split prime {0} needs two character values")]
    MissingConjugateValue(u64),
    #[error("character value at {0} is zero")]
    ZeroValue(u64),
    #[error("Frobenius matrix is singular")]
    Singular,
    #[error("a trivial character induces a non-cuspidal representation")]
    NonCuspidal,
    #[error("character order must be positive")]
    BadOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Split,
    Inert,
}

/// A character value, either a floating complex number or an exact root of
/// unity `e^{2πik/n}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ChiValue {
    Complex(Complex64),
    Root { k: i64, n: u32 },
}

impl ChiValue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            ChiValue::Complex(c) => c,
            ChiValue::Root { k, n } => {
                Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64)
            }
        }
    }

    pub fn to_exact(self) -> Option<Cyclo> {
        match self {
            ChiValue::Root { k, n } => Some(Cyclo::root_of_unity(k, n)),
            ChiValue::Complex(_) => None,
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, ChiValue::Complex(c) if c.norm() == 0.0)
    }
}

impl From<Complex64> for ChiValue {
    fn from(c: Complex64) -> Self {
        ChiValue::Complex(c)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeckeLocalData {
    pub p: u64,
    pub splitting: Splitting,
    /// `χ(𝔭)` for split primes, `χ(p·O_K)` for inert ones.
    pub chi_p: ChiValue,
    /// `χ(𝔭̄) = χ′(𝔭)`, split primes only.
    pub chi_pbar: Option<ChiValue>,
}

impl HeckeLocalData {
    pub fn split(p: u64, chi_p: impl Into<ChiValue>, chi_pbar: impl Into<ChiValue>) -> Self {
        Self {
            p,
            splitting: Splitting::Split,
            chi_p: chi_p.into(),
            chi_pbar: Some(chi_pbar.into()),
        }
    }

    pub fn inert(p: u64, chi_p: impl Into<ChiValue>) -> Self {
        Self {
            p,
            splitting: Splitting::Inert,
            chi_p: chi_p.into(),
            chi_pbar: None,
        }
    }

    fn validate(&self) -> Result<(), MonomialError> {
        if self.splitting == Splitting::Split && self.chi_pbar.is_none() {
            return Err(MonomialError::MissingConjugateValue(self.p));
        }
        if self.chi_p.is_zero() || self.chi_pbar.is_some_and(ChiValue::is_zero) {
            return Err(MonomialError::ZeroValue(self.p));
        }
        Ok(())
    }

    /// True when every value is an exact root of unity.
    pub fn is_exact(&self) -> bool {
        matches!(self.chi_p, ChiValue::Root { .. })
            && self.chi_pbar.is_none_or(|v| matches!(v, ChiValue::Root { .. }))
    }

    fn values<S: Scalar>(&self, conv: impl Fn(ChiValue) -> Option<S>) -> Option<(S, Option<S>)> {
        let a = conv(self.chi_p)?;
        let b = match self.chi_pbar {
            Some(v) => Some(conv(v)?),
            None => None,
        };
        Some((a, b))
    }
}

/// Frobenius of the induced Weil-group representation at `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedClass<S = Complex64> {
    pub frobenius: [[S; 2]; 2],
    pub p: u64,
}

impl<S: Scalar> InducedClass<S> {
    pub fn determinant(&self) -> S {
        let [[a, b], [c, d]] = self.frobenius.clone();
        a * d - b * c
    }

    /// `det(I − M·T)`, the standard local factor of `π(χ)` at `p`.
    pub fn standard_factor(&self) -> ReciprocalPoly<S> {
        let [[a, _], [_, d]] = self.frobenius.clone();
        let trace = a + d;
        let poly = Poly::new(vec![S::one(), -trace, self.determinant()]);
        ReciprocalPoly::from_poly_unchecked(poly, self.p)
    }
}

fn induced_generic<S: Scalar>(
    d: &HeckeLocalData,
    chi_p: S,
    chi_pbar: Option<S>,
) -> Result<InducedClass<S>, MonomialError> {
    let frobenius = match d.splitting {
        Splitting::Split => {
            let b = chi_pbar.ok_or(MonomialError::MissingConjugateValue(d.p))?;
            [[chi_p, S::zero()], [S::zero(), b]]
        }
        Splitting::Inert => [[S::zero(), chi_p], [S::one(), S::zero()]],
    };
    Ok(InducedClass { frobenius, p: d.p })
}

pub fn induced_local(d: &HeckeLocalData) -> Result<InducedClass, MonomialError> {
    d.validate()?;
    let (a, b) = d
        .values(|v| Some(v.to_complex()))
        .expect("complex conversion is total");
    induced_generic(d, a, b)
}

pub fn induced_local_exact(d: &HeckeLocalData) -> Result<Option<InducedClass<Cyclo>>, MonomialError> {
    d.validate()?;
    match d.values(ChiValue::to_exact) {
        Some((a, b)) => induced_generic(d, a, b).map(Some),
        None => Ok(None),
    }
}

/// `sym^m` of a 2×2 matrix on the basis `x^m, x^{m−1}y, …, y^m`, with the
/// matrix acting on column vectors.
pub fn symmetric_power_matrix<S: Scalar>(m: &[[S; 2]; 2], power: u32) -> Vec<Vec<S>> {
    let [[a, b], [c, d]] = m.clone();
    let n = power as usize + 1;
    let mut out = vec![vec![S::zero(); n]; n];
    for j in 0..n {
        // image of x^{m-j} y^j is (a x + c y)^{m-j} (b x + d y)^j; track the
        // coefficient of (y/x)^i
        let mut col = Poly::one();
        for _ in 0..(n - 1 - j) {
            col = col.mul(&Poly::linear(a.clone(), c.clone()));
        }
        for _ in 0..j {
            col = col.mul(&Poly::linear(b.clone(), d.clone()));
        }
        for (i, row) in out.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
    }
    out
}

/// `det(I − A·T)` for a square matrix `A`.
fn char_poly_reciprocal<S: Scalar>(a: &[Vec<S>]) -> Poly<S> {
    let n = a.len();
    let m: Vec<Vec<Poly<S>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { S::one() } else { S::zero() };
                    Poly::linear(diag, -a[i][j].clone())
                })
                .collect()
        })
        .collect();
    det_poly(&m)
}

/// `det(I − sym³(M)·T)`.
pub fn symcube_char_poly<S: Scalar>(m: &[[S; 2]; 2], p: u64) -> ReciprocalPoly<S> {
    let sym = symmetric_power_matrix(m, 3);
    ReciprocalPoly::from_poly_unchecked(char_poly_reciprocal(&sym), p)
}

/// `det(I − sym³(M)·det(M)⁻¹·T)`.
pub fn adjointcube_char_poly<S: Scalar>(m: &[[S; 2]; 2], p: u64) -> Result<ReciprocalPoly<S>, MonomialError> {
    let [[a, b], [c, d]] = m.clone();
    let det_inv = (a * d - b * c).try_inv().ok_or(MonomialError::Singular)?;
    let sym: Vec<Vec<S>> = symmetric_power_matrix(m, 3)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x * det_inv.clone()).collect())
        .collect();
    Ok(ReciprocalPoly::from_poly_unchecked(char_poly_reciprocal(&sym), p))
}

/// Local factor of `L(s, χ^a·χ′^b)` at the rational prime `p`.
fn hecke_factor_generic<S: Scalar>(
    d: &HeckeLocalData,
    chi_p: &S,
    chi_pbar: Option<&S>,
    exponents: (i64, i64),
) -> Result<ReciprocalPoly<S>, MonomialError> {
    let (ea, eb) = exponents;
    let pw = |x: &S, e: i64| x.powi(e).ok_or(MonomialError::ZeroValue(d.p));
    match d.splitting {
        Splitting::Split => {
            let bar = chi_pbar.ok_or(MonomialError::MissingConjugateValue(d.p))?;
            // χ′(𝔭) = χ(𝔭̄)
            let at_p = pw(chi_p, ea)? * pw(bar, eb)?;
            let at_pbar = pw(bar, ea)? * pw(chi_p, eb)?;
            Ok(ReciprocalPoly::from_reciprocal_roots(&[at_p, at_pbar], d.p))
        }
        Splitting::Inert => {
            // conjugation fixes the inert prime
            let v = pw(chi_p, ea + eb)?;
            let poly = Poly::new(vec![S::one(), S::zero(), -v]);
            Ok(ReciprocalPoly::from_poly_unchecked(poly, d.p))
        }
    }
}

pub fn hecke_factor(d: &HeckeLocalData, exponents: (i64, i64)) -> Result<ReciprocalPoly, MonomialError> {
    d.validate()?;
    let (a, b) = d.values(|v| Some(v.to_complex())).expect("total");
    hecke_factor_generic(d, &a, b.as_ref(), exponents)
}

pub fn hecke_factor_exact(
    d: &HeckeLocalData,
    exponents: (i64, i64),
) -> Result<Option<ReciprocalPoly<Cyclo>>, MonomialError> {
    d.validate()?;
    match d.values(ChiValue::to_exact) {
        Some((a, b)) => hecke_factor_generic(d, &a, b.as_ref(), exponents).map(Some),
        None => Ok(None),
    }
}

/// Outcome of a factorization check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MonomialCheck {
    pub p: u64,
    pub error: f64,
    /// True when the comparison ran in exact cyclotomic arithmetic.
    pub exact: bool,
}

fn check_generic<S: Scalar>(
    d: &HeckeLocalData,
    chi_p: S,
    chi_pbar: Option<S>,
    adjoint: bool,
) -> Result<f64, MonomialError> {
    let induced = induced_generic(d, chi_p.clone(), chi_pbar.clone())?;
    if adjoint {
        let lhs = adjointcube_char_poly(&induced.frobenius, d.p)?;
        let f1 = hecke_factor_generic(d, &chi_p, chi_pbar.as_ref(), (2, -1))?;
        let f2 = hecke_factor_generic(d, &chi_p, chi_pbar.as_ref(), (1, 0))?;
        Ok(lhs.max_discrepancy(&(&f1 * &f2)))
    } else {
        let lhs = symcube_char_poly(&induced.frobenius, d.p);
        let f1 = hecke_factor_generic(d, &chi_p, chi_pbar.as_ref(), (3, 0))?;
        let f2 = hecke_factor_generic(d, &chi_p, chi_pbar.as_ref(), (2, 1))?;
        Ok(lhs.max_discrepancy(&(&f1 * &f2)))
    }
}

fn check(d: &HeckeLocalData, adjoint: bool) -> Result<MonomialCheck, MonomialError> {
    d.validate()?;
    if let Some((a, b)) = d.values(ChiValue::to_exact) {
        let error = check_generic(d, a, b, adjoint)?;
        return Ok(MonomialCheck { p: d.p, error, exact: true });
    }
    let (a, b) = d.values(|v| Some(v.to_complex())).expect("total");
    let error = check_generic(d, a, b, adjoint)?;
    Ok(MonomialCheck { p: d.p, error, exact: false })
}

/// `L(s, π, r₃) = L(s, χ³)·L(s, χ²χ′)` at `p`. Runs exactly when all values
/// are roots of unity.
pub fn check_monomial_r3(d: &HeckeLocalData) -> Result<MonomialCheck, MonomialError> {
    check(d, false)
}

/// `L(s, π, r₃⁰) = L(s, χ²χ′⁻¹)·L(s, χ)` at `p`.
pub fn check_monomial_r30(d: &HeckeLocalData) -> Result<MonomialCheck, MonomialError> {
    check(d, true)
}

/// Whether the completed symmetric-cube L-function of `π(χ)` has poles.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum PoleVerdict {
    /// Simple poles at the listed points.
    HasPole { at: Vec<f64>, simple: bool },
    Entire,
}

/// Poles occur exactly when `χ³ = 1`; `χ = 1` is excluded because `π(χ)`
/// is then not cuspidal.
pub fn pole_criterion(order_of_chi: u32, chi_is_trivial: bool) -> Result<PoleVerdict, MonomialError> {
    if order_of_chi == 0 {
        return Err(MonomialError::BadOrder);
    }
    if chi_is_trivial || order_of_chi == 1 {
        return Err(MonomialError::NonCuspidal);
    }
    if 3 % order_of_chi == 0 {
        Ok(PoleVerdict::HasPole {
            at: vec![0.0, 1.0],
            simple: true,
        })
    } else {
        Ok(PoleVerdict::Entire)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localfactor::{local_factor, RepTag};
    use crate::satake::SatakeClass;
    use num_traits::{One, Zero};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn root(k: i64, n: u32) -> ChiValue {
        ChiValue::Root { k, n }
    }

    #[test]
    fn induced_matrices() {
        let d = HeckeLocalData::split(7, c(1.0, 0.0), c(1.0, 0.0));
        let m = induced_local(&d).unwrap();
        assert_eq!(m.frobenius, [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);

        let d = HeckeLocalData::inert(11, c(1.0, 0.0));
        let m = induced_local(&d).unwrap();
        assert_eq!(m.frobenius, [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        // eigenvalues ±1: det(I - MT) = 1 - T²
        assert_eq!(m.standard_factor().coeffs(), &[c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]);

        let cval = c(0.3, -0.8);
        let d = HeckeLocalData::inert(3, cval);
        let m = induced_local(&d).unwrap();
        assert_eq!(m.standard_factor().coeffs(), &[c(1.0, 0.0), c(0.0, 0.0), -cval]);
        assert_eq!(m.determinant(), -cval);
    }

    #[test]
    fn split_without_conjugate_rejected() {
        let d = HeckeLocalData {
            p: 5,
            splitting: Splitting::Split,
            chi_p: root(1, 3),
            chi_pbar: None,
        };
        assert_eq!(induced_local(&d), Err(MonomialError::MissingConjugateValue(5)));
    }

    #[test]
    fn symcube_of_identity_and_diagonal() {
        let one = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
        let p = symcube_char_poly(&one, 2);
        assert_eq!(p.coeffs(), &[1.0, -4.0, 6.0, -4.0, 1.0].map(|x| c(x, 0.0)));

        let (a, b) = (c(0.7, 0.2), c(-1.1, 0.4));
        let diag = [[a, c(0.0, 0.0)], [c(0.0, 0.0), b]];
        let s = SatakeClass::new(a, b, 2);
        let expect = local_factor(RepTag::Sym3, &s).unwrap();
        assert!(symcube_char_poly(&diag, 2).max_discrepancy(&expect) < 1e-14);
        let expect = local_factor(RepTag::AdjointCube, &s).unwrap();
        assert!(adjointcube_char_poly(&diag, 2).unwrap().max_discrepancy(&expect) < 1e-14);
        let id = adjointcube_char_poly(&one, 2).unwrap();
        assert_eq!(id.coeffs(), &[1.0, -4.0, 6.0, -4.0, 1.0].map(|x| c(x, 0.0)));
    }

    #[test]
    fn inert_symcube_is_square_in_t_squared() {
        let cv = Cyclo::root_of_unity(2, 7);
        let m = [[Cyclo::zero(), cv.clone()], [Cyclo::one(), Cyclo::zero()]];
        let p = symcube_char_poly(&m, 3);
        // (1 - c³T²)²
        let c3 = cv.pow(3);
        let expected = [
            Cyclo::one(),
            Cyclo::zero(),
            -(c3.clone() + c3.clone()),
            Cyclo::zero(),
            c3.clone() * c3,
        ];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(p.poly().coeff(i), *e, "T^{i}");
        }
        let q = adjointcube_char_poly(&m, 3).unwrap();
        let expected = [
            Cyclo::one(),
            Cyclo::zero(),
            -(cv.clone() + cv.clone()),
            Cyclo::zero(),
            cv.clone() * cv,
        ];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(q.poly().coeff(i), *e, "T^{i}");
        }
    }

    #[test]
    fn singular_frobenius_rejected() {
        let z = [[c(0.0, 0.0), c(0.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
        assert_eq!(adjointcube_char_poly(&z, 2), Err(MonomialError::Singular));
    }

    #[test]
    fn hecke_factor_examples() {
        let d = HeckeLocalData::split(7, root(1, 3), root(2, 3));
        let f = hecke_factor_exact(&d, (3, 0)).unwrap().unwrap();
        assert_eq!(f.poly().coeff(1), Cyclo::from_i64(-2));
        assert_eq!(f.poly().coeff(2), Cyclo::one());

        let d = HeckeLocalData::inert(5, root(0, 1));
        let f = hecke_factor_exact(&d, (2, 1)).unwrap().unwrap();
        assert_eq!(f.coeffs(), &[Cyclo::one(), Cyclo::zero(), Cyclo::from_i64(-1)]);

        let d = HeckeLocalData::split(13, c(0.0, 1.0), c(0.0, -1.0));
        let f = hecke_factor(&d, (1, 0)).unwrap();
        assert!(f.max_discrepancy(&ReciprocalPoly::from_coeffs(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 13).unwrap()) < 1e-15);
    }

    #[test]
    fn inert_chi_squared_chi_prime_equals_chi_cubed() {
        let d = HeckeLocalData::inert(19, root(3, 10));
        let a = hecke_factor_exact(&d, (2, 1)).unwrap().unwrap();
        let b = hecke_factor_exact(&d, (3, 0)).unwrap().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn factorizations_exact() {
        let cases = [
            HeckeLocalData::split(7, root(1, 3), root(-1, 3)),
            HeckeLocalData::split(11, root(0, 1), root(0, 1)),
            HeckeLocalData::split(31, root(2, 5), root(4, 5)),
            HeckeLocalData::inert(5, root(1, 6)),
            HeckeLocalData::inert(17, root(3, 4)),
        ];
        for d in &cases {
            let r3 = check_monomial_r3(d).unwrap();
            assert!(r3.exact);
            assert_eq!(r3.error, 0.0, "{d:?}");
            let r30 = check_monomial_r30(d).unwrap();
            assert_eq!(r30.error, 0.0, "{d:?}");
        }
    }

    #[test]
    fn factorizations_floating() {
        let d = HeckeLocalData::inert(5, Complex64::from_polar(1.0, 0.37));
        let r = check_monomial_r3(&d).unwrap();
        assert!(!r.exact);
        assert!(r.error < 1e-14);
        let d = HeckeLocalData::split(5, Complex64::from_polar(1.0, 1.1), Complex64::from_polar(1.0, -2.3));
        assert!(check_monomial_r30(&d).unwrap().error < 1e-14);
    }

    #[test]
    fn poles() {
        assert_eq!(
            pole_criterion(3, false).unwrap(),
            PoleVerdict::HasPole { at: vec![0.0, 1.0], simple: true }
        );
        assert_eq!(pole_criterion(4, false).unwrap(), PoleVerdict::Entire);
        assert_eq!(pole_criterion(2, false).unwrap(), PoleVerdict::Entire);
        assert_eq!(pole_criterion(1, false), Err(MonomialError::NonCuspidal));
        assert_eq!(pole_criterion(3, true), Err(MonomialError::NonCuspidal));
        assert_eq!(pole_criterion(0, false), Err(MonomialError::BadOrder));
    }
}
