//! Dense univariate polynomials and reciprocal Euler-factor polynomials.

use std::ops::Mul;

use num_complex::Complex64;
use num_traits::Zero;

use crate::scalar::Scalar;

/// Dense polynomial, coefficients ascending. Trailing zeros are kept only
/// when produced by arithmetic on floating coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    pub coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        Self { coeffs }
    }

    pub fn constant(c: S) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    /// `a + b·T`.
    pub fn linear(a: S, b: S) -> Self {
        Self { coeffs: vec![a, b] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self {
            coeffs: (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self {
            coeffs: (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Largest coefficientwise discrepancy, zero-padding the shorter side.
    pub fn max_discrepancy(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|i| self.coeff(i).discrepancy(&other.coeff(i)))
            .fold(0.0, f64::max)
    }
}

impl Poly<Complex64> {
    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * t + c)
    }
}

/// Determinant of a square matrix with polynomial entries (Laplace
/// expansion along the first row). Intended for the small (≤ 4×4) matrices
/// arising from symmetric powers.
pub fn det_poly<S: Scalar>(m: &[Vec<Poly<S>>]) -> Poly<S> {
    let n = m.len();
    match n {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Poly::zero();
            for col in 0..n {
                let minor: Vec<Vec<Poly<S>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].mul(&det_poly(&minor));
                acc = if col % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

/// A local L-factor `1/P(T)` stored through `P`, with `P(0) = 1`.
///
/// `q` is the residue-field cardinality the variable refers to: `T = q^{-s}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReciprocalPoly<S = Complex64> {
    poly: Poly<S>,
    q: u64,
}

impl<S: Scalar> ReciprocalPoly<S> {
    /// `∏ (1 − λᵢ T)` over the given reciprocal roots, multiplied in order.
    pub fn from_reciprocal_roots<'a, I>(roots: I, q: u64) -> Self
    where
        I: IntoIterator<Item = &'a S>,
        S: 'a,
    {
        let poly = roots.into_iter().fold(Poly::one(), |acc, lambda| {
            acc.mul(&Poly::linear(S::one(), -lambda.clone()))
        });
        Self { poly, q }
    }

    /// Wraps an explicit coefficient list; `None` unless the constant term
    /// is exactly one.
    pub fn from_coeffs(coeffs: Vec<S>, q: u64) -> Option<Self> {
        let first = coeffs.first()?;
        if first.discrepancy(&S::one()) != 0.0 {
            return None;
        }
        Some(Self {
            poly: Poly::new(coeffs),
            q,
        })
    }

    pub(crate) fn from_poly_unchecked(poly: Poly<S>, q: u64) -> Self {
        Self { poly, q }
    }

    pub fn one(q: u64) -> Self {
        Self {
            poly: Poly::one(),
            q,
        }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.poly.coeffs
    }

    pub fn poly(&self) -> &Poly<S> {
        &self.poly
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn max_discrepancy(&self, other: &Self) -> f64 {
        self.poly.max_discrepancy(&other.poly)
    }

    /// Coefficients `c₁…c_d` of `P(T) = 1 + Σ c_j T^j`.
    pub fn tail(&self) -> &[S] {
        &self.poly.coeffs[1..]
    }
}

impl<S: Scalar> Mul for &ReciprocalPoly<S> {
    type Output = ReciprocalPoly<S>;
    fn mul(self, rhs: &ReciprocalPoly<S>) -> ReciprocalPoly<S> {
        debug_assert_eq!(self.q, rhs.q, "multiplying factors at different primes");
        ReciprocalPoly {
            poly: self.poly.mul(&rhs.poly),
            q: self.q,
        }
    }
}

impl ReciprocalPoly<Complex64> {
    /// `P(q^{-s})`.
    pub fn eval_at_s(&self, s: Complex64) -> Complex64 {
        let t = (-s * (self.q as f64).ln()).exp();
        self.poly.eval(t)
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.poly.eval(t)
    }
}

impl<S: Scalar> From<ReciprocalPoly<S>> for Poly<S> {
    fn from(r: ReciprocalPoly<S>) -> Poly<S> {
        r.poly
    }
}

impl<S: Scalar> ReciprocalPoly<S> {
    pub fn is_normalized(&self) -> bool {
        self.poly
            .coeffs
            .first()
            .is_some_and(|c| c.discrepancy(&S::one()) == 0.0)
    }
}
