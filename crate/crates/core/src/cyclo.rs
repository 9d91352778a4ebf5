//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored as a polynomial in `ζ_n` reduced modulo the
//! cyclotomic polynomial `Φ_n`, which makes the representation canonical:
//! two elements of the same level are equal iff their coefficient vectors
//! are. Binary operations lift both operands to the lcm of their levels.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Scalar;

type RatPoly = Vec<BigRational>;

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_n`, ascending, monic.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = divide_monic_exact(&num, &div);
        }
    }
    let phi = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, Arc::clone(&phi));
    phi
}

fn divide_monic_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn reduce_mod(mut p: RatPoly, modulus: &[BigInt]) -> RatPoly {
    let d = modulus.len() - 1;
    trim(&mut p);
    while p.len() > d {
        let top = p.len() - 1;
        let c = p[top].clone();
        let shift = top - d;
        for (j, mj) in modulus.iter().enumerate() {
            p[shift + j] -= &c * BigRational::from_integer(mj.clone());
        }
        trim(&mut p);
    }
    p
}

fn poly_sub_mul(a: &RatPoly, q: &RatPoly, b: &RatPoly) -> RatPoly {
    // a - q*b
    let mut out = a.clone();
    let len = (q.len() + b.len()).saturating_sub(1).max(a.len());
    out.resize(len, BigRational::zero());
    for (i, qi) in q.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut rem = a.clone();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let top = rem.len() - 1;
        let c = &rem[top] / &lead;
        let shift = top - db;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

/// An element of `Q(ζ_n)` in canonical reduced form.
#[derive(Clone)]
pub struct Cyclo {
    level: u32,
    coeffs: RatPoly,
}

impl Cyclo {
    fn from_raw(level: u32, coeffs: RatPoly) -> Self {
        let phi = cyclotomic_polynomial(level);
        Self {
            level,
            coeffs: reduce_mod(coeffs, &phi),
        }
    }

    /// `e^{2πi k/n}`.
    pub fn root_of_unity(k: i64, n: u32) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let e = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Self::from_raw(n, coeffs)
    }

    pub fn rational(v: BigRational) -> Self {
        Self::from_raw(1, vec![v])
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Coefficients in the power basis `1, ζ, ζ², …` of the current level.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn lift(&self, level: u32) -> RatPoly {
        if level == self.level {
            return self.coeffs.clone();
        }
        debug_assert_eq!(level % self.level, 0);
        let step = (level / self.level) as usize;
        let mut out = vec![BigRational::zero(); step * self.coeffs.len().max(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * step] = c.clone();
        }
        out
    }

    fn common(&self, other: &Self) -> (u32, RatPoly, RatPoly) {
        let level = self.level.lcm(&other.level);
        (level, self.lift(level), other.lift(level))
    }

    pub fn is_rational_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn inverse(&self) -> Option<Self> {
        if self.coeffs.is_empty() {
            return None;
        }
        // extended Euclid: find u with u*self ≡ 1 mod Φ
        let phi: RatPoly = cyclotomic_polynomial(self.level)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (mut r0, mut r1) = (phi, self.coeffs.clone());
        let (mut t0, mut t1): (RatPoly, RatPoly) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let t2 = poly_sub_mul(&t0, &q, &t1);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // Φ irreducible, so the gcd r0 is a nonzero constant
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        let inv: RatPoly = t0.into_iter().map(|t| t / &c).collect();
        Some(Self::from_raw(self.level, inv))
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let (level, a, b) = self.common(other);
        let phi = cyclotomic_polynomial(level);
        reduce_mod(a, &phi) == reduce_mod(b, &phi)
    }
}

impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})ζ{}", self.level),
                _ => format!("({c})ζ{}^{k}", self.level),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        let (level, mut a, b) = self.common(&rhs);
        if a.len() < b.len() {
            a.resize(b.len(), BigRational::zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        Cyclo::from_raw(level, a)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self + (-rhs)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            level: self.level,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        let (level, a, b) = self.common(&rhs);
        if a.is_empty() || b.is_empty() {
            return Cyclo::zero();
        }
        // convolve modulo x^level - 1 first, Φ_level divides it
        let n = level as usize;
        let mut out = vec![BigRational::zero(); n.min(a.len() + b.len() - 1)];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                out[(i + j) % n] += ai * bj;
            }
        }
        Cyclo::from_raw(level, out)
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo {
            level: 1,
            coeffs: Vec::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::rational(BigRational::one())
    }
}

impl Scalar for Cyclo {
    fn try_inv(&self) -> Option<Self> {
        self.inverse()
    }

    fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let angle = std::f64::consts::TAU * k as f64 / self.level as f64;
            acc += Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle);
        }
        acc
    }

    fn discrepancy(&self, other: &Self) -> f64 {
        if self == other {
            0.0
        } else {
            (self.to_complex() - other.to_complex())
                .norm()
                .max(f64::MIN_POSITIVE)
        }
    }

    fn from_i64(v: i64) -> Self {
        Cyclo::rational(BigRational::from_integer(v.into()))
    }
}

impl Cyclo {
    /// True when this is `±ζ^k` for some `k`, i.e. a root of unity up to sign.
    pub fn is_unit_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
            && self.coeffs.iter().any(|c| c.abs().is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity_multiply_exactly() {
        let z3 = Cyclo::root_of_unity(1, 3);
        assert_eq!(z3.pow(3), Cyclo::one());
        assert_ne!(z3.pow(2), Cyclo::one());
        // ζ3 + ζ3² = -1
        assert_eq!(z3.clone() + z3.pow(2), Cyclo::from_i64(-1));
        // ζ6 = -ζ3²
        assert_eq!(Cyclo::root_of_unity(1, 6), -Cyclo::root_of_unity(2, 3));
        // mixed levels: ζ4 * ζ3 = ζ12^7
        assert_eq!(
            Cyclo::root_of_unity(1, 4) * Cyclo::root_of_unity(1, 3),
            Cyclo::root_of_unity(7, 12)
        );
    }

    #[test]
    fn inverse_of_non_monomial() {
        let a = Cyclo::from_i64(2) + Cyclo::root_of_unity(1, 5);
        let inv = a.try_inv().unwrap();
        assert_eq!(a * inv, Cyclo::one());
        assert!(Cyclo::zero().try_inv().is_none());
    }

    #[test]
    fn complex_embedding() {
        let z = Cyclo::root_of_unity(1, 8);
        let c = z.to_complex();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((c - Complex64::new(s, s)).norm() < 1e-15);
    }
}
