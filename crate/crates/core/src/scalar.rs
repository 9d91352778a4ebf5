//! Coefficient fields for local-factor algebra.
//!
//! Every polynomial identity in this crate is checked generically over a
//! [`Scalar`]. Two implementations are provided: `Complex64` for floating
//! inputs and [`Cyclo`](crate::cyclo::Cyclo) for exact arithmetic when all
//! parameters are roots of unity.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

pub trait Scalar:
    Clone
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn try_inv(&self) -> Option<Self>;

    fn to_complex(&self) -> Complex64;

    /// Absolute discrepancy between two values. Exact types return `0.0`
    /// precisely when the values are equal and a strictly positive number
    /// otherwise.
    fn discrepancy(&self, other: &Self) -> f64;

    fn from_i64(v: i64) -> Self;

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            exp >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents need an invertible base.
    fn powi(&self, exp: i64) -> Option<Self> {
        if exp >= 0 {
            Some(self.pow(exp as u32))
        } else {
            self.try_inv().map(|inv| inv.pow(exp.unsigned_abs() as u32))
        }
    }
}

impl Scalar for Complex64 {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn discrepancy(&self, other: &Self) -> f64 {
        (self - other).norm()
    }

    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
}
