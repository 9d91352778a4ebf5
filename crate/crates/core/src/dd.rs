//! Double-double complex arithmetic.
//!
//! A [`Dd`] is an unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`, giving
//! roughly 106 bits of significand. [`DdComplex`] implements [`Scalar`] so
//! the identity suites can be evaluated well below `f64` rounding on inputs
//! that are exact doubles.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Self {
        let q1 = 1.0 / self.hi;
        let r = Dd::new(1.0) - self * Dd::new(q1);
        let q2 = r.hi / self.hi;
        let r = r - self * Dd::new(q2);
        let q3 = r.hi / self.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + Dd::new(q3)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub fn new(re: Dd, im: Dd) -> Self {
        DdComplex { re, im }
    }

    pub fn norm_sqr(&self) -> Dd {
        self.re * self.re + self.im * self.im
    }
}

impl From<Complex64> for DdComplex {
    fn from(z: Complex64) -> Self {
        DdComplex::new(Dd::new(z.re), Dd::new(z.im))
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    fn add(self, o: DdComplex) -> DdComplex {
        DdComplex::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    fn sub(self, o: DdComplex) -> DdComplex {
        DdComplex::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for DdComplex {
    type Output = DdComplex;
    fn neg(self) -> DdComplex {
        DdComplex::new(-self.re, -self.im)
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    fn mul(self, o: DdComplex) -> DdComplex {
        DdComplex::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Zero for DdComplex {
    fn zero() -> Self {
        DdComplex::default()
    }
    fn is_zero(&self) -> bool {
        self.re.to_f64() == 0.0 && self.im.to_f64() == 0.0
    }
}

impl One for DdComplex {
    fn one() -> Self {
        DdComplex::new(Dd::new(1.0), Dd::ZERO)
    }
}

impl Scalar for DdComplex {
    fn try_inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.hi == 0.0 || !n.hi.is_finite() {
            return None;
        }
        let r = n.recip();
        Some(DdComplex::new(self.re * r, -(self.im * r)))
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    fn discrepancy(&self, other: &Self) -> f64 {
        (*self - *other).to_complex().norm()
    }

    fn from_i64(v: i64) -> Self {
        let hi = v as f64;
        let lo = (v - hi as i64) as f64;
        DdComplex::new(Dd { hi, lo }, Dd::ZERO)
    }
}
