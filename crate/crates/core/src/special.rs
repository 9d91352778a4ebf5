//! Numerical helpers: complex log-gamma, compensated summation and a
//! smallest-prime-factor sieve.

use std::f64::consts::PI;
use std::ops::AddAssign;

use num_complex::Complex64;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal-ish `ln Γ(z)`: continuous along rays in the right half-plane,
/// reflected for `Re z < 1/2`. Only `exp` of the result is branch-free.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let s = (Complex64::new(PI, 0.0) * z).sin();
        return Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += *c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma(z).exp()
}

/// `ln Γ_C(s) = ln 2 − s·ln 2π + ln Γ(s)`.
pub fn ln_gamma_c(s: Complex64) -> Complex64 {
    std::f64::consts::LN_2 - s * (2.0 * PI).ln() + ln_gamma(s)
}

/// Neumaier's variant of Kahan summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Componentwise compensated sum of complex numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexSum {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexSum {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

impl AddAssign<Complex64> for ComplexSum {
    fn add_assign(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }
}

impl FromIterator<Complex64> for ComplexSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut acc = ComplexSum::default();
        for z in iter {
            acc += z;
        }
        acc
    }
}

/// `spf[n]` is the smallest prime factor of `n` for `n ≥ 2`; `spf[0]` and
/// `spf[1]` are zero.
pub fn spf_sieve(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

pub fn primes_up_to(n: usize) -> Vec<u64> {
    spf_sieve(n)
        .iter()
        .enumerate()
        .filter(|&(i, &p)| i >= 2 && p as usize == i)
        .map(|(i, _)| i as u64)
        .collect()
}

/// Splits `n ≥ 2` as `(p, k, m)` with `n = p^k·m`, `p` the smallest prime
/// factor and `p ∤ m`.
pub fn split_smallest(n: usize, spf: &[u32]) -> (usize, u32, usize) {
    let p = spf[n] as usize;
    let (mut m, mut k) = (n, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (p, k, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn gamma_real_values() {
        assert!(close(gamma(Complex64::new(5.0, 0.0)), Complex64::new(24.0, 0.0), 1e-14));
        assert!(close(gamma(Complex64::new(0.5, 0.0)), Complex64::new(PI.sqrt(), 0.0), 1e-14));
        assert!(close(gamma(Complex64::new(-0.5, 0.0)), Complex64::new(-2.0 * PI.sqrt(), 0.0), 1e-14));
        assert!(ln_gamma(Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let l = ln_gamma(Complex64::new(101.0, 0.0)).re;
        // ln 100!
        assert!((l - 363.739_375_555_563_47).abs() < 1e-10);
    }

    #[test]
    fn gamma_complex_values() {
        let g = gamma(Complex64::new(1.0, 1.0));
        assert!(close(g, Complex64::new(0.498_015_668_118_356, -0.154_949_828_301_811), 1e-13));
        // recurrence and reflection
        for z in [Complex64::new(2.3, -4.1), Complex64::new(0.1, 7.0), Complex64::new(17.0, 2.5)] {
            let lhs = gamma(z + 1.0);
            assert!(close(lhs, z * gamma(z), 1e-12));
            let refl = gamma(z) * gamma(1.0 - z) * (PI * z).sin();
            assert!(close(refl, Complex64::new(PI, 0.0), 1e-11));
        }
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = Neumaier::default();
        for x in [1.0, 1e100, 1.0, -1e100] {
            s.add(x);
        }
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn sieve() {
        let spf = spf_sieve(30);
        assert_eq!(spf[2], 2);
        assert_eq!(spf[15], 3);
        assert_eq!(spf[29], 29);
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(split_smallest(24, &spf), (2, 3, 3));
        assert_eq!(split_smallest(25, &spf), (5, 2, 1));
    }
}
