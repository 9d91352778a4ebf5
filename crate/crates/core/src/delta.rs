//! Ramanujan's `τ(n)` from the product `q∏(1−qⁿ)²⁴`.
//!
//! `∏(1−qⁿ)³ = Σ_{k≥0} (−1)^k (2k+1) q^{k(k+1)/2}`, so the 24th power is the
//! eighth power of a sparse series. Coefficients up to `n = 10⁵` fit in
//! `i128`.

use num_bigint::BigInt;
use rayon::prelude::*;

/// Sparse `∏(1−qⁿ)³` truncated at degree `n`.
fn eta_cubed(n: usize) -> Vec<(usize, i128)> {
    let mut out = Vec::new();
    let mut k = 0usize;
    loop {
        let e = k * (k + 1) / 2;
        if e > n {
            break;
        }
        let c = (2 * k + 1) as i128;
        out.push((e, if k.is_multiple_of(2) { c } else { -c }));
        k += 1;
    }
    out
}

/// `τ(0..=n_max)` with `τ(0) = 0`.
pub fn tau_table(n_max: usize) -> Vec<i128> {
    if n_max == 0 {
        return vec![0];
    }
    // coefficients of ∏(1−qⁿ)²⁴ up to q^{n_max−1}
    let deg = n_max - 1;
    let sparse = eta_cubed(deg);
    let mut dense = vec![0i128; deg + 1];
    for &(e, c) in &sparse {
        dense[e] = c;
    }
    for _ in 1..8 {
        dense = (0..=deg)
            .into_par_iter()
            .map(|n| {
                sparse
                    .iter()
                    .take_while(|(e, _)| *e <= n)
                    .map(|&(e, c)| c * dense[n - e])
                    .sum()
            })
            .collect();
    }
    let mut tau = Vec::with_capacity(n_max + 1);
    tau.push(0);
    tau.extend(dense);
    tau
}

pub fn tau(n: usize) -> i128 {
    tau_table(n)[n]
}

/// `τ(1..=n_max)` as arbitrary-precision integers, index `n − 1`.
pub fn tau_bigints(n_max: usize) -> Vec<BigInt> {
    tau_table(n_max).into_iter().skip(1).map(BigInt::from).collect()
}
