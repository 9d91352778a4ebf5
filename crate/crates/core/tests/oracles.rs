//! Checks against values computed by independent routes.

use std::f64::consts::PI;

use num_complex::Complex64;
use symcube::analytic::{afe_value, dirichlet_coeffs, dirichlet_sum, epsilon_probe, default_probe_points, partial_l};
use symcube::delta::tau_table;
use symcube::ingest::{euler_data, satake_table};
use symcube::localfactor::{local_factor, triple_product};
use symcube::{AfeConfig, CoefficientTable, ParsedForm, RepTag, SatakeClass};

fn delta_normalized(n: usize) -> CoefficientTable {
    let t = tau_table(n);
    let v = (1..=n).map(|k| Complex64::new(t[k] as f64 / (k as f64).powf(5.5), 0.0)).collect();
    CoefficientTable::new(v, Some(RepTag::Standard), "delta").unwrap()
}

/// `2∫₁^∞ Δ(iy)(y^{s'} + y^{12−s'}) dy/y` by composite Simpson on `[1, 12]`.
fn theta_integral(s_arith: Complex64) -> Complex64 {
    let t = tau_table(30);
    let delta = |y: f64| -> f64 { (1..=30).map(|n| t[n] as f64 * (-2.0 * PI * n as f64 * y).exp()).sum() };
    let f = |y: f64| -> Complex64 {
        let ly = y.ln();
        delta(y) * ((s_arith * ly).exp() + ((12.0 - s_arith) * ly).exp()) / y
    };
    let (a, b, m) = (1.0, 12.0, 20_000);
    let h = (b - a) / m as f64;
    let mut acc = f(a) + f(b);
    for i in 1..m {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    2.0 * acc * h / 3.0
}

/// Root number predicted from gamma shifts `κ` of `Γ_C(s + κ)` at level 1:
/// `∏ i^{2κ+1}`.
fn hodge_root_number(shifts: &[f64]) -> Complex64 {
    shifts
        .iter()
        .map(|k| Complex64::new(0.0, 1.0).powf(2.0 * k + 1.0))
        .product()
}

#[test]
fn afe_matches_theta_integral_for_delta() {
    let table = delta_normalized(16_000);
    let eps = hodge_root_number(&[5.5]);
    assert!((eps - 1.0).norm() < 1e-12);
    let strip = AfeConfig::new(vec![5.5], 1, true, 4000);
    // off the critical line the dual side needs a longer sum
    let far = AfeConfig::new(vec![5.5], 1, true, 16_000);
    let cases = [
        (Complex64::new(0.5, 0.0), &strip),
        (Complex64::new(0.5, 3.0), &strip),
        (Complex64::new(0.8, -1.5), &strip),
        (Complex64::new(1.5, 0.5), &far),
    ];
    for (s, cfg) in cases {
        let afe = afe_value(s, cfg, &table).unwrap().value(eps);
        let oracle = theta_integral(s + 5.5);
        let rel = (afe - oracle).norm() / oracle.norm();
        assert!(rel < 1e-8, "s={s} afe={afe} oracle={oracle} rel={rel:e}");
    }
    assert!(strip.tail_weight(Complex64::new(2.0, 0.0)) > 1e3 * strip.tail_weight(Complex64::new(0.5, 0.0)));
}

#[test]
fn sym3_root_number_matches_hodge_prediction() {
    let cfg = AfeConfig::delta_sym3();
    let expect = hodge_root_number(&cfg.gamma_shifts);
    assert!((expect + 1.0).norm() < 1e-12);
    let data = euler_data(&ParsedForm::delta(cfg.cutoff), RepTag::Sym3).unwrap();
    let table = dirichlet_coeffs(&data, cfg.cutoff).unwrap();
    let rep = epsilon_probe(&default_probe_points()[..1], &cfg, &table).unwrap();
    assert!((rep.epsilon - expect).norm() < 1e-4, "{}", rep.epsilon);
}

#[test]
fn sym3_delta_second_coefficient() {
    // λ(p) = t³ − 2t with t = τ(p)/p^{11/2}
    let data = euler_data(&ParsedForm::delta(10), RepTag::Sym3).unwrap();
    let table = dirichlet_coeffs(&data, 10).unwrap();
    for p in [2usize, 3, 5, 7] {
        let t = tau_table(p)[p] as f64 / (p as f64).powf(5.5);
        let expect = t * t * t - 2.0 * t;
        assert!((table.get(p).unwrap().re - expect).abs() < 1e-13, "p={p}");
    }
    assert!((table.get(2).unwrap().re - 0.911_505).abs() < 1e-6);
}

#[test]
fn triple_linear_coefficient_is_minus_trace_cubed() {
    for (a, b) in [(0.3, 1.7), (-2.0, 0.25), (1.1, -3.9)] {
        let c = SatakeClass::new(Complex64::new(a, 0.5), Complex64::new(b, -0.25), 5);
        let f = triple_product(&c);
        let tr = c.alpha + c.beta;
        let expect = -tr * tr * tr;
        assert!((f.coeffs()[1] - expect).norm() < 1e-12 * expect.norm().max(1.0));
        // top coefficient is (αβ)^{12}: the eight eigenvalues multiply to it
        let top = f.coeffs()[8];
        assert!((top - c.central().powi(12)).norm() < 1e-10 * top.norm());
    }
}

#[test]
fn deligne_bound_for_delta() {
    let n = 10_000;
    let form = ParsedForm::delta(n);
    let table = satake_table(&form).unwrap();
    assert_eq!(table.classes.len(), 1229);
    for (p, c) in &table.classes {
        assert!((c.alpha.norm() - 1.0).abs() < 1e-6, "p={p}");
        let sym3 = local_factor(RepTag::Sym3, c).unwrap();
        assert!(sym3.coeffs()[1].norm() <= 4.0 + 1e-9, "p={p}");
    }
}

#[test]
fn product_and_sum_at_two_and_a_half() {
    let n = 20_000;
    let data = euler_data(&ParsedForm::delta(n), RepTag::Sym3).unwrap();
    let table = dirichlet_coeffs(&data, n).unwrap();
    let s = Complex64::new(2.5, 0.0);
    let prod = partial_l(s, n as u64, &data).unwrap().value;
    let sum = dirichlet_sum(s, &table, n).unwrap();
    // both tails are O(N^{-1.5} log³ N)
    assert!((prod - sum).norm() / sum.norm() < 1e-5, "{prod} {sum}");
    assert!(prod.im.abs() < 1e-14);
}
