//! Acceptance criteria AC1–AC10. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symcube::analytic::{
    default_probe_points, dirichlet_coeffs, dirichlet_sum, epsilon_probe, partial_l, pole_scan, InjectedPole,
    PoleScanConfig, ScanVerdict,
};
use symcube::g2root::{
    beta, inverted_roots, pairing, reflect, rho_p, weyl_group, Affine, PositiveRoot, WeightVector, WeylElement,
};
use symcube::ingest::euler_data;
use symcube::intertwining::{
    exact_pole_roots, forbidden_triangle_contains, gk_coefficient, l_ratio, linspace, region_grid,
    region_membership, winarsky_poles_exact, MuCase, MuOrder, PrincipalParams, Region,
};
use symcube::localfactor::IdentitySuite;
use symcube::monomial::{check_monomial_r3, check_monomial_r30, pole_criterion, ChiValue, HeckeLocalData, PoleVerdict};
use symcube::{AfeConfig, Cyclo, ParsedForm, RepTag, SatakeClass};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn ac1() -> Outcome {
    let l = WeightVector::lambda();
    let forms = [
        Affine::from_ints(0, 2, 0),
        Affine::from_ints(0, 3, 1),
        Affine::from_ints(0, 1, 1),
        Affine::from_ints(0, 0, 2),
        Affine::from_ints(0, -1, 1),
        Affine::from_ints(0, -3, 1),
    ];
    for (i, f) in forms.iter().enumerate() {
        let p = pairing(&l, &beta(i + 1)).map_err(|e| e.to_string())?;
        ensure(p == *f, format!("beta{} pairing {p}", i + 1))?;
    }
    let quoted = [(6, "s-3r"), (2, "s+3r"), (3, "s+r"), (1, "2r")];
    for (i, text) in quoted {
        let p = pairing(&l, &beta(i)).map_err(|e| e.to_string())?.to_string();
        ensure(p == text, format!("beta{i}: {p} != {text}"))?;
    }
    Ok("six exact affine forms, four quoted values identical".into())
}

fn ac2() -> Outcome {
    let l = WeightVector::lambda();
    let r6 = reflect(&beta(6), &l).map_err(|e| e.to_string())?;
    let expect = WeightVector::new(Affine::from_ints(0, -1, 1), Affine::from_ints(0, 3, -1));
    ensure(r6 == expect, format!("rho6(Lambda) = {r6}"))?;
    let half = q(5, 2) * beta(4);
    ensure(rho_p().to_root_vector() == Some(half), "rho_P")?;
    Ok(format!("rho6(Lambda) = {r6}; rho_P = (5/2)beta4"))
}

fn ac3() -> Outcome {
    let w = weyl_group();
    ensure(w.len() == 12, format!("|W| = {}", w.len()))?;
    let distinct: std::collections::HashSet<_> = w.iter().map(|x| x.matrix()).collect();
    ensure(distinct.len() == 12, "duplicate elements")?;
    let inv = inverted_roots(&WeylElement::long_intertwining());
    let expect: BTreeSet<_> = PositiveRoot::UNIPOTENT.into_iter().collect();
    ensure(inv == expect, format!("inverted roots {inv:?}"))?;
    Ok("|W| = 12; inverted roots = {beta2..beta6}".into())
}

fn ac4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let primes = [2u64, 3, 5, 7, 11, 13];
    let mut worst = [0.0f64; 3];
    for _ in 0..100 {
        let mut z = || Complex64::from_polar(4f64.powf(rng.random_range(-1.0..=1.0)), rng.random_range(0.0..std::f64::consts::TAU));
        let (a, b) = (z(), z());
        let c = SatakeClass::new(a, b, primes[rng.random_range(0..primes.len())]);
        for (k, suite) in IdentitySuite::ALL.iter().enumerate() {
            worst[k] = worst[k].max(suite.check(&c).map_err(|e| e.to_string())?);
        }
    }
    for (k, suite) in IdentitySuite::ALL.iter().enumerate() {
        ensure(worst[k] < 1e-12, format!("{} error {:e}", suite.name(), worst[k]))?;
    }
    for _ in 0..100 {
        let n = rng.random_range(1..=12u32);
        let a = Cyclo::root_of_unity(rng.random_range(0..n as i64), n);
        let b = Cyclo::root_of_unity(rng.random_range(0..n as i64), n);
        for suite in IdentitySuite::ALL {
            let e = suite.check_generic(&a, &b, 5).map_err(|e| e.to_string())?;
            ensure(e == 0.0, format!("exact {} error {e}", suite.name()))?;
        }
    }
    Ok(format!(
        "max errors triple {:.1e}, twist {:.1e}, gj {:.1e}; exact runs 0",
        worst[0], worst[1], worst[2]
    ))
}

fn ac5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let primes: Vec<u64> = (2u64..2000).filter(|&p| symcube::satake::is_prime(p)).collect();
    let root = |rng: &mut ChaCha8Rng| {
        let n = rng.random_range(1..=12u32);
        ChiValue::Root { k: rng.random_range(0..n as i64), n }
    };
    let mut count = [0usize; 2];
    for (i, &p) in primes.iter().take(100).enumerate() {
        let d = if i % 2 == 0 {
            let (a, b) = (root(&mut rng), root(&mut rng));
            HeckeLocalData::split(p, a, b)
        } else {
            HeckeLocalData::inert(p, root(&mut rng))
        };
        for check in [check_monomial_r3(&d), check_monomial_r30(&d)] {
            let c = check.map_err(|e| e.to_string())?;
            ensure(c.exact && c.error == 0.0, format!("p={p} error {}", c.error))?;
        }
        count[i % 2] += 1;
    }
    for n in 2..=24 {
        let has = matches!(pole_criterion(n, false).map_err(|e| e.to_string())?, PoleVerdict::HasPole { .. });
        ensure(has == (n == 3), format!("order {n}"))?;
    }
    Ok(format!("{} split + {} inert primes exact; pole only for order 3", count[0], count[1]))
}

fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < 50 {
        let p = PrincipalParams::new(
            Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)),
            [2u64, 3, 5, 7, 11][rng.random_range(0..5)],
            rng.random_range(0.0..0.5),
            Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-10.0..10.0)),
        );
        let (Ok(g), Ok(l)) = (gk_coefficient(&p), l_ratio(&p)) else { continue };
        worst = worst.max((g - l).norm() / g.norm());
        done += 1;
    }
    ensure(worst < 1e-10, format!("relative error {worst:e}"))?;
    for (k, n, order) in [(0i64, 1u32, MuOrder::One), (1, 2, MuOrder::Two)] {
        for r in [q(1, 10), q(1, 7), q(1, 5), q(2, 5), q(7, 15)] {
            let expect = winarsky_poles_exact(order, r);
            let mut candidates: BTreeSet<Rational64> = (-160..=160).map(|j| q(j, 40) * r).collect();
            candidates.extend((-40..=40).map(|j| q(j, 20)));
            let found: BTreeSet<Rational64> = candidates
                .into_iter()
                .filter(|&s| !exact_pole_roots((k, n), r, s).is_empty())
                .collect();
            ensure(found == expect, format!("mu order {n}, r={r}: {found:?} vs {expect:?}"))?;
        }
    }
    Ok(format!("gk vs l_ratio max rel {worst:.1e} over 50; pole sets exact"))
}

fn ac7() -> Outcome {
    for (r, s) in [(q(1, 6), q(1, 2)), (q(1, 4), q(3, 4)), (q(0, 1), q(1, 1))] {
        let reg = region_membership(r, s, MuCase::Trivial);
        ensure(reg == Region::Boundary, format!("vertex ({r}, {s}) is {reg}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let verts = [(0.0, 1.0), (1.0 / 6.0, 0.5), (0.0, 0.5)];
    for _ in 0..100 {
        let (mut u, mut v): (f64, f64) = (rng.random_range(0.01..0.98), rng.random_range(0.01..0.98));
        if u + v >= 0.99 {
            (u, v) = (0.99 - u, 0.99 - v);
        }
        let w = 1.0 - u - v;
        let r = u * verts[0].0 + v * verts[1].0 + w * verts[2].0;
        let s = u * verts[0].1 + v * verts[1].1 + w * verts[2].1;
        ensure(forbidden_triangle_contains(r, s), format!("({r}, {s}) not interior"))?;
        let reg = region_membership(r, s, MuCase::Trivial);
        ensure(reg == Region::Outside, format!("({r}, {s}) classified {reg}"))?;
    }
    let grid = region_grid(&linspace(0.0, 0.5, 500), &linspace(0.0, 1.0, 500), MuCase::Trivial);
    let overlap = grid.iter().filter(|p| p.forbidden && p.region == Region::UpperTriangle).count();
    let upper = grid.iter().filter(|p| p.region == Region::UpperTriangle).count();
    let forb = grid.iter().filter(|p| p.forbidden).count();
    ensure(overlap == 0 && upper > 0 && forb > 0, format!("overlap {overlap}"))?;
    Ok(format!("vertices boundary; 100 forbidden samples non-unitary; 500x500 grid: {upper} upper, {forb} forbidden, 0 shared"))
}

fn ac8() -> Outcome {
    let n = 100_000;
    let data = euler_data(&ParsedForm::delta(n), RepTag::Sym3).map_err(|e| e.to_string())?;
    let table = dirichlet_coeffs(&data, n).map_err(|e| e.to_string())?;
    let s = Complex64::new(3.0, 0.0);
    let prod = partial_l(s, n as u64, &data).map_err(|e| e.to_string())?;
    let sum = dirichlet_sum(s, &table, n).map_err(|e| e.to_string())?;
    let rel = (prod.value - sum).norm() / sum.norm();
    let gap = prod.last_doubling_gap().unwrap_or(f64::INFINITY) / prod.value.norm();
    ensure(rel < 1e-6, format!("product vs sum {rel:e}"))?;
    ensure(gap < 1e-6, format!("doubling gap {gap:e}"))?;
    Ok(format!("L(3) = {:.12}; product vs sum {rel:.1e}; doubling gap {gap:.1e}", sum.re))
}

fn sym3_table(cfg: &AfeConfig) -> Result<symcube::CoefficientTable, String> {
    let data = euler_data(&ParsedForm::delta(cfg.cutoff), RepTag::Sym3).map_err(|e| e.to_string())?;
    dirichlet_coeffs(&data, cfg.cutoff).map_err(|e| e.to_string())
}

fn ac9() -> Outcome {
    let cfg = AfeConfig::delta_sym3();
    let table = sym3_table(&cfg)?;
    let pts = default_probe_points();
    let rep = epsilon_probe(&pts, &cfg, &table).map_err(|e| e.to_string())?;
    ensure(rep.skipped.is_empty(), format!("skipped {:?}", rep.skipped))?;
    ensure(rep.passes(1e-3), format!("deviation {:e}, modulus {:e}", rep.max_pairwise_deviation, rep.modulus_deviation))?;
    let mut bad = cfg.clone();
    bad.gamma_shifts = vec![6.5, 16.5];
    let neg = epsilon_probe(&pts, &bad, &table).map_err(|e| e.to_string())?;
    let miss = neg.max_pairwise_deviation.max(neg.modulus_deviation);
    ensure(miss > 1e-1, format!("negative control only off by {miss:e}"))?;
    Ok(format!(
        "epsilon = {:.6}; pairwise {:.1e}, modulus {:.1e}; perturbed control off by {miss:.2}",
        rep.epsilon, rep.max_pairwise_deviation, rep.modulus_deviation
    ))
}

fn ac10() -> Outcome {
    let cfg = AfeConfig::delta_sym3();
    let table = sym3_table(&cfg)?;
    let eps = epsilon_probe(&default_probe_points(), &cfg, &table).map_err(|e| e.to_string())?.epsilon;
    let clean = pole_scan(0.55, 0.95, 9, eps, &cfg, &table, &PoleScanConfig::default()).map_err(|e| e.to_string())?;
    ensure(clean.verdict == ScanVerdict::ConsistentWithHolomorphy, format!("clean scan: {:?}", clean.verdict))?;
    let injected = PoleScanConfig {
        injected: Some(InjectedPole { sigma0: 0.7625, p: 2 }),
        ..PoleScanConfig::default()
    };
    let spiked = pole_scan(0.55, 0.95, 9, eps, &cfg, &table, &injected).map_err(|e| e.to_string())?;
    ensure(spiked.verdict == ScanVerdict::GrowthDetected, "injected pole not flagged")?;
    Ok(format!(
        "max |Lambda| {:.2e}, consistent-with-holomorphy; injected pole at 0.7625 flagged, spike at sigma = {}",
        clean.max_abs,
        spiked.spike_at.map_or("none".into(), |x| x.to_string())
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("AC1", ac1, 1),
        ("AC2", ac2, 1),
        ("AC3", ac3, 1),
        ("AC4", ac4, 5),
        ("AC5", ac5, 5),
        ("AC6", ac6, 5),
        ("AC7", ac7, 10),
        ("AC8", ac8, 60),
        ("AC9", ac9, 120),
        ("AC10", ac10, 120),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let took = start.elapsed();
        let result = match result {
            Ok(msg) if took > Duration::from_secs(limit) => Err(format!("{msg}; over {limit}s budget")),
            other => other,
        };
        match result {
            Ok(msg) => println!("{name} PASS ({:.2}s) {msg}", took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("{name} FAIL ({:.2}s) {msg}", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
