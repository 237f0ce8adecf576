//! Exit criteria. Every test prints one `criterion N: PASS|FAIL` line and
//! fails when its criterion does.

use std::f64::consts::PI;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_traits::Zero;
use tmoments::asympt::{
    delay_coeff, remainder_scan, run_suite, selberg_like_diff_p0, trans_coeff, ScanTarget, Suite,
};
use tmoments::exactmath::{int, q};
use tmoments::moments::{moment_jacobi, moment_laguerre_neg, SymmetryClass};
use tmoments::oracles::{
    integrate_1d, mc_moment, quadrature_moments, OracleEnsemble, SampleParams,
};
use tmoments::scalar::rational_to_f64;
use tmoments::series::{genfun_eval, GenFunId};
use tmoments::{Rational, SeriesQ};

// Criteria run one at a time so that each runtime bound sees the whole machine.
static SERIAL: Mutex<()> = Mutex::new(());

fn report(n: u32, what: &str, ok: bool, elapsed: Duration, limit: Option<Duration>, detail: &str) {
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let pass = ok && in_time;
    let time = match limit {
        Some(l) => format!("{:.1}s of {}s", elapsed.as_secs_f64(), l.as_secs()),
        None => format!("{:.1}s", elapsed.as_secs_f64()),
    };
    println!(
        "criterion {n}: {} {what} [{time}] {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {detail}");
}

fn rel_err(exact: &Rational, approx: f64) -> f64 {
    let e = rational_to_f64(exact);
    (e - approx).abs() / e.abs().max(1.0)
}

#[test]
fn criterion_1_exact_vs_quadrature() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    const TOL: f64 = 1e-10;
    const PHI_BUDGET: f64 = 1e-6;
    let start = Instant::now();
    let mut worst_jacobi = 0f64;
    let mut worst_laguerre = 0f64;
    let points = [(int(0), int(0)), (q(1, 2), int(2)), (int(3), q(1, 3))];
    for beta in [1, 2, 4] {
        for n in 1..=3 {
            let ks: Vec<i64> = (1..=3).filter(|&k| beta == 2 || 2 * n > k * beta).collect();
            if ks.is_empty() {
                continue;
            }
            for (a, b) in &points {
                let quad = quadrature_moments(OracleEnsemble::Jacobi, beta, &ks, n, a, b).unwrap();
                for (&k, &v) in ks.iter().zip(&quad) {
                    let m = moment_jacobi(beta, k, n, a, b).unwrap();
                    worst_jacobi = worst_jacobi.max(rel_err(&m.value, v));
                }
            }
        }
    }
    for n in [2, 3] {
        for b in [q(3, 2), int(4)] {
            let quad =
                quadrature_moments(OracleEnsemble::Laguerre, 2, &[-1, -2], n, &int(0), &b).unwrap();
            for (k, v) in [1, 2].into_iter().zip(quad) {
                let m = moment_laguerre_neg(2, k, n, &b).unwrap();
                worst_laguerre = worst_laguerre.max(rel_err(&m.value, v));
            }
        }
    }
    // β=1 at n=2 with the delay-time map at w=2: b = n(w-1) + 1 = 3. Only
    // k=1 satisfies k < nβ/2 + 1.
    let b = int(3);
    let quad = quadrature_moments(OracleEnsemble::Laguerre, 1, &[-1], 2, &int(0), &b).unwrap()[0];
    let m = moment_laguerre_neg(1, 1, 2, &b).unwrap();
    let phi = rel_err(&m.value, quad);

    let ok = worst_jacobi <= TOL && worst_laguerre <= TOL && phi <= PHI_BUDGET;
    report(
        1,
        "exact vs quadrature",
        ok,
        start.elapsed(),
        Some(Duration::from_secs(120)),
        &format!(
            "jacobi max err {worst_jacobi:.2e}, laguerre beta=2 max err {worst_laguerre:.2e} \
             (tol {TOL:e}); laguerre beta=1 n=2 err {phi:.2e} (budget {PHI_BUDGET:e})"
        ),
    );
}

#[test]
fn criterion_2_exact_vs_monte_carlo() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    const DRAWS: u64 = 100_000;
    const SIGMAS: f64 = 4.0;
    let start = Instant::now();
    let jacobi = [
        (1, 4, q(1, 2), int(2), 1),
        (1, 5, int(0), int(0), 3),
        (2, 3, int(1), q(1, 2), 2),
        (2, 6, int(0), int(0), 3),
        (4, 3, int(1), int(1), 1),
        (4, 5, q(1, 2), int(3), 2),
    ];
    // β=1 at n=16, b=n+1, where the omitted term is negligible.
    let laguerre = [
        (2, 3, int(2), 1),
        (2, 5, int(4), 2),
        (4, 2, int(1), 1),
        (4, 4, int(2), 2),
        (1, 16, int(17), 1),
        (1, 16, int(17), 2),
    ];
    let mut worst = 0f64;
    let mut configs = 0;
    for (i, (beta, n, a, b, k)) in jacobi.into_iter().enumerate() {
        let exact = rational_to_f64(&moment_jacobi(beta, k, n, &a, &b).unwrap().value);
        let p = SampleParams {
            kind: OracleEnsemble::Jacobi,
            beta,
            n,
            a,
            b,
        };
        let est = mc_moment(&p, k, DRAWS, 1000 + i as u64).unwrap();
        worst = worst.max((est.mean - exact).abs() / est.stderr);
        configs += 1;
    }
    for (i, (beta, n, b, k)) in laguerre.into_iter().enumerate() {
        let exact = rational_to_f64(&moment_laguerre_neg(beta, k, n, &b).unwrap().value);
        let p = SampleParams {
            kind: OracleEnsemble::Laguerre,
            beta,
            n,
            a: int(0),
            b,
        };
        let est = mc_moment(&p, -k, DRAWS, 2000 + i as u64).unwrap();
        worst = worst.max((est.mean - exact).abs() / est.stderr);
        configs += 1;
    }
    report(
        2,
        "exact vs Monte Carlo",
        worst < SIGMAS,
        start.elapsed(),
        Some(Duration::from_secs(300)),
        &format!("{configs} configurations x {DRAWS} draws, worst deviation {worst:.2} sigma (limit {SIGMAS})"),
    );
}

fn series(id: GenFunId, order: usize) -> SeriesQ {
    genfun_eval(&id, order).unwrap().series
}

#[test]
fn criterion_3_generating_function_duality() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    const K: i64 = 20;
    let order = K as usize + 1;
    let start = Instant::now();
    let mut cases = 0usize;
    let mut mismatches = Vec::new();
    let mut check = |lhs: Rational, rhs: Rational, what: String| {
        cases += 1;
        if lhs != rhs {
            mismatches.push(what);
        }
    };
    for w in [int(2), q(7, 3), int(5)] {
        let d0 = series(GenFunId::D0 { w: w.clone() }, order);
        let d2 = series(GenFunId::D2Beta2 { w: w.clone() }, order);
        let d2b1 = series(GenFunId::D2Beta1 { w: w.clone() }, order);
        let d1: Vec<(u8, SeriesQ)> = [1u8, 2, 4]
            .into_iter()
            .map(|beta| (beta, series(GenFunId::D1 { beta, w: w.clone() }, order)))
            .collect();
        for k in 1..=K {
            let ku = k as usize;
            check(
                delay_coeff(2, k, 0, &w).unwrap(),
                d0.coeff(ku),
                format!("D0 k={k} w={w}"),
            );
            for (beta, s) in &d1 {
                check(
                    delay_coeff(*beta as i64, k, 1, &w).unwrap(),
                    s.coeff(ku),
                    format!("D1 beta={beta} k={k} w={w}"),
                );
            }
            check(
                delay_coeff(2, k, 2, &w).unwrap(),
                d2.coeff(ku),
                format!("D2_beta2 k={k} w={w}"),
            );
            check(
                delay_coeff(1, k, 2, &w).unwrap(),
                d2b1.coeff(ku),
                format!("D2_beta1 k={k} w={w}"),
            );
        }
    }
    for u in [int(2), q(1, 3), q(5, 3)] {
        let z = Rational::zero();
        let t0 = series(GenFunId::T0 { u: u.clone() }, order);
        let t2b1 = series(GenFunId::T2Beta1Delta0 { u: u.clone() }, order);
        let t1: Vec<(SymmetryClass, SeriesQ)> = SymmetryClass::ALL
            .into_iter()
            .map(|c| {
                let id = GenFunId::T1 {
                    beta: c.beta() as u8,
                    delta: c.delta_q(),
                    u: u.clone(),
                };
                (c, series(id, order))
            })
            .collect();
        let t2: Vec<(i64, SeriesQ)> = [-1, 0, 1, 2]
            .into_iter()
            .map(|d| {
                let id = GenFunId::T2Beta2Delta {
                    u: u.clone(),
                    delta: int(d),
                };
                (d, series(id, order))
            })
            .collect();
        for k in 1..=K {
            let ku = k as usize;
            check(
                trans_coeff(2, &z, k, 0, &u).unwrap().value,
                t0.coeff(ku),
                format!("T0 k={k} u={u}"),
            );
            for (c, s) in &t1 {
                check(
                    trans_coeff(c.beta(), &c.delta_q(), k, 1, &u).unwrap().value,
                    s.coeff(ku),
                    format!("T1 {c} k={k} u={u}"),
                );
            }
            for (d, s) in &t2 {
                check(
                    trans_coeff(2, &int(*d), k, 2, &u).unwrap().value,
                    s.coeff(ku),
                    format!("T2_beta2_delta delta={d} k={k} u={u}"),
                );
            }
            check(
                trans_coeff(1, &z, k, 2, &u).unwrap().value,
                t2b1.coeff(ku),
                format!("T2_beta1_delta0 k={k} u={u}"),
            );
        }
    }
    let detail = match mismatches.first() {
        None => format!("{cases} coefficients equal"),
        Some(m) => format!("{} of {cases} differ, first: {m}", mismatches.len()),
    };
    report(
        3,
        "generating-function duality",
        mismatches.is_empty(),
        start.elapsed(),
        Some(Duration::from_secs(60)),
        &detail,
    );
}

#[test]
fn criterion_4_known_specializations() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let schroder = [1, 2, 6, 22, 90];
    let d0 = series(GenFunId::D0 { w: int(2) }, 6);
    let schroder_ok = schroder.iter().enumerate().all(|(i, &s)| {
        let k = i as i64 + 1;
        d0.coeff(k as usize) == int(s) && delay_coeff(2, k, 0, &int(2)).unwrap() == int(s)
    });
    let t_ok = trans_coeff(2, &int(0), 1, 0, &int(1)).unwrap().value == q(1, 2)
        && trans_coeff(2, &int(0), 2, 0, &int(1)).unwrap().value == q(3, 8);
    let dm = selberg_like_diff_p0(1, &int(1), &int(1)).unwrap();
    // ∫ x(1-x) dx / (π√(x(1-x))) over the arcsine law on [0, 1].
    let arcsine = integrate_1d(0.0, 1.0, 1e-14, |_, dl, dh| (dl * dh).sqrt() / PI).unwrap();
    let arcsine_err = (rational_to_f64(&dm) - arcsine).abs();
    let ok = schroder_ok && t_ok && dm == q(1, 8) && arcsine_err < 1e-8;
    report(
        4,
        "known specializations",
        ok,
        start.elapsed(),
        None,
        &format!(
            "D0(w=2) 1,2,6,22,90: {schroder_ok}; T_(1,0)(1)=1/2, T_(2,0)(1)=3/8: {t_ok}; \
             dM_(1,0)(1,1)={dm}, arcsine quadrature err {arcsine_err:.1e}"
        ),
    );
}

#[test]
fn criterion_5_identity_suites() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let mut failed = Vec::new();
    let mut cases = 0;
    for suite in Suite::ALL {
        let r = run_suite(suite).unwrap();
        cases += r.cases();
        for c in r.checks.iter().filter(|c| !c.passed()) {
            failed.push(format!("{}/{}", suite.name(), c.name));
        }
    }
    let detail = if failed.is_empty() {
        format!("{cases} cases in {} suites", Suite::ALL.len())
    } else {
        format!("failing checks: {}", failed.join(", "))
    };
    report(
        5,
        "identity suites",
        failed.is_empty(),
        start.elapsed(),
        Some(Duration::from_secs(120)),
        &detail,
    );
}

#[test]
fn criterion_6_asymptotic_remainder() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    const TARGET: f64 = 1.0 / 8.0;
    const SLACK: f64 = 0.25 * TARGET;
    let start = Instant::now();
    let ns = [32, 64, 128, 256];
    let targets = [
        (
            "transmission beta=1",
            ScanTarget::Transmission {
                beta: 1,
                delta: int(0),
                u: int(2),
            },
        ),
        (
            "transmission beta=2",
            ScanTarget::Transmission {
                beta: 2,
                delta: int(0),
                u: int(2),
            },
        ),
        ("delay beta=2", ScanTarget::Delay { beta: 2, w: int(2) }),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, target) in &targets {
        let rows = remainder_scan(target, 2, &ns).unwrap();
        let ratios: Vec<f64> = rows
            .windows(2)
            .map(|w| w[1].remainder.to_f64() / w[0].remainder.to_f64())
            .collect();
        let good = ratios.iter().all(|r| (r - TARGET).abs() < SLACK);
        ok &= good;
        let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.4}")).collect();
        parts.push(format!(
            "{name}: {} {}",
            shown.join(" "),
            if good { "ok" } else { "out of band" }
        ));
    }
    report(
        6,
        "asymptotic remainder r(2n)/r(n) = 1/8 +- 25%",
        ok,
        start.elapsed(),
        Some(Duration::from_secs(180)),
        &parts.join("; "),
    );
}

#[test]
fn criterion_7_leading_order_beta_independence() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let mut ok = true;
    let mut cases = 0;
    for k in 1..=10 {
        for u in [int(2), q(1, 3), int(1), q(5, 3)] {
            let reference = trans_coeff(2, &int(0), k, 0, &u).unwrap().value;
            for c in SymmetryClass::ALL {
                ok &= trans_coeff(c.beta(), &c.delta_q(), k, 0, &u).unwrap().value == reference;
                cases += 1;
            }
        }
        for w in [int(2), q(7, 3), int(5)] {
            let reference = delay_coeff(2, k, 0, &w).unwrap();
            for beta in [1, 2, 4] {
                ok &= delay_coeff(beta, k, 0, &w).unwrap() == reference;
                cases += 1;
            }
        }
    }
    report(
        7,
        "leading order independent of (beta, delta)",
        ok,
        start.elapsed(),
        None,
        &format!("{cases} comparisons, k <= 10"),
    );
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let manifest = concat!(env!("CARGO_MANIFEST_DIR"), "/../cli/Cargo.toml");
    let out = Command::new(env!("CARGO"))
        .args(["run", "--quiet", "--manifest-path", manifest, "--"])
        .args(args)
        .output()
        .expect("cargo runs");
    assert!(
        out.status.success(),
        "tmoments {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

#[test]
fn criterion_8_cli_determinism() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let runs: [&[&str]; 3] = [
        &[
            "sample",
            "--ensemble",
            "jacobi",
            "--beta",
            "1",
            "--n",
            "5",
            "--a",
            "1/2",
            "--b",
            "2",
            "--seed",
            "42",
            "--samples",
            "4",
        ],
        &[
            "sample",
            "--ensemble",
            "laguerre",
            "--beta",
            "4",
            "--n",
            "3",
            "--b",
            "2",
            "--seed",
            "7",
            "--samples",
            "2000",
            "--k",
            "-1",
        ],
        &[
            "sample",
            "--ensemble",
            "jacobi",
            "--beta",
            "2",
            "--n",
            "4",
            "--a",
            "0",
            "--b",
            "1",
            "--seed",
            "0",
            "--samples",
            "500",
            "--k",
            "2",
        ],
    ];
    let mut ok = true;
    for args in runs {
        let first = run_cli(args);
        let second = run_cli(args);
        ok &= !first.is_empty() && first == second;
    }
    report(
        8,
        "CLI determinism",
        ok,
        start.elapsed(),
        None,
        &format!("{} seeded sample commands, each run twice", runs.len()),
    );
}
