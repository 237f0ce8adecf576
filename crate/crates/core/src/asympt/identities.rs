//! Exact checks of the combinatorial and special-function identities the
//! expansion coefficients rest on. Every check compares two independent
//! rational evaluations; nothing is compared in floating point.

use num_traits::Zero;

use crate::error::Result;
use crate::exactmath::{factorial, hyp2f1_terminating, int, jacobi_p, pochhammer, q};
use crate::moments::SymmetryClass;
use crate::series::genfun::{
    delta_t2_beta1_delta0, delta_t2_beta2, genfun_eval, selberg_h_residual, GenFunId,
};
use crate::series::{SeriesQ, DEFAULT_ORDER};
use crate::Rational;

use super::{
    beta2_p2_abc, bq, delay_coeff, floor_ceiling_poly, jacobi_h, laguerre_pos_narayana,
    laguerre_pos_selberg, selberg_like_coeff, trans_coeff, trans_diff_coeff, trans_p0_novaes,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Coker,
    Chu,
    JacobiPoly,
    GenfunDuality,
    AppendixD,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Coker,
        Suite::Chu,
        Suite::JacobiPoly,
        Suite::GenfunDuality,
        Suite::AppendixD,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Coker => "coker",
            Suite::Chu => "chu",
            Suite::JacobiPoly => "jacobi-poly",
            Suite::GenfunDuality => "genfun-duality",
            Suite::AppendixD => "appendix-d",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// One identity checked over a grid of cases.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: usize,
    /// Description of each failing case.
    pub failures: Vec<String>,
}

impl IdentityCheck {
    fn new(name: &'static str) -> Self {
        IdentityCheck {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, lhs: &Rational, rhs: &Rational, case: impl FnOnce() -> String) {
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(format!("{}: {lhs} != {rhs}", case()));
        }
    }

    fn check_zero(&mut self, x: &Rational, case: impl FnOnce() -> String) {
        self.check(x, &Rational::zero(), case);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<IdentityCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }
}

/// Range override: every index bound of a suite becomes `kmax` when set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub kmax: Option<i64>,
}

impl Limits {
    fn k(&self, default: i64) -> i64 {
        self.kmax.unwrap_or(default)
    }
}

pub fn run_suite(suite: Suite) -> Result<SuiteReport> {
    run_suite_with(suite, Limits::default())
}

pub fn run_suite_with(suite: Suite, limits: Limits) -> Result<SuiteReport> {
    let l = limits;
    let checks = match suite {
        Suite::Coker => coker(l)?,
        Suite::Chu => chu(l),
        Suite::JacobiPoly => jacobi_poly_suite(l)?,
        Suite::GenfunDuality => genfun_duality(l)?,
        Suite::AppendixD => appendix_d(l)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn pow(x: &Rational, e: i64) -> Rational {
    num_traits::pow(x.clone(), e as usize)
}

fn sign(e: i64) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn points_u() -> Vec<Rational> {
    vec![int(1), q(1, 3), q(3, 2), int(2), q(17, 5)]
}

fn points_w() -> Vec<Rational> {
    vec![q(5, 4), q(3, 2), int(2), int(3), q(29, 7)]
}

// ---------------------------------------------------------------------------

fn coker(l: Limits) -> Result<Vec<IdentityCheck>> {
    let mut second = IdentityCheck::new("coker-second-problem");
    let mut first = IdentityCheck::new("coker-first-problem");
    let mut floor = IdentityCheck::new("floor-ceiling");
    let mut floor_poly = IdentityCheck::new("floor-ceiling-polynomial");
    let mut leading = IdentityCheck::new("leading-transmission-two-forms");
    let mut beta_free = IdentityCheck::new("leading-order-beta-independence");
    let mut delta_linear = IdentityCheck::new("beta2-first-correction-linear-in-delta");

    for u in points_u() {
        let up = &u + int(1);
        for k in 1..=l.k(30) {
            let lhs = (1..=k)
                .map(|j| bq(k, j) * bq(k, j - 1) * pow(&u, 2 * j))
                .sum::<Rational>()
                / int(k);
            let rhs: Rational = (0..=k)
                .map(|j| {
                    bq(k - 1, j - 1) * bq(2 * j, j) * sign(j + 1) / int(j + 1)
                        * pow(&u, j + 1)
                        * pow(&up, 2 * k - 2 * j)
                })
                .sum();
            second.check(&lhs, &rhs, || format!("k={k}, u={u}"));
            let lead = trans_coeff(2, &Rational::zero(), k, 0, &u)?.value;
            leading.check(&lead, &trans_p0_novaes(k, &u), || format!("k={k}, u={u}"));
        }
        for k in 1..=l.k(25) {
            let fc: Rational = (0..=2 * k)
                .map(|j| bq(k, j / 2) * bq(k, (j + 1) / 2) * pow(&u, j))
                .sum();
            let lhs = &u / pow(&up, 2 * k + 1) * &fc;
            let rhs: Rational = (0..=k)
                .map(|j| {
                    sign(j) * bq(k, j) * bq(2 * j, j) / int(j + 1) * pow(&u, j + 1)
                        / pow(&up, 2 * j + 1)
                })
                .sum();
            floor.check(&lhs, &rhs, || format!("k={k}, u={u}"));
            let mu = -u.clone();
            let alt: Rational = -(0..=2 * k)
                .map(|j| bq(k, j / 2) * bq(k, (j + 1) / 2) * pow(&mu, j + 1))
                .sum::<Rational>();
            floor_poly.check(&floor_ceiling_poly(k, &u), &alt, || format!("k={k}, u={u}"));
        }
    }
    for w in points_w() {
        for k in 1..=l.k(30) {
            first.check(
                &laguerre_pos_narayana(k, &w),
                &laguerre_pos_selberg(k, &w),
                || format!("k={k}, w={w}"),
            );
        }
    }
    for (u, w) in [(int(1), q(3, 2)), (q(5, 2), int(2)), (q(2, 7), int(5))] {
        for k in 1..=l.k(10) {
            let d = delay_coeff(2, k, 0, &w)?;
            let t = trans_coeff(2, &Rational::zero(), k, 0, &u)?.value;
            for class in SymmetryClass::ALL {
                let dc = delay_coeff(class.beta(), k, 0, &w)?;
                beta_free.check(&dc, &d, || format!("delay k={k}, w={w}, {class:?}"));
                let tc = trans_coeff(class.beta(), &class.delta_q(), k, 0, &u)?.value;
                beta_free.check(&tc, &t, || format!("transmission k={k}, u={u}, {class:?}"));
            }
        }
    }
    for u in [q(1, 2), int(2), q(11, 3)] {
        for k in 1..=l.k(15) {
            let f =
                |d: i64| -> Result<Rational> { Ok(trans_diff_coeff(2, &int(d), k, 1, &u)?.value) };
            let (f0, f1, f2, f3) = (f(0)?, f(1)?, f(2)?, f(-1)?);
            delta_linear.check_zero(&f0, || format!("delta^0 part, k={k}, u={u}"));
            delta_linear.check(&f2, &(int(2) * &f1), || format!("k={k}, u={u}"));
            delta_linear.check(&f3, &-f1.clone(), || format!("k={k}, u={u}"));
        }
    }
    Ok(vec![
        second,
        first,
        floor,
        floor_poly,
        leading,
        beta_free,
        delta_linear,
    ])
}

// ---------------------------------------------------------------------------

fn powi(i: i64, p: u32) -> Rational {
    int(i.pow(p))
}

fn chu(l: Limits) -> Vec<IdentityCheck> {
    let mut jac = IdentityCheck::new("chu-jacobi-kernel");
    let mut lag = IdentityCheck::new("chu-laguerre-kernel");
    for k in 1..=l.k(30) {
        for j in 0..=l.k(30) {
            for p in 0..=2u32 {
                let brute: Rational = (1..=j)
                    .map(|i| bq(k, j - i) * bq(k, j + i) * powi(i, p))
                    .sum();
                let closed = match p {
                    0 => (bq(2 * k, 2 * j) - bq(k, j) * bq(k, j)) / int(2),
                    1 => int(k) * bq(k - 1, j - 1) * bq(k - 1, j) / int(2),
                    _ => int(k) * bq(2 * k - 2, 2 * j - 1) / int(4),
                };
                jac.check(&brute, &closed, || format!("k={k}, j={j}, p={p}"));

                let brute: Rational = (1..=j)
                    .map(|i| bq(k + j - i - 1, k - 1) * bq(k + j + i - 1, k - 1) * powi(i, p))
                    .sum();
                let closed = match p {
                    0 => {
                        (bq(2 * k + 2 * j - 1, 2 * k - 1) - pow(&bq(k + j - 1, k - 1), 2)) / int(2)
                    }
                    1 => int(k) * bq(k + j - 1, k) * bq(k + j, k) / int(2),
                    _ => {
                        let n = 2 * k + 2 * j - 2;
                        (int(n * n) * bq(n + 1, 2 * k - 1)
                            - int(4)
                                * (int(k * k) * bq(n + 1, 2 * k + 1)
                                    + int(2 * k * (k - 1)) * bq(n + 1, 2 * k)
                                    + int((k - 1) * (k - 1)) * bq(n + 1, 2 * k - 1)))
                            / int(8)
                    }
                };
                lag.check(&brute, &closed, || format!("k={k}, j={j}, p={p}"));
            }
        }
    }

    // Reindexing lemmas with a polynomial weight C_{i,j}.
    let c = |i: i64, j: i64| int(3 * i * i - 2 * i * j + j * j * j - 5 * j + 7);
    let mut reidx_j = IdentityCheck::new("chu-reindex-jacobi");
    for k in 1..=l.k(20) {
        let lhs: Rational = (1..=k / 2)
            .flat_map(|j| (0..=k - 2 * j).map(move |i| (i, j)))
            .map(|(i, j)| bq(k, i) * bq(k, i + 2 * j) * c(i, j))
            .sum();
        let rhs: Rational = (1..k)
            .flat_map(|j| (1..=j).map(move |i| (i, j)))
            .map(|(i, j)| bq(k, j - i) * bq(k, i + j) * c(k - i - j, i))
            .sum();
        reidx_j.check(&lhs, &rhs, || format!("k={k}"));
    }
    // Both sides cut at i + j <= N in the first form's indices.
    let mut reidx_l = IdentityCheck::new("chu-reindex-laguerre");
    let w = q(7, 3);
    for k in 1..=l.k(10) {
        let n_max = 18;
        let lhs: Rational = (1..=n_max)
            .flat_map(|j| (0..=n_max - j).map(move |i| (i, j)))
            .map(|(i, j)| {
                bq(k + i - 1, k - 1) * bq(k + 2 * j + i - 1, k - 1) * c(i, j) / pow(&w, k + j + i)
            })
            .sum();
        let rhs: Rational = (1..=n_max)
            .flat_map(|j| (1..=j).map(move |i| (i, j)))
            .map(|(i, j)| {
                bq(k + j - i - 1, k - 1) * bq(k + j + i - 1, k - 1) * c(j - i, i) / pow(&w, k + j)
            })
            .sum();
        reidx_l.check(&lhs, &rhs, || format!("k={k}"));
    }
    vec![jac, lag, reidx_j, reidx_l]
}

// ---------------------------------------------------------------------------

/// `(α+β+n+1)_{p-j} (α+β+2n-2j+1+p) / ((α+β+2n-j+1)_{1+p} (α+n+1)_{-j})`
/// times `C(p,j)`.
fn connection(a: i64, b: i64, j: i64, p: i64, n: i64) -> Result<Rational> {
    let num = pochhammer(&int(a + b + n + 1), p - j)? * int(a + b + 2 * n - 2 * j + 1 + p);
    let den = pochhammer(&int(a + b + 2 * n - j + 1), 1 + p)?;
    // 1/(x)_{-j} = (x-j)_j
    let inv_neg = pochhammer(&int(a + n + 1 - j), j)?;
    Ok(bq(p, j) * num * inv_neg / den)
}

fn jacobi_poly_suite(l: Limits) -> Result<Vec<IdentityCheck>> {
    let mut rec = IdentityCheck::new("jacobi-three-term-recurrence");
    let mut conn = IdentityCheck::new("jacobi-connection-coefficients");
    let mut hyp = IdentityCheck::new("jacobi-hypergeometric-bridge");
    let mut homog = IdentityCheck::new("jacobi-homogenized-form");
    let params = [(0, 0), (1, 1), (2, 2), (0, 3), (2, 1)];
    let xs = [q(1, 3), q(-5, 7), int(3), q(9, 4)];
    for &(a, b) in &params {
        let (aq, bq_) = (int(a), int(b));
        for x in &xs {
            let p = |n: i64, al: i64, be: i64| jacobi_p(n, &int(al), &int(be), x);
            for n in 2..=l.k(30) {
                let s = a + b;
                let lhs = int(2 * n * (n + s) * (2 * n + s - 2)) * p(n, a, b)?;
                let rhs = int(2 * n + s - 1)
                    * (int((2 * n + s) * (2 * n + s - 2)) * x + int(a * a - b * b))
                    * p(n - 1, a, b)?
                    - int(2 * (n + a - 1) * (n + b - 1) * (2 * n + s)) * p(n - 2, a, b)?;
                rec.check(&lhs, &rhs, || format!("n={n}, a={a}, b={b}, x={x}"));
            }
            for pp in 0..=3 {
                for n in pp..=l.k(30) {
                    let lhs = p(n, a, b)?;
                    let mut r1 = Rational::zero();
                    let mut r2 = Rational::zero();
                    for j in 0..=pp {
                        r1 += connection(a, b, j, pp, n)? * p(n - j, a, b + pp)?;
                        r2 += sign(j) * connection(b, a, j, pp, n)? * p(n - j, a + pp, b)?;
                    }
                    conn.check(&lhs, &r1, || {
                        format!("raise beta by {pp}: n={n}, a={a}, b={b}, x={x}")
                    });
                    conn.check(&lhs, &r2, || {
                        format!("raise alpha by {pp}: n={n}, a={a}, b={b}, x={x}")
                    });
                }
            }
            if *x != int(1) {
                for n in 0..=l.k(30) {
                    let xt = (x + int(1)) / (x - int(1));
                    let direct = pow(&(x - int(1)), n) * jacobi_p(n, &aq, &bq_, &xt)?;
                    homog.check(&jacobi_h(n, a, b, x), &direct, || {
                        format!("n={n}, a={a}, b={b}, X={x}")
                    });
                }
            }
        }
    }
    // 2F1(-n, -n+β; α+1; x) with integer 0 ≤ β ≤ n.
    for a in 0..=3 {
        for n in 0..=l.k(30) {
            for b in (0..=n).step_by(3) {
                for x in [q(1, 3), int(3), q(-2, 5)] {
                    let lhs = hyp2f1_terminating(&int(-n), &int(-n + b), &int(a + 1), &x)?;
                    let gamma =
                        Rational::from_integer(factorial(a as u64) * factorial((n - b) as u64))
                            / Rational::from_integer(factorial((n + a - b) as u64));
                    let rhs = gamma * jacobi_h(n - b, b, a, &x);
                    hyp.check(&lhs, &rhs, || format!("n={n}, a={a}, b={b}, x={x}"));
                }
            }
        }
    }
    Ok(vec![rec, conn, hyp, homog])
}

// ---------------------------------------------------------------------------

fn series_of(id: GenFunId, order: usize) -> Result<SeriesQ> {
    Ok(genfun_eval(&id, order)?.series)
}

fn genfun_duality(l: Limits) -> Result<Vec<IdentityCheck>> {
    let kk = l.k(20);
    let order = kk as usize + 1;
    let mut delay = IdentityCheck::new("delay-coefficients-vs-generating-functions");
    let mut trans = IdentityCheck::new("transmission-coefficients-vs-generating-functions");
    let mut diffs = IdentityCheck::new("transmission-differences-vs-difference-series");
    let mut rec = IdentityCheck::new("beta2-second-delay-recurrence");
    let mut lemma = IdentityCheck::new("transmission-auxiliary-taylor-coefficients");
    let mut selberg = IdentityCheck::new("selberg-like-generating-function");

    for w in points_w() {
        let d0 = series_of(GenFunId::D0 { w: w.clone() }, order)?;
        let d2 = series_of(GenFunId::D2Beta2 { w: w.clone() }, order)?;
        let d2b1 = series_of(GenFunId::D2Beta1 { w: w.clone() }, order)?;
        for k in 1..=kk {
            let ku = k as usize;
            delay.check(&delay_coeff(2, k, 0, &w)?, &d0.coeff(ku), || {
                format!("p=0, k={k}, w={w}")
            });
            for beta in [1u8, 2, 4] {
                let d1 = series_of(GenFunId::D1 { beta, w: w.clone() }, order)?;
                delay.check(&delay_coeff(beta as i64, k, 1, &w)?, &d1.coeff(ku), || {
                    format!("p=1, beta={beta}, k={k}, w={w}")
                });
            }
            delay.check(&delay_coeff(2, k, 2, &w)?, &d2.coeff(ku), || {
                format!("p=2, beta=2, k={k}, w={w}")
            });
            delay.check(&delay_coeff(1, k, 2, &w)?, &d2b1.coeff(ku), || {
                format!("p=2, beta=1, k={k}, w={w}")
            });
        }
        for k in 3..=l.k(30) {
            let p = |j: i64| delay_coeff(2, j, 2, &w);
            let lhs = pow(&(&w - int(1)), 2) * int(k - 2) * p(k)?
                - (&w + int(1)) * int(2 * k - 1) * p(k - 1)?
                + int(k + 1) * p(k - 2)?;
            rec.check_zero(&lhs, || format!("k={k}, w={w}"));
        }
    }

    for u in points_u() {
        let t0 = series_of(GenFunId::T0 { u: u.clone() }, order)?;
        for k in 1..=kk {
            let ku = k as usize;
            let z = Rational::zero();
            trans.check(&trans_coeff(2, &z, k, 0, &u)?.value, &t0.coeff(ku), || {
                format!("p=0, k={k}, u={u}")
            });
            for class in SymmetryClass::ALL {
                let (beta, delta) = (class.beta(), class.delta_q());
                let t1 = series_of(
                    GenFunId::T1 {
                        beta: beta as u8,
                        delta: delta.clone(),
                        u: u.clone(),
                    },
                    order,
                )?;
                trans.check(
                    &trans_coeff(beta, &delta, k, 1, &u)?.value,
                    &t1.coeff(ku),
                    || format!("p=1, {class:?}, k={k}, u={u}"),
                );
            }
            for d in [-1, 0, 1, 2] {
                let t2 = series_of(
                    GenFunId::T2Beta2Delta {
                        u: u.clone(),
                        delta: int(d),
                    },
                    order,
                )?;
                trans.check(
                    &trans_coeff(2, &int(d), k, 2, &u)?.value,
                    &t2.coeff(ku),
                    || format!("p=2, beta=2, delta={d}, k={k}, u={u}"),
                );
            }
            let t2b1 = series_of(GenFunId::T2Beta1Delta0 { u: u.clone() }, order)?;
            trans.check(
                &trans_coeff(1, &z, k, 2, &u)?.value,
                &t2b1.coeff(ku),
                || format!("p=2, beta=1, delta=0, k={k}, u={u}"),
            );
            for d in [-1, 1] {
                let conj = series_of(
                    GenFunId::T2Beta1DeltaConjectured {
                        u: u.clone(),
                        delta: int(d),
                    },
                    order,
                )?;
                trans.check(
                    &trans_coeff(1, &int(d), k, 2, &u)?.value,
                    &conj.coeff(ku),
                    || format!("p=2, beta=1, delta={d} (conjectured), k={k}, u={u}"),
                );
            }
        }
        let db1 = delta_t2_beta1_delta0(&u, order)?;
        for k in 1..=kk {
            diffs.check(
                &trans_diff_coeff(1, &Rational::zero(), k, 2, &u)?.value,
                &db1.coeff(k as usize),
                || format!("beta=1, delta=0, p=2, k={k}, u={u}"),
            );
        }
        // [s^k] u²s/(√(1-s) ((u+1)² - s(u-1)²)^{5/2})
        if u != int(1) {
            let up = &u + int(1);
            let um = &u - int(1);
            let rr = crate::series::Series::from_poly(&[&up * &up, -(&um * &um)], order);
            let oms = crate::series::Series::from_poly(&[int(1), int(-1)], order);
            let den = &oms.sqrt()? * &rr.pow_half(5)?;
            let num = crate::series::Series::from_poly(&[int(0), &u * &u], order);
            let f = num.checked_div(&den)?;
            let ut = (&u * &u + int(1)) / (&u * &u - int(1));
            for k in 1..=kk {
                let pj = |n: i64, a: i64| jacobi_p(n, &int(a), &int(a), &ut);
                let inner = (int(1) - &u * &u)
                    * (pj(k - 1, 1)? / int(6 * k) - int(2) * pj(k - 1, 0)? / int(3))
                    - int(2) * &u * pj(k - 2, 1)? / int(3);
                let um_pow = if k >= 2 { pow(&um, k - 2) } else { um.recip() };
                let closed = &u * &u * int(k * (k + 1)) * um_pow / pow(&up, k + 5) * inner;
                lemma.check(&f.coeff(k as usize), &closed, || format!("k={k}, u={u}"));
            }
        }
    }

    for (u, v) in [
        (int(1), int(1)),
        (int(2), q(3, 2)),
        (q(5, 3), int(4)),
        (int(3), int(1)),
        (q(9, 8), q(7, 2)),
    ] {
        let h = series_of(
            GenFunId::SelbergH {
                u: u.clone(),
                v: v.clone(),
            },
            DEFAULT_ORDER,
        )?;
        let res = selberg_h_residual(&h, &u, &v)?;
        for (i, r) in res.coeffs().iter().enumerate() {
            selberg.check_zero(r, || format!("residual s^{i}, u={u}, v={v}"));
        }
        for k in 1..=kk {
            selberg.check(
                &selberg_like_coeff(2, k, 0, &u, &v)?,
                &h.coeff(k as usize),
                || format!("M_k0, k={k}, u={u}, v={v}"),
            );
        }
    }
    Ok(vec![delay, trans, diffs, rec, lemma, selberg])
}

// ---------------------------------------------------------------------------

fn appendix_d(l: Limits) -> Result<Vec<IdentityCheck>> {
    let kmax = l.k(12);
    let mut sum = IdentityCheck::new("beta2-second-correction-sum-vs-series");
    let mut quad = IdentityCheck::new("beta2-second-correction-quadratic-in-delta");
    for u in [q(1, 2), int(2), q(7, 3)] {
        for d in [-1, 0, 1, 2] {
            let series = delta_t2_beta2(&u, &int(d), kmax as usize + 1)?;
            for k in 1..=kmax {
                let v = trans_diff_coeff(2, &int(d), k, 2, &u)?.value;
                sum.check(&v, &series.coeff(k as usize), || {
                    format!("k={k}, u={u}, delta={d}")
                });
            }
        }
        for k in 1..=kmax {
            // A degree-two polynomial has vanishing third finite difference.
            let f =
                |d: i64| -> Result<Rational> { Ok(trans_diff_coeff(2, &int(d), k, 2, &u)?.value) };
            let third = f(3)? - int(3) * f(2)? + int(3) * f(1)? - f(0)?;
            quad.check_zero(&third, || format!("k={k}, u={u}"));
            // The δ² part is the C_j polynomial alone.
            let c_only: Rational = (1..=k)
                .map(|j| {
                    bq(k, j) * bq(k, j - 1) * pow(&u, 2 * k - 2 * j) * beta2_p2_abc(k, j, &u).2
                })
                .sum::<Rational>()
                / (int(4 * k) * pow(&(&u + int(1)), 2 * k + 3));
            let second = (f(2)? - int(2) * f(1)? + f(0)?) / int(2);
            quad.check(&second, &c_only, || format!("delta^2 part, k={k}, u={u}"));
        }
    }
    Ok(vec![sum, quad])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        for s in Suite::ALL {
            let r = run_suite(s).unwrap();
            for c in &r.checks {
                assert!(
                    c.passed(),
                    "{} / {}: {:?}",
                    s.name(),
                    c.name,
                    &c.failures[..c.failures.len().min(3)]
                );
                assert!(c.cases > 0, "{} has no cases", c.name);
            }
        }
    }
}
