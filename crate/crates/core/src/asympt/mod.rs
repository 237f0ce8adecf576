//! Coefficients of the `1/n` expansions of the transmission, delay-time and
//! Selberg-like moments, the combinatorial identities behind them, and the
//! remainder analysis that ties them back to the finite-n formulas.
//!
//! Conventions: `n^{-1} M_J(k,n) ~ Σ_p T_{k,p}(u) n^{-p}` with `a` fixed by
//! `(β, δ)` and `b = (u-1)n`; `n^{k-1} M_L(-k,n) ~ Σ_p D_{k,p}(w) n^{-p}` with
//! `b = n(w-1) + 2/β - 1`; `n^{-1} M(k) ~ Σ_p M_{k,p}(u,v) n^{-p}` with
//! `a = (v-1)n`, `b = (u-1)n`.

pub mod expansion;
pub mod identities;
pub mod remainder;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binom, int, q};
use crate::moments::{check_beta, SymmetryClass};
use crate::series::genfun::{delta_t2_beta2, genfun_eval, moments_to_diff, GenFunId};
use crate::Rational;

pub use expansion::{delay_expansion, jacobi_expansion, LinearInN};
pub use identities::{run_suite, run_suite_with, IdentityCheck, Limits, Suite, SuiteReport};
pub use remainder::{remainder_scan, RemainderRow, ScanTarget, REMAINDER_DIGITS};

/// Highest expansion order with closed forms.
pub const MAX_ORDER: i64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffTarget {
    Transmission,
    Delay,
    SelbergLike,
}

/// Expansion variables of a coefficient request.
#[derive(Clone, Debug, PartialEq)]
pub enum CoeffParams {
    U(Rational),
    W(Rational),
    UV(Rational, Rational),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoeffRequest {
    pub target: CoeffTarget,
    pub beta: i64,
    /// Andreev parameter; only transmission coefficients depend on it.
    pub delta: Rational,
    pub k: i64,
    pub p: i64,
    pub params: CoeffParams,
}

/// A coefficient together with its epistemic status.
#[derive(Clone, Debug, PartialEq)]
pub struct Coeff {
    pub value: Rational,
    /// Rests on the conjectured β=1, δ≠0 second correction.
    pub conjecture: bool,
    /// `(β, δ)` is not one of the seven physical symmetry classes.
    pub non_physical_delta: bool,
}

impl Coeff {
    fn plain(value: Rational) -> Self {
        Coeff {
            value,
            conjecture: false,
            non_physical_delta: false,
        }
    }
}

pub fn bq(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom(n, k))
}

fn pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// `(X-1)^n P_n^{(α,β)}((X+1)/(X-1)) = Σ_j C(n+α,n-j) C(n+β,j) X^{n-j}`,
/// zero for negative `n`. With `X = w` this is the `w̃` form, with `X = u²`
/// the `ũ` form; being a polynomial it stays finite at `X = 1`.
pub fn jacobi_h(n: i64, alpha: i64, beta: i64, x: &Rational) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    (0..=n)
        .map(|j| bq(n + alpha, n - j) * bq(n + beta, j) * pow(x, n - j))
        .sum()
}

fn check_k(k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::ParameterDomain(format!("k must be >= 1, got {k}")));
    }
    Ok(())
}

fn check_p(p: i64) -> Result<()> {
    if !(0..=MAX_ORDER).contains(&p) {
        return Err(Error::UnsupportedOrder(format!(
            "expansion order p={p}; closed forms exist for p in 0..=2"
        )));
    }
    Ok(())
}

fn check_w(w: &Rational) -> Result<()> {
    if w <= &Rational::one() {
        return Err(Error::ParameterDomain(format!("w={w} must exceed 1")));
    }
    Ok(())
}

fn check_u(u: &Rational) -> Result<()> {
    if !u.is_positive() {
        return Err(Error::ParameterDomain(format!("u={u} must be positive")));
    }
    Ok(())
}

fn check_delta(delta: &Rational) -> Result<()> {
    if delta <= &int(-2) {
        return Err(Error::ParameterDomain(format!(
            "delta={delta} must exceed -2"
        )));
    }
    Ok(())
}

fn beta_factor(beta: i64) -> Rational {
    q(2, beta) - Rational::one()
}

/// True when `(β, δ)` is one of the physical symmetry classes.
pub fn is_physical(beta: i64, delta: &Rational) -> bool {
    delta.is_integer()
        && SymmetryClass::ALL
            .iter()
            .any(|c| c.beta() == beta && c.delta_q() == *delta)
}

// ---------------------------------------------------------------------------
// Delay times

/// Leading delay coefficient, the same for every β.
fn delay_p0(k: i64, w: &Rational) -> Rational {
    let wm = w - int(1);
    if k == 1 {
        return wm.recip();
    }
    let s: Rational = (1..k)
        .map(|j| bq(k - 1, j) * bq(k - 1, j - 1) * pow(w, j))
        .sum();
    s * pow(&wm, 1 - 2 * k) / int(k - 1)
}

fn delay_p1(beta: i64, k: i64, w: &Rational) -> Rational {
    let s: Rational = (0..=k)
        .map(|j| (bq(2 * k, 2 * j) - bq(k, j) * bq(k, j)) * pow(w, j))
        .sum();
    beta_factor(beta) * s / (int(2) * pow(&(w - int(1)), 2 * k))
}

fn delay_p2_beta2(k: i64, w: &Rational) -> Rational {
    int((k + 1) * (k + 2)) * w * jacobi_h(k - 2, 2, 2, w)
        / (int(12) * pow(&(w - int(1)), 2 * k + 1))
}

/// β=1 second correction in the closed form obtained from its generating
/// function through the β=2 coefficients.
fn delay_p2_beta1(k: i64, w: &Rational) -> Rational {
    let wm = w - int(1);
    let odd: Rational = (0..=k).map(|j| bq(2 * k + 2, 2 * j + 1) * pow(w, j)).sum();
    let a = (w + int(1)) * int(k + 3) * jacobi_h(k - 1, 2, 2, w) / int(4);
    let b = int(k) * odd / int(4);
    let c = (int(8) * w + int(7 * k) * w - int(3) * w * w - int(3))
        * int(k + 1)
        * jacobi_h(k - 2, 2, 2, w)
        / int(12);
    (a - b + c) / pow(&wm, 2 * k + 1)
}

/// `D_{k,p}^{(β)}(w)`.
pub fn delay_coeff(beta: i64, k: i64, p: i64, w: &Rational) -> Result<Rational> {
    check_beta(beta)?;
    check_k(k)?;
    check_p(p)?;
    check_w(w)?;
    match (p, beta) {
        (0, _) => Ok(delay_p0(k, w)),
        (1, _) => Ok(delay_p1(beta, k, w)),
        (2, 2) => Ok(delay_p2_beta2(k, w)),
        (2, 1) => Ok(delay_p2_beta1(k, w)),
        _ => Err(Error::UnsupportedOrder(
            "the second delay-time correction is not available for beta=4".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// Transmission eigenvalues

/// Leading difference `ΔT_{k,0}(u) = N_k(u²)/(u+1)^{2k+1}`.
fn trans_diff_p0(k: i64, u: &Rational) -> Rational {
    let s: Rational = (1..=k)
        .map(|j| bq(k, j) * bq(k, j - 1) * pow(u, 2 * j))
        .sum();
    s / (int(k) * pow(&(u + int(1)), 2 * k + 1))
}

/// `Σ_j C(k,j)² u^{2j+1} - Σ_j C(k,j)C(k,j+1) u^{2j+2}`.
pub fn floor_ceiling_poly(k: i64, u: &Rational) -> Rational {
    (0..=k)
        .map(|j| {
            bq(k, j) * bq(k, j) * pow(u, 2 * j + 1) - bq(k, j) * bq(k, j + 1) * pow(u, 2 * j + 2)
        })
        .sum()
}

fn trans_diff_p1(beta: i64, delta: &Rational, k: i64, u: &Rational) -> Rational {
    let up = u + int(1);
    let um = u - int(1);
    let chaos = beta_factor(beta) * u / (&up * &up) * pow(&(um / &up), 2 * k);
    let andreev = delta / int(beta) * floor_ceiling_poly(k, u) / pow(&up, 2 * k + 2);
    chaos + andreev
}

/// Polynomials `A_j`, `B_j`, `C_j` of the β=2 second correction,
/// `F = A + (δ/2) B + (δ²/4) C`.
pub fn beta2_p2_abc(k: i64, j: i64, u: &Rational) -> (Rational, Rational, Rational) {
    let (k, j) = (int(k), int(j));
    let one = || int(1);
    let u2 = u * u;
    let u3 = &u2 * u;
    let u4 = &u2 * &u2;
    let a = (&j - &k)
        * (&j - one() - &k)
        * (int(3) * &j * &j - int(6) * &j * &k - &j + &k + int(3) * &k * &k - one())
        / int(6)
        + (&j - one() - &k) * (int(2) * &j - one() - int(2) * &k) * (&j - &k) * u / int(3)
        - &j * (&j - one() - &k) * (-(&j * &k) + &k + one() + &j * &j - &j) * &u2
        - &j * (int(2) * &j - one()) * (&j - one()) * &u3 / int(3)
        + &j * (&j - one()) * (int(3) * &j * &j - int(5) * &j + one()) * &u4 / int(6);
    let b_bracket = (&j - &k) * (&j - one() - &k) * (int(2) * &j - one() - int(2) * &k)
        - &j * (int(2) * &j - one()) * (&j - one()) * &u3
        + (one() + int(2) * &j) * (&j - &k) * (&j - one() - &k) * u
        - &j * (&j - one()) * (int(2) * &j - int(2) * &k - int(3)) * &u2;
    let b = (u - one()) * b_bracket / int(2);
    let c = (&j - &k) * (&j - one() - &k) / int(2)
        + u * (&k + one()) * (&j - one() - &k)
        + &u2 * (&j * (&k - &j + one()) + &k * (&k + one()) / int(2))
        - &j * (&k + one()) * &u3
        + &j * (&j - one()) * &u4 / int(2);
    (a, b, c)
}

/// `ΔT_{k,2}^{(2,δ)}(u)` as the Narayana-weighted sum of `F_{k,2}`.
fn trans_diff_p2_beta2(delta: &Rational, k: i64, u: &Rational) -> Rational {
    let up = u + int(1);
    let s: Rational = (1..=k)
        .map(|j| {
            let (a, b, c) = beta2_p2_abc(k, j, u);
            let f = a + delta / int(2) * b + delta * delta / int(4) * c;
            bq(k, j) * bq(k, j - 1) * pow(u, 2 * k - 2 * j) * f
        })
        .sum();
    s / (int(k) * pow(&up, 2 * k + 3))
}

/// `ΔT_{k,2}^{(1,0)}(u)` from its Jacobi-polynomial coefficient formula,
/// split into odd and even powers of `u` after multiplying by `(u+1)^{2k+3}`.
fn trans_diff_p2_beta1_delta0(k: i64, u: &Rational) -> Rational {
    let x = u * u;
    let xm2 = (&x - int(1)) * (&x - int(1));
    let kq = int(k);
    let odd = u
        * ((&kq + int(2)) / int(6) * jacobi_h(k, 1, 1, &x)
            - int(2) * (&kq + int(1)) * (&kq + int(2)) / int(3) * jacobi_h(k, 0, 0, &x)
            + &xm2
                * (-(&kq) / int(6) * jacobi_h(k - 2, 1, 1, &x)
                    + int(2) * &kq * (&kq - int(1)) / int(3) * jacobi_h(k - 2, 0, 0, &x))
            - int(2) * &kq * (&kq + int(1)) * &x * jacobi_h(k - 2, 1, 1, &x));
    let even = &x
        * ((int(2) * (&kq + int(2)) * (&kq + int(1)) / int(3) - (&kq + int(1)) / int(2))
            * jacobi_h(k - 1, 1, 1, &x)
            + int(2) * &kq * (&kq + int(1)) * jacobi_h(k - 1, 0, 0, &x)
            - int(2) * (&kq - int(1)) * &kq / int(3) * &xm2 * jacobi_h(k - 3, 1, 1, &x));
    (odd + even) / pow(&(u + int(1)), 2 * k + 3)
}

/// β=1, δ≠0 second-correction differences from the conjectured
/// generating function of the moments.
fn trans_diff_p2_beta1_conjectured(delta: &Rational, k: i64, u: &Rational) -> Result<Rational> {
    let order = k as usize + 2;
    let id = GenFunId::T2Beta1DeltaConjectured {
        u: u.clone(),
        delta: delta.clone(),
    };
    let moments = genfun_eval(&id, order)?.series;
    Ok(moments_to_diff(&moments)?.coeff(k as usize))
}

fn trans_diff_raw(
    beta: i64,
    delta: &Rational,
    k: i64,
    p: i64,
    u: &Rational,
) -> Result<(Rational, bool)> {
    match (p, beta) {
        (0, _) => Ok((trans_diff_p0(k, u), false)),
        (1, _) => Ok((trans_diff_p1(beta, delta, k, u), false)),
        (2, 2) => Ok((trans_diff_p2_beta2(delta, k, u), false)),
        (2, 1) if delta.is_zero() => Ok((trans_diff_p2_beta1_delta0(k, u), false)),
        (2, 1) => Ok((trans_diff_p2_beta1_conjectured(delta, k, u)?, true)),
        _ => Err(Error::UnsupportedOrder(
            "the second transmission correction is not available for beta=4".into(),
        )),
    }
}

fn check_trans(beta: i64, delta: &Rational, k: i64, p: i64, u: &Rational) -> Result<()> {
    check_beta(beta)?;
    check_delta(delta)?;
    check_k(k)?;
    check_p(p)?;
    check_u(u)
}

/// `ΔT_{k,p}^{(β,δ)}(u) = T_{k,p} - T_{k+1,p}`.
pub fn trans_diff_coeff(
    beta: i64,
    delta: &Rational,
    k: i64,
    p: i64,
    u: &Rational,
) -> Result<Coeff> {
    check_trans(beta, delta, k, p, u)?;
    let (value, conjecture) = trans_diff_raw(beta, delta, k, p, u)?;
    Ok(Coeff {
        value,
        conjecture,
        non_physical_delta: !is_physical(beta, delta),
    })
}

/// First moment from the expansion of Aomoto's integral.
pub fn trans_first(beta: i64, delta: &Rational, p: i64, u: &Rational) -> Rational {
    let f = Rational::one() - q(2, beta) * (delta / int(2) + Rational::one());
    u * pow(&f, p) / pow(&(u + int(1)), p + 1)
}

/// Leading moment in the form obtained from Selberg's integral.
pub fn trans_p0_novaes(k: i64, u: &Rational) -> Rational {
    let up = u + int(1);
    (0..k)
        .map(|j| {
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            sign * bq(k - 1, j) * bq(2 * j, j) / int(j + 1) * pow(u, j + 1) / pow(&up, 2 * j + 1)
        })
        .sum()
}

/// `T_{k,p}^{(β,δ)}(u) = T_{1,p} - Σ_{j<k} ΔT_{j,p}`.
pub fn trans_coeff(beta: i64, delta: &Rational, k: i64, p: i64, u: &Rational) -> Result<Coeff> {
    check_trans(beta, delta, k, p, u)?;
    if beta == 4 && p == 2 {
        // T_{1,2} alone would be available; the family as a whole is not.
        return Err(Error::UnsupportedOrder(
            "the second transmission correction is not available for beta=4".into(),
        ));
    }
    let mut value = trans_first(beta, delta, p, u);
    let mut conjecture = false;
    for j in 1..k {
        let (d, c) = trans_diff_raw(beta, delta, j, p, u)?;
        value -= d;
        conjecture |= c;
    }
    if p == 2 && beta == 1 && !delta.is_zero() {
        conjecture = true;
    }
    if p == 0 {
        let other = trans_p0_novaes(k, u);
        if other != value {
            return Err(Error::InternalIdentityViolation(format!(
                "leading transmission moment k={k}, u={u}: difference sum {value} != Selberg form {other}"
            )));
        }
    }
    Ok(Coeff {
        value,
        conjecture,
        non_physical_delta: !is_physical(beta, delta),
    })
}

/// `ΔT_{k,2}^{(2,δ)}` read off the closed-form difference series; the
/// cross-check for the Narayana-weighted sum.
pub fn trans_diff_p2_beta2_series(delta: &Rational, k: i64, u: &Rational) -> Result<Rational> {
    Ok(delta_t2_beta2(u, delta, k as usize + 1)?.coeff(k as usize))
}

// ---------------------------------------------------------------------------
// Selberg-like integrals

fn check_uv(u: &Rational, v: &Rational) -> Result<()> {
    if u < &Rational::one() || v < &Rational::one() {
        return Err(Error::ParameterDomain(format!(
            "need u, v >= 1, got u={u}, v={v}"
        )));
    }
    Ok(())
}

/// `ΔM_{k,0}(u,v)`, also the difference moment of the limiting density.
pub fn selberg_like_diff_p0(k: i64, u: &Rational, v: &Rational) -> Result<Rational> {
    check_k(k)?;
    check_uv(u, v)?;
    let s = u + v;
    let c = &s - int(1);
    let sum: Rational = (1..=k)
        .map(|j| bq(k, j) * bq(k, j - 1) * pow(v, j) * pow(u, k - j + 1) * pow(&c, k - j + 1))
        .sum();
    Ok(sum / (int(k) * pow(&s, 2 * k + 1)))
}

/// `M_{k,p}^{(β)}(u,v)` for `p ∈ {0, 1}`.
pub fn selberg_like_coeff(
    beta: i64,
    k: i64,
    p: i64,
    u: &Rational,
    v: &Rational,
) -> Result<Rational> {
    check_beta(beta)?;
    check_k(k)?;
    check_uv(u, v)?;
    let s = u + v;
    match p {
        0 => {
            let mut acc = u / &s;
            for j in 1..k {
                acc -= selberg_like_diff_p0(j, u, v)?;
            }
            Ok(acc)
        }
        1 => {
            let y = u * (&s - int(1)) / v;
            let sum: Rational = (0..=k)
                .map(|j| (bq(2 * k, 2 * j) - bq(k, j) * bq(k, j)) * pow(&y, j))
                .sum();
            Ok(beta_factor(beta) * pow(v, k) / (int(2) * pow(&s, 2 * k)) * sum)
        }
        _ => Err(Error::UnsupportedOrder(format!(
            "Selberg-like coefficients exist for p in 0..=1, got p={p}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Positive Laguerre moments

/// Narayana form of `lim n^{-k-1} M_L(k,n)`.
pub fn laguerre_pos_narayana(k: i64, w: &Rational) -> Rational {
    (1..=k)
        .map(|j| bq(k, j) * bq(k, j - 1) * pow(w, j))
        .sum::<Rational>()
        / int(k)
}

/// Form of the same limit obtained from Selberg's integral.
pub fn laguerre_pos_selberg(k: i64, w: &Rational) -> Rational {
    (0..=(k - 1) / 2)
        .map(|j| {
            bq(2 * j, j) * bq(k - 1, 2 * j) * pow(w, j + 1) * pow(&(w + int(1)), k - 2 * j - 1)
                / int(j + 1)
        })
        .sum()
}

/// `lim n^{-k-1} M_L(k,n)`, evaluated both ways.
pub fn laguerre_pos_leading(k: i64, w: &Rational) -> Result<Rational> {
    check_k(k)?;
    let a = laguerre_pos_narayana(k, w);
    let b = laguerre_pos_selberg(k, w);
    if a != b {
        return Err(Error::InternalIdentityViolation(format!(
            "positive Laguerre limit k={k}, w={w}: {a} != {b}"
        )));
    }
    Ok(a)
}

// ---------------------------------------------------------------------------

/// Dispatch a request to the matching coefficient.
pub fn coeff(req: &CoeffRequest) -> Result<Coeff> {
    match (req.target, &req.params) {
        (CoeffTarget::Transmission, CoeffParams::U(u)) => {
            trans_coeff(req.beta, &req.delta, req.k, req.p, u)
        }
        (CoeffTarget::Delay, CoeffParams::W(w)) => {
            delay_coeff(req.beta, req.k, req.p, w).map(Coeff::plain)
        }
        (CoeffTarget::SelbergLike, CoeffParams::UV(u, v)) => {
            selberg_like_coeff(req.beta, req.k, req.p, u, v).map(Coeff::plain)
        }
        (t, p) => Err(Error::ParameterDomain(format!(
            "{t:?} coefficients do not take parameters {p:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delay_examples() {
        for beta in [1, 2, 4] {
            assert_eq!(delay_coeff(beta, 1, 0, &int(2)).unwrap(), int(1));
        }
        assert_eq!(delay_coeff(2, 2, 1, &int(3)).unwrap(), int(0));
        assert_eq!(delay_coeff(1, 2, 1, &int(2)).unwrap(), int(2));
        assert_eq!(delay_coeff(2, 2, 2, &int(2)).unwrap(), int(2));
        assert!(matches!(
            delay_coeff(4, 2, 2, &int(2)),
            Err(Error::UnsupportedOrder(_))
        ));
        assert!(matches!(
            delay_coeff(2, 2, 3, &int(2)),
            Err(Error::UnsupportedOrder(_))
        ));
    }

    #[test]
    fn transmission_examples() {
        let z = int(0);
        assert_eq!(
            trans_diff_coeff(2, &z, 1, 0, &int(1)).unwrap().value,
            q(1, 8)
        );
        assert_eq!(trans_coeff(2, &z, 1, 0, &int(1)).unwrap().value, q(1, 2));
        assert_eq!(trans_coeff(2, &z, 2, 0, &int(1)).unwrap().value, q(3, 8));
        assert_eq!(trans_coeff(2, &z, 1, 1, &int(3)).unwrap().value, int(0));
        // δ-free part of the first correction vanishes at β=2.
        for k in 1..6 {
            assert!(trans_diff_coeff(2, &z, k, 1, &q(5, 2))
                .unwrap()
                .value
                .is_zero());
        }
        let c = trans_diff_coeff(1, &int(1), 2, 2, &int(2)).unwrap();
        assert!(c.conjecture);
        assert!(!c.non_physical_delta || !is_physical(1, &int(1)));
        assert!(
            trans_diff_coeff(2, &q(1, 3), 1, 1, &int(2))
                .unwrap()
                .non_physical_delta
        );
        assert!(matches!(
            trans_coeff(4, &z, 1, 2, &int(2)),
            Err(Error::UnsupportedOrder(_))
        ));
    }

    #[test]
    fn andreev_first_correction_matches_corollary() {
        // ΔT_{k,1} = u/(u+1)² ((u-1)/(u+1))^{2k} (2/β-1 + δ(u-1)/(βu) T_{k+1,0}(-u))
        for (beta, delta) in [(2, 2), (1, -1), (4, 2), (2, 1)] {
            for u in [int(2), q(7, 3), int(5)] {
                for k in 1..8 {
                    let d = int(delta);
                    let up = &u + int(1);
                    let um = &u - int(1);
                    let t = trans_p0_novaes(k + 1, &-u.clone());
                    let expect = &u / (&up * &up)
                        * pow(&(&um / &up), 2 * k)
                        * (beta_factor(beta) + &d * &um / (int(beta) * &u) * t);
                    assert_eq!(trans_diff_coeff(beta, &d, k, 1, &u).unwrap().value, expect);
                }
            }
        }
    }

    #[test]
    fn selberg_like_examples() {
        let one = int(1);
        assert_eq!(selberg_like_coeff(2, 1, 0, &one, &one).unwrap(), q(1, 2));
        assert_eq!(selberg_like_diff_p0(1, &one, &one).unwrap(), q(1, 8));
        assert_eq!(
            selberg_like_coeff(2, 2, 1, &int(2), &int(2)).unwrap(),
            int(0)
        );
        // (1/2) · 2²/4⁴ · Σ (C(4,2j) - C(2,j)²) 3^j = 1/128 · (0 + 2·3 + 0)
        assert_eq!(
            selberg_like_coeff(1, 2, 1, &int(2), &int(2)).unwrap(),
            q(3, 64)
        );
        assert!(matches!(
            selberg_like_coeff(1, 2, 2, &int(2), &int(2)),
            Err(Error::UnsupportedOrder(_))
        ));
    }

    #[test]
    fn laguerre_positive_examples() {
        assert_eq!(laguerre_pos_leading(1, &int(2)).unwrap(), int(2));
        assert_eq!(laguerre_pos_leading(2, &int(1)).unwrap(), int(2));
        assert_eq!(laguerre_pos_leading(3, &int(2)).unwrap(), int(22));
    }

    #[test]
    fn jacobi_h_matches_polynomial_form() {
        use crate::exactmath::jacobi_poly;
        for (a, b) in [(0, 0), (1, 1), (2, 2), (1, 2), (0, 1)] {
            for n in 0..8 {
                let x = q(7, 2);
                let xt = (&x + int(1)) / (&x - int(1));
                let expect = pow(&(&x - int(1)), n) * jacobi_poly(n, a, b, &xt).unwrap();
                assert_eq!(jacobi_h(n, a, b, &x), expect);
            }
        }
    }
}
