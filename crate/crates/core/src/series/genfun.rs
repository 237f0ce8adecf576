//! Closed-form generating functions, expanded at rational parameter values.

use num_traits::{One, Signed, Zero};

use super::{Series, SeriesQ};
use crate::error::{Error, Result};
use crate::exactmath::int;
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum GenFunId {
    /// Narayana-polynomial generating function ρ(u, s).
    NarayanaRho {
        u: Rational,
    },
    D0 {
        w: Rational,
    },
    T0 {
        u: Rational,
    },
    D1 {
        beta: u8,
        w: Rational,
    },
    T1 {
        beta: u8,
        delta: Rational,
        u: Rational,
    },
    D2Beta2 {
        w: Rational,
    },
    T2Beta2Delta {
        u: Rational,
        delta: Rational,
    },
    D2Beta1 {
        w: Rational,
    },
    T2Beta1Delta0 {
        u: Rational,
    },
    T2Beta1DeltaConjectured {
        u: Rational,
        delta: Rational,
    },
    SelbergH {
        u: Rational,
        v: Rational,
    },
}

impl GenFunId {
    pub fn name(&self) -> &'static str {
        match self {
            GenFunId::NarayanaRho { .. } => "NarayanaRho",
            GenFunId::D0 { .. } => "D0",
            GenFunId::T0 { .. } => "T0",
            GenFunId::D1 { .. } => "D1",
            GenFunId::T1 { .. } => "T1",
            GenFunId::D2Beta2 { .. } => "D2_beta2",
            GenFunId::T2Beta2Delta { .. } => "T2_beta2_delta",
            GenFunId::D2Beta1 { .. } => "D2_beta1",
            GenFunId::T2Beta1Delta0 { .. } => "T2_beta1_delta0",
            GenFunId::T2Beta1DeltaConjectured { .. } => "T2_beta1_delta_conjectured",
            GenFunId::SelbergH { .. } => "SelbergH",
        }
    }

    pub fn is_conjecture(&self) -> bool {
        matches!(self, GenFunId::T2Beta1DeltaConjectured { .. })
    }
}

/// A generating function truncated at some order, tagged with its status.
#[derive(Clone, Debug, PartialEq)]
pub struct GenFun {
    pub series: SeriesQ,
    pub conjecture: bool,
}

fn poly(p: &[Rational], order: usize) -> SeriesQ {
    Series::from_poly(p, order)
}

fn c(x: Rational, order: usize) -> SeriesQ {
    Series::constant(x, order)
}

fn require_w(w: &Rational) -> Result<()> {
    if w <= &Rational::one() {
        return Err(Error::ParameterDomain(format!(
            "w={w} must exceed 1 (w=1 is a pole of the delay-time generating functions)"
        )));
    }
    Ok(())
}

fn require_u(u: &Rational) -> Result<()> {
    if !u.is_positive() {
        return Err(Error::ParameterDomain(format!("u={u} must be positive")));
    }
    Ok(())
}

fn beta_factor(beta: u8) -> Result<Rational> {
    match beta {
        1 | 2 | 4 => Ok(Rational::new(2.into(), beta.into()) - Rational::one()),
        _ => Err(Error::ParameterDomain(format!(
            "beta={beta} must be 1, 2 or 4"
        ))),
    }
}

/// `Q = s² - 2(w+1)s + (w-1)²`
fn q_poly(w: &Rational, order: usize) -> SeriesQ {
    let wm = w - int(1);
    poly(&[&wm * &wm, -int(2) * (w + int(1)), int(1)], order)
}

/// `R = (u+1)² - s(u-1)²`
fn r_poly(u: &Rational, order: usize) -> SeriesQ {
    let up = u + int(1);
    let um = u - int(1);
    poly(&[&up * &up, -(&um * &um)], order)
}

fn one_minus_s(order: usize) -> SeriesQ {
    poly(&[int(1), int(-1)], order)
}

fn s_minus_one(order: usize) -> SeriesQ {
    poly(&[int(-1), int(1)], order)
}

pub fn genfun_eval(id: &GenFunId, order: usize) -> Result<GenFun> {
    let series = match id {
        GenFunId::NarayanaRho { u } => narayana_rho(u, order)?,
        GenFunId::D0 { w } => d0(w, order)?,
        GenFunId::T0 { u } => t0(u, order)?,
        GenFunId::D1 { beta, w } => d1(*beta, w, order)?,
        GenFunId::T1 { beta, delta, u } => t1(*beta, delta, u, order)?,
        GenFunId::D2Beta2 { w } => d2_beta2(w, order)?,
        GenFunId::T2Beta2Delta { u, delta } => t2_beta2(u, delta, order)?,
        GenFunId::D2Beta1 { w } => d2_beta1(w, order)?,
        GenFunId::T2Beta1Delta0 { u } => t2_beta1_delta0(u, order)?,
        GenFunId::T2Beta1DeltaConjectured { u, delta } => t2_beta1_conjectured(u, delta, order)?,
        GenFunId::SelbergH { u, v } => selberg_h(u, v, order)?,
    };
    Ok(GenFun {
        series,
        conjecture: id.is_conjecture(),
    })
}

fn narayana_rho(u: &Rational, order: usize) -> Result<SeriesQ> {
    // One extra order because of the final division by s.
    let o = order + 1;
    let disc = poly(
        &[int(1), -int(2) - int(2) * u, int(1) - int(2) * u + u * u],
        o,
    );
    let num = &poly(&[int(1), -(u + int(1))], o) - &disc.sqrt()?;
    Ok(num.div_s()?.scale(&Rational::new(1.into(), 2.into())))
}

fn d0(w: &Rational, order: usize) -> Result<SeriesQ> {
    require_w(w)?;
    let lin = poly(&[w - int(1), int(-1)], order);
    let half = Rational::new(1.into(), 2.into());
    Ok((&lin - &q_poly(w, order).sqrt()?).scale(&half))
}

fn t0(u: &Rational, order: usize) -> Result<SeriesQ> {
    require_u(u)?;
    let up = u + int(1);
    let inner =
        poly(&[int(0), int(4) * u / (&up * &up)], order).checked_div(&one_minus_s(order))?;
    let root = (&c(int(1), order) + &inner).sqrt()?;
    Ok((&root - &c(int(1), order)).scale(&(up / int(2))))
}

fn d1(beta: u8, w: &Rational, order: usize) -> Result<SeriesQ> {
    require_w(w)?;
    let f = beta_factor(beta)?;
    let q = q_poly(w, order);
    let wm = w - int(1);
    let a = poly(&[&wm * &wm, -(w + int(1))], order);
    let b = q.sqrt()?.scale(&wm);
    Ok((&a - &b).checked_div(&q)?.scale(&(f / int(2))))
}

fn t1(beta: u8, delta: &Rational, u: &Rational, order: usize) -> Result<SeriesQ> {
    require_u(u)?;
    let f = beta_factor(beta)?;
    let r = r_poly(u, order);
    let first = poly(&[int(0), f * u], order).checked_div(&(&s_minus_one(order) * &r))?;
    let root = (&one_minus_s(order) * &r).sqrt()?;
    let a = c(u + int(1), order).checked_div(&root)?;
    let b = c(int(1), order).checked_div(&s_minus_one(order))?;
    let second = (&a + &b).scale(&(delta / (int(2) * int(beta as i64))));
    Ok(&first + &second)
}

fn d2_beta2(w: &Rational, order: usize) -> Result<SeriesQ> {
    require_w(w)?;
    poly(&[int(0), int(0), w.clone()], order).checked_div(&q_poly(w, order).pow_half(5)?)
}

fn t2_beta2(u: &Rational, delta: &Rational, order: usize) -> Result<SeriesQ> {
    require_u(u)?;
    let r = r_poly(u, order);
    let d2 = delta * delta;
    let num =
        &(&r * &poly(&[int(0), &d2 * u], order)) - &poly(&[int(0), int(0), int(4) * u * u], order);
    let den = (&one_minus_s(order).pow_half(3)? * &r.pow_half(5)?).scale(&int(4));
    num.checked_div(&den)
}

fn d2_beta1(w: &Rational, order: usize) -> Result<SeriesQ> {
    require_w(w)?;
    let q = q_poly(w, order);
    let wm = w - int(1);
    let wp = w + int(1);
    let n1 = poly(
        &[
            int(0),
            &wm * &wm * &wp,
            -(int(2) * w * w - int(3) * w + int(2)),
            wp.clone(),
        ],
        order,
    );
    let n2 = poly(&[int(0), int(1) - w * w, wm], order);
    let a = n1.checked_div(&q.pow_half(5)?)?;
    let b = n2.checked_div(&q.pow(2))?;
    Ok(&a + &b)
}

fn t2_beta1_delta0(u: &Rational, order: usize) -> Result<SeriesQ> {
    require_u(u)?;
    let up = u + int(1);
    let um = u - int(1);
    let num = poly(
        &[int(0), u * &up * &up, -(int(3) * u * u), -(u * &um * &um)],
        order,
    );
    let den = &r_poly(u, order).pow_half(5)? * &one_minus_s(order).pow_half(3)?;
    num.checked_div(&den)
}

fn t2_beta1_conjectured(u: &Rational, delta: &Rational, order: usize) -> Result<SeriesQ> {
    let base = t2_beta1_delta0(u, order)?;
    let up = u + int(1);
    let um = u - int(1);
    let r = r_poly(u, order);
    let sm1 = s_minus_one(order);
    let r52_oms32 = &r.pow_half(5)? * &one_minus_s(order).pow_half(3)?;
    let r2 = r.pow(2);

    let t1 = poly(&[int(0), int(3) * delta * u / (int(2) * up.pow(3))], order).checked_div(&sm1)?;

    let n2 = (&r2 + &r.scale(&(int(2) * u * delta))).mul_s().scale(delta);
    let t2 = n2.checked_div(&r52_oms32.scale(&int(2)))?;

    let n3 = poly(
        &[
            int(0),
            &up * &up * (u * u - int(5) * u + int(1)),
            -(&um * &um * (u * u - int(4) * u + int(1))),
        ],
        order,
    )
    .scale(delta);
    let t3 = n3.checked_div(&(&sm1 * &r2).scale(&(int(2) * &up)))?;

    let n4 = poly(&[int(0), int(0), int(0), int(3) * u * um.pow(4)], order).scale(delta);
    let t4 = n4.checked_div(&(&sm1 * &r2).scale(&(int(2) * up.pow(3))))?;

    Ok(&(&(&(&base + &t1) + &t2) + &t3) - &t4)
}

/// Power-series root with `H(0) = 0` of
/// `H = us/(u+v-(1+u)s) - (1-s)/(u+v-(1+u)s) H²`, by fixed-point iteration.
fn selberg_h(u: &Rational, v: &Rational, order: usize) -> Result<SeriesQ> {
    let uv = u + v;
    if uv.is_zero() {
        return Err(Error::ParameterDomain("u+v must be nonzero".into()));
    }
    let den = poly(&[uv, -(int(1) + u)], order);
    let a = poly(&[int(0), u.clone()], order).checked_div(&den)?;
    let b = one_minus_s(order).checked_div(&den)?;
    let mut h = Series::zero(order);
    for _ in 0..order {
        h = &a - &(&b * &(&h * &h));
    }
    Ok(h)
}

/// Residual of the quadratic satisfied by the Selberg-like generating function.
pub fn selberg_h_residual(h: &SeriesQ, u: &Rational, v: &Rational) -> Result<SeriesQ> {
    let order = h.order();
    let den = poly(&[u + v, -(int(1) + u)], order);
    let lhs = &den * h;
    let rhs = &poly(&[int(0), u.clone()], order) - &(&one_minus_s(order) * &(h * h));
    Ok(&lhs - &rhs)
}

/// Moment series from a difference series:
/// `T(s) = s/(s-1) (ΔT(s) - T_1)`.
pub fn diff_to_moments(delta_series: &SeriesQ, first_moment_coeff: &Rational) -> Result<SeriesQ> {
    let order = delta_series.order();
    if order > 0 && !delta_series.coeff(0).is_zero() {
        return Err(Error::Domain(
            "difference series must have zero constant term".into(),
        ));
    }
    let shifted = delta_series - &c(first_moment_coeff.clone(), order);
    poly(&[int(0), int(1)], order)
        .checked_div(&s_minus_one(order))
        .map(|f| &f * &shifted)
}

/// Inverse of [`diff_to_moments`]: `ΔT(s) = T_1 - (1-s)/s · T(s)`.
pub fn moments_to_diff(moment_series: &SeriesQ) -> Result<SeriesQ> {
    let order = moment_series.order();
    if order < 2 {
        return Ok(Series::zero(order));
    }
    let t1 = moment_series.coeff(1);
    let q = (&one_minus_s(order) * moment_series).div_s()?;
    Ok(&c(t1, order - 1) - &q)
}

/// Difference series of the β=2 second correction, in the closed form
/// `(4su² + δ²u(s(u-1)² - (u+1)²)) / (4√(1-s) R^(5/2)) + uδ²/(4(u+1)³)`.
pub fn delta_t2_beta2(u: &Rational, delta: &Rational, order: usize) -> Result<SeriesQ> {
    require_u(u)?;
    let up = u + int(1);
    let um = u - int(1);
    let d2 = delta * delta;
    let num = poly(
        &[-(&d2 * u * &up * &up), int(4) * u * u + &d2 * u * &um * &um],
        order,
    );
    let den = (&one_minus_s(order).sqrt()? * &r_poly(u, order).pow_half(5)?).scale(&int(4));
    let k = c(u * &d2 / (int(4) * up.pow(3)), order);
    Ok(&num.checked_div(&den)? + &k)
}

/// Difference series of the β=1, δ=0 second correction,
/// `u(s²(u-1)² + 3us - (u+1)²) / (R^(5/2) √(1-s)) + u/(u+1)³`.
pub fn delta_t2_beta1_delta0(u: &Rational, order: usize) -> Result<SeriesQ> {
    require_u(u)?;
    let up = u + int(1);
    let um = u - int(1);
    let num = poly(&[-(u * &up * &up), int(3) * u * u, u * &um * &um], order);
    let den = &r_poly(u, order).pow_half(5)? * &one_minus_s(order).sqrt()?;
    let k = c(u / up.pow(3), order);
    Ok(&num.checked_div(&den)? + &k)
}
