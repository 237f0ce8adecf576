//! Scalar abstraction shared by the exact formulas.
//!
//! The closed forms are written once against [`Scalar`] and evaluated with
//! exact rationals, with `f64` for quick numerics, or with a truncated
//! Laurent series in a small parameter. The Laurent evaluation serves two
//! purposes: resolving removable singularities of the finite-n formulas and
//! expanding them in powers of `1/n`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    /// Multiplicative inverse, or `None` where it does not exist.
    fn checked_recip(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        match rhs.checked_recip() {
            Some(r) => Ok(self.clone() * r),
            None => Err(Error::Pole(format!("division by {rhs:?}"))),
        }
    }

    fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            Self::one().checked_div(self)?
        } else {
            self.clone()
        };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out * base.clone();
        }
        Ok(out)
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn checked_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for f64 {
    fn from_rational(q: &Rational) -> Self {
        rational_to_f64(q)
    }

    fn checked_recip(&self) -> Option<Self> {
        if *self == 0.0 || !self.is_finite() {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

/// Nearest-ish double to a rational, robust to huge numerators and denominators.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && n.abs() < 1e300 && d < 1e300 {
            return n / d;
        }
    }
    let bits = |x: &BigInt| x.bits() as i64;
    let shift = bits(q.numer()) - bits(q.denom()) - 60;
    let (n, d) = if shift > 0 {
        (q.numer().clone(), q.denom().clone() << shift as usize)
    } else {
        (q.numer().clone() << (-shift) as usize, q.denom().clone())
    };
    let m = (n / d).to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(shift as i32)
}

/// Relative number of terms kept when an exact Laurent element is inverted.
pub const DEFAULT_LAURENT_TERMS: i32 = 24;

const EXACT: i32 = i32::MAX / 4;

/// Truncated Laurent series `Σ c_i ε^(val+i) + O(ε^prec)` over the rationals.
///
/// Elements built from constants and [`Laurent::eps`] by ring operations are
/// exact; precision is only lost by division.
#[derive(Clone, Debug)]
pub struct Laurent {
    val: i32,
    coeffs: Vec<Rational>,
    prec: i32,
    terms: i32,
}

impl Laurent {
    pub fn constant(c: Rational) -> Self {
        Self::from_parts(0, vec![c], EXACT)
    }

    /// The expansion variable ε itself.
    pub fn eps() -> Self {
        Self::from_parts(1, vec![Rational::one()], EXACT)
    }

    /// `c0 + c1 ε`, the usual shape of a perturbed parameter.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::from_parts(0, vec![c0, c1], EXACT)
    }

    /// `α/ε + c`, a quantity growing linearly in `n = 1/ε`.
    pub fn growing(alpha: Rational, c: Rational) -> Self {
        Self::from_parts(-1, vec![alpha, c], EXACT)
    }

    /// Same value, but divisions of exact elements keep `terms` terms.
    pub fn with_terms(mut self, terms: i32) -> Self {
        self.terms = terms;
        self
    }

    fn from_parts(val: i32, coeffs: Vec<Rational>, prec: i32) -> Self {
        let mut out = Laurent {
            val,
            coeffs,
            prec,
            terms: DEFAULT_LAURENT_TERMS,
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        let room = (self.prec as i64 - self.val as i64).max(0) as usize;
        self.coeffs.truncate(room);
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.val = if self.prec == EXACT { 0 } else { self.prec };
            return;
        }
        self.coeffs.drain(..lead);
        self.val += lead as i32;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_exact(&self) -> bool {
        self.prec == EXACT
    }

    /// Exponent of the first nonzero term, or `None` if nothing is known to be nonzero.
    pub fn valuation(&self) -> Option<i32> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.val)
        }
    }

    /// Absolute precision: terms from `ε^prec` on are unknown.
    pub fn precision(&self) -> Option<i32> {
        if self.is_exact() {
            None
        } else {
            Some(self.prec)
        }
    }

    /// Coefficient of `ε^e`; fails if it lies beyond the known precision.
    pub fn coeff(&self, e: i32) -> Result<Rational> {
        if e >= self.prec {
            return Err(Error::Domain(format!(
                "coefficient of eps^{e} requested but series is only known below eps^{}",
                self.prec
            )));
        }
        let idx = e as i64 - self.val as i64;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[idx as usize].clone())
    }

    /// The `ε^0` term, provided no negative powers survive.
    pub fn regular_part(&self) -> Result<Rational> {
        if let Some(v) = self.valuation() {
            if v < 0 {
                return Err(Error::Pole(format!(
                    "limit diverges like eps^{v} (leading coefficient {})",
                    self.coeffs[0]
                )));
            }
        }
        self.coeff(0)
    }
}

impl PartialEq for Laurent {
    fn eq(&self, other: &Self) -> bool {
        let d = self.clone() - other.clone();
        d.coeffs.is_empty()
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Self::from_parts(0, vec![], EXACT)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty() && self.is_exact()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for Laurent {
    type Output = Laurent;

    fn add(self, rhs: Laurent) -> Laurent {
        let prec = self.prec.min(rhs.prec);
        let terms = self.terms.max(rhs.terms);
        if self.coeffs.is_empty() {
            let mut r = Self::from_parts(rhs.val, rhs.coeffs, prec);
            r.terms = terms;
            return r;
        }
        if rhs.coeffs.is_empty() {
            let mut r = Self::from_parts(self.val, self.coeffs, prec);
            r.terms = terms;
            return r;
        }
        let val = self.val.min(rhs.val);
        let end = (self.val as i64 + self.coeffs.len() as i64)
            .max(rhs.val as i64 + rhs.coeffs.len() as i64)
            .min(prec as i64);
        let len = (end - val as i64).max(0) as usize;
        let mut coeffs = vec![Rational::zero(); len];
        for (src, v) in [(&self.coeffs, self.val), (&rhs.coeffs, rhs.val)] {
            let off = (v - val) as usize;
            for (i, c) in src.iter().enumerate() {
                if off + i < len {
                    coeffs[off + i] += c;
                }
            }
        }
        let mut r = Self::from_parts(val, coeffs, prec);
        r.terms = terms;
        r
    }
}

impl Neg for Laurent {
    type Output = Laurent;

    fn neg(mut self) -> Laurent {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for Laurent {
    type Output = Laurent;

    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

fn sat(a: i32, b: i32) -> i32 {
    if a == EXACT || b == EXACT {
        EXACT
    } else {
        a.saturating_add(b)
    }
}

impl Mul for Laurent {
    type Output = Laurent;

    fn mul(self, rhs: Laurent) -> Laurent {
        let terms = self.terms.max(rhs.terms);
        let prec = match (self.valuation(), rhs.valuation()) {
            (Some(va), Some(vb)) => sat(va, rhs.prec).min(sat(vb, self.prec)),
            (None, Some(vb)) => sat(vb, self.prec),
            (Some(va), None) => sat(va, rhs.prec),
            (None, None) => sat(self.prec, rhs.prec),
        };
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            let mut r = Self::from_parts(0, vec![], prec);
            r.terms = terms;
            return r;
        }
        let val = self.val + rhs.val;
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let len = full.min((prec as i64 - val as i64).max(0) as usize);
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        let mut r = Self::from_parts(val, coeffs, prec);
        r.terms = terms;
        r
    }
}

impl Laurent {
    fn inverse(&self) -> Option<Laurent> {
        if self.coeffs.is_empty() {
            return None;
        }
        let rel = if self.is_exact() {
            self.terms
        } else {
            self.prec - self.val
        };
        let n = rel.max(1) as usize;
        let a0_inv = self.coeffs[0].recip();
        let mut inv = vec![Rational::zero(); n];
        inv[0] = a0_inv.clone();
        for m in 1..n {
            let mut acc = Rational::zero();
            for i in 1..=m.min(self.coeffs.len() - 1) {
                acc += &self.coeffs[i] * &inv[m - i];
            }
            inv[m] = -acc * &a0_inv;
        }
        // An exact monomial has an exact inverse.
        let prec = if self.is_exact() && self.coeffs.len() == 1 {
            EXACT
        } else {
            -self.val + rel
        };
        let mut r = Self::from_parts(-self.val, inv, prec);
        r.terms = self.terms;
        Some(r)
    }
}

impl Div for Laurent {
    type Output = Laurent;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Laurent) -> Laurent {
        let inv = rhs
            .inverse()
            .expect("Laurent division by a series with no known nonzero term");
        self * inv
    }
}

impl Scalar for Laurent {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(q.clone())
    }

    fn checked_recip(&self) -> Option<Self> {
        self.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_to_f64_handles_huge_values() {
        let big = Rational::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400));
        assert!((rational_to_f64(&big) - 3.0).abs() < 1e-15);
        assert_eq!(rational_to_f64(&q(1, 4)), 0.25);
    }

    #[test]
    fn laurent_inverse_of_one_minus_eps_is_geometric() {
        let x = Laurent::linear(q(1, 1), q(-1, 1)).with_terms(6);
        let inv = x.checked_recip().unwrap();
        for e in 0..6 {
            assert_eq!(inv.coeff(e).unwrap(), q(1, 1));
        }
        assert!(inv.coeff(6).is_err());
    }

    #[test]
    fn laurent_removable_pole_cancels() {
        // (e^2 + 2e) / e -> 2 + e, regular part 2
        let e = Laurent::eps();
        let num = e.clone() * e.clone() + Laurent::from_i64(2) * e.clone();
        let r = num.checked_div(&e).unwrap();
        assert_eq!(r.regular_part().unwrap(), q(2, 1));
        let pole = Laurent::one().checked_div(&e).unwrap();
        assert!(matches!(pole.regular_part(), Err(Error::Pole(_))));
    }

    #[test]
    fn laurent_growing_times_inverse() {
        // (2/e + 3) * e = 2 + 3e
        let g = Laurent::growing(q(2, 1), q(3, 1));
        let r = g * Laurent::eps();
        assert_eq!(r.coeff(0).unwrap(), q(2, 1));
        assert_eq!(r.coeff(1).unwrap(), q(3, 1));
        assert!(r.is_exact());
    }
}
