//! Truncated formal power series in `s` and the closed-form generating
//! functions evaluated as such series.

pub mod genfun;

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactmath::rational_sqrt;
use crate::scalar::Scalar;
use crate::Rational;

pub use genfun::{diff_to_moments, genfun_eval, moments_to_diff, GenFun, GenFunId};

/// Default truncation order for generating-function work.
pub const DEFAULT_ORDER: usize = 32;

/// `Σ_{i<order} c_i s^i + O(s^order)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

pub type SeriesQ = Series<Rational>;

impl<T: Scalar> Series<T> {
    /// Series whose truncation order is the number of coefficients given.
    pub fn new(coeffs: Vec<T>) -> Self {
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![T::zero(); order],
        }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut out = Self::zero(order);
        if order > 0 {
            out.coeffs[0] = c;
        }
        out
    }

    /// The variable `s`.
    pub fn var(order: usize) -> Self {
        Self::from_poly(&[T::zero(), T::one()], order)
    }

    /// Polynomial `Σ p_i s^i` truncated to `order`.
    pub fn from_poly(p: &[T], order: usize) -> Self {
        let mut out = Self::zero(order);
        for (i, c) in p.iter().enumerate().take(order) {
            out.coeffs[i] = c.clone();
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `s^i`. Panics beyond the truncation order, where the
    /// coefficient is unknown.
    pub fn coeff(&self, i: usize) -> T {
        assert!(
            i < self.coeffs.len(),
            "coefficient s^{i} is beyond truncation order {}",
            self.coeffs.len()
        );
        self.coeffs[i].clone()
    }

    pub fn set_coeff(&mut self, i: usize, c: T) {
        self.coeffs[i] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Substitute `s -> c s`.
    pub fn rescale_var(&self, c: &T) -> Self {
        let mut p = T::one();
        let mut out = Vec::with_capacity(self.order());
        for a in &self.coeffs {
            out.push(a.clone() * p.clone());
            p = p * c.clone();
        }
        Series { coeffs: out }
    }

    /// Multiply by `s`; the truncation order is unchanged.
    pub fn mul_s(&self) -> Self {
        let mut out = Self::zero(self.order());
        for i in 1..self.order() {
            out.coeffs[i] = self.coeffs[i - 1].clone();
        }
        out
    }

    /// Divide by `s`; needs a zero constant term and loses one order.
    pub fn div_s(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Ok(self.clone()),
            Some(c) if c.is_zero() => Ok(Series {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => Err(Error::DivisionByZeroSeries),
        }
    }

    pub fn derivative(&self) -> Self {
        Series {
            coeffs: (1..self.order())
                .map(|i| self.coeffs[i].clone() * T::from_i64(i as i64))
                .collect(),
        }
    }

    /// Antiderivative with zero constant term, gaining one order.
    pub fn integral(&self) -> Result<Self> {
        let mut out = vec![T::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c.checked_div(&T::from_i64(i as i64 + 1))?);
        }
        Ok(Series { coeffs: out })
    }

    pub fn recip(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let a0 = self.coeffs[0]
            .checked_recip()
            .ok_or(Error::DivisionByZeroSeries)?;
        let mut inv = vec![T::zero(); n];
        inv[0] = a0.clone();
        for m in 1..n {
            let mut acc = T::zero();
            for i in 1..=m {
                acc = acc + self.coeffs[i].clone() * inv[m - i].clone();
            }
            inv[m] = -(acc * a0.clone());
        }
        Ok(Series { coeffs: inv })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("exp needs a zero constant term".into()));
        }
        let mut e = vec![T::zero(); n];
        e[0] = T::one();
        for m in 1..n {
            let mut acc = T::zero();
            for i in 1..=m {
                acc = acc + T::from_i64(i as i64) * self.coeffs[i].clone() * e[m - i].clone();
            }
            e[m] = acc.checked_div(&T::from_i64(m as i64))?;
        }
        Ok(Series { coeffs: e })
    }

    /// `log` of a series with constant term one.
    pub fn log(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0] != T::one() {
            return Err(Error::Domain("log needs constant term 1".into()));
        }
        let q = self.derivative().checked_div(&self.truncate(n - 1))?;
        Ok(q.integral()?.truncate(n))
    }

    /// Square root with a prescribed square root `root` of the constant term.
    pub fn sqrt_with_root(&self, root: T) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let two_r = root.clone() + root.clone();
        let inv = two_r.checked_recip().ok_or(Error::DivisionByZeroSeries)?;
        let mut y = vec![T::zero(); n];
        y[0] = root;
        for m in 1..n {
            let mut acc = self.coeffs[m].clone();
            for i in 1..m {
                acc = acc - y[i].clone() * y[m - i].clone();
            }
            y[m] = acc * inv.clone();
        }
        Ok(Series { coeffs: y })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(T::one(), self.order());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl SeriesQ {
    /// The square root whose constant term is the positive rational root.
    pub fn sqrt(&self) -> Result<Self> {
        if self.order() == 0 {
            return Ok(self.clone());
        }
        let c0 = &self.coeffs[0];
        let root = rational_sqrt(c0)
            .filter(|r| *r != Rational::from_integer(0.into()))
            .ok_or_else(|| Error::NotAPerfectSquareConstant(c0.to_string()))?;
        self.sqrt_with_root(root)
    }

    /// `x^(m/2)` for an integer `m`, through the positive square root.
    pub fn pow_half(&self, m: i32) -> Result<Self> {
        let r = self.sqrt()?;
        let p = r.pow(m.unsigned_abs());
        if m < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: &Series<T>) -> Series<T> {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: &Series<T>) -> Series<T> {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Series<T> {
    type Output = Series<T>;

    fn neg(self) -> Series<T> {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;

    fn mul(self, rhs: &Series<T>) -> Series<T> {
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs: out }
    }
}

/// Entry point matching the four basic ring operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn series_arith<T: Scalar>(
    lhs: &Series<T>,
    rhs: &Series<T>,
    kind: ArithKind,
) -> Result<Series<T>> {
    Ok(match kind {
        ArithKind::Add => lhs + rhs,
        ArithKind::Sub => lhs - rhs,
        ArithKind::Mul => lhs * rhs,
        ArithKind::Div => lhs.checked_div(rhs)?,
    })
}

pub fn series_sqrt(x: &SeriesQ) -> Result<SeriesQ> {
    x.sqrt()
}
