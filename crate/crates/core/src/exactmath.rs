//! Exact special-function toolbox: binomials, Pochhammer symbols, Narayana
//! numbers, Jacobi polynomials, terminating ₂F₁, generalized Bernoulli
//! polynomials and gamma-ratio coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::Series;
use crate::Rational;

/// Default highest order accepted by [`gen_bernoulli`].
pub const MAX_BERNOULLI_ORDER: usize = 8;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Binomial coefficient for integer arguments, extended to negative `n`
/// through `C(-m, k) = (-1)^k C(m+k-1, k)`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        if k > n {
            return BigInt::zero();
        }
        let k = k.min(n - k);
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        return acc;
    }
    let m = -n;
    let v = binom(m + k - 1, k);
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

pub fn binom_ext(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom(n, k))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Pochhammer symbol `(x)_(m) = Γ(x+m)/Γ(x)`.
///
/// For negative `m` this is `1/((x-1)(x-2)…(x+m))`; a vanishing factor is a
/// pole of the gamma ratio and is reported rather than turned into infinity.
pub fn pochhammer<T: Scalar>(x: &T, m: i64) -> Result<T> {
    let mut acc = T::one();
    if m >= 0 {
        for i in 0..m {
            acc = acc * (x.clone() + T::from_i64(i));
        }
        return Ok(acc);
    }
    for i in 1..=(-m) {
        acc = acc * (x.clone() - T::from_i64(i));
    }
    T::one()
        .checked_div(&acc)
        .map_err(|_| Error::Pole(format!("({x:?})_({m}) hits a pole of the gamma ratio")))
}

/// Narayana number `N(k,j)`; negative `k` selects the extension
/// `N(-k,j) = (1/k) C(k+j,k-1) C(k+j-1,k-1)`.
pub fn narayana(k: i64, j: i64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Domain("narayana: k must be nonzero".into()));
    }
    if k > 0 {
        Ok(Rational::new(binom(k, j) * binom(k, j - 1), k.into()))
    } else {
        let k = -k;
        Ok(Rational::new(
            binom(k + j, k - 1) * binom(k + j - 1, k - 1),
            k.into(),
        ))
    }
}

/// Narayana polynomial `N_k(u) = (1/k) Σ_j C(k,j) C(k,j-1) u^j`.
pub fn narayana_poly<T: Scalar>(k: i64, u: &T) -> Result<T> {
    if k < 1 {
        return Err(Error::Domain(format!("narayana_poly: k={k} < 1")));
    }
    let mut acc = T::zero();
    let mut upow = u.clone();
    for j in 1..=k {
        acc = acc + T::from_bigint(&(binom(k, j) * binom(k, j - 1))) * upow.clone();
        upow = upow * u.clone();
    }
    acc.checked_div(&T::from_i64(k))
}

/// Dense polynomial, index = degree, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type PolyQ = Poly<Rational>;

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c0 + c1 x`
    pub fn linear(c0: T, c1: T) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(T::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

/// `C(n+α, n-j)` for a general parameter α, as `(α+j+1)_(n-j) / (n-j)!`.
fn binom_shifted<T: Scalar>(n: i64, alpha: &T, j: i64) -> Result<T> {
    let m = n - j;
    if m < 0 {
        return Ok(T::zero());
    }
    pochhammer(&(alpha.clone() + T::from_i64(j + 1)), m)?
        .checked_div(&T::from_bigint(&factorial(m as u64)))
}

/// Jacobi polynomial `P_n^(α,β)` as a polynomial in x.
///
/// Negative degrees give the zero polynomial, the convention that keeps
/// formulas such as `P_{k-2}` valid at `k = 1`.
pub fn jacobi_polynomial<T: Scalar>(n: i64, alpha: &T, beta: &T) -> Result<Poly<T>> {
    if n < 0 {
        return Ok(Poly::zero());
    }
    let half = T::one().checked_div(&T::from_i64(2))?;
    let xm = Poly::linear(-half.clone(), half.clone());
    let xp = Poly::linear(half.clone(), half);
    let mut acc = Poly::zero();
    for j in 0..=n {
        let c = binom_shifted(n, alpha, j)? * binom_shifted(n, beta, n - j)?;
        let term = &xm.pow(j as u32) * &xp.pow((n - j) as u32);
        acc = &acc + &term.scale(&c);
    }
    Ok(acc)
}

/// Value of `P_n^(α,β)(x)`; zero for negative `n`.
pub fn jacobi_p<T: Scalar>(n: i64, alpha: &T, beta: &T, x: &T) -> Result<T> {
    if n < 0 {
        return Ok(T::zero());
    }
    let two = T::from_i64(2);
    let xm = (x.clone() - T::one()).checked_div(&two)?;
    let xp = (x.clone() + T::one()).checked_div(&two)?;
    let mut acc = T::zero();
    for j in 0..=n {
        let c = binom_shifted(n, alpha, j)? * binom_shifted(n, beta, n - j)?;
        acc = acc + c * xm.powi(j)? * xp.powi(n - j)?;
    }
    Ok(acc)
}

/// `P_n^(α,β)(x)` for integer parameters; negative degree is a domain error.
pub fn jacobi_poly(n: i64, alpha: i64, beta: i64, x: &Rational) -> Result<Rational> {
    if n < 0 {
        return Err(Error::Domain(format!("jacobi_poly: degree n={n} < 0")));
    }
    jacobi_p(n, &int(alpha), &int(beta), x)
}

fn nonpositive_integer(x: &Rational) -> Option<i64> {
    if x.is_integer() && !x.is_positive() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Terminating Gauss hypergeometric sum `Σ (a)_j (b)_j / (c)_j z^j / j!`.
pub fn hyp2f1_terminating(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Rational,
) -> Result<Rational> {
    let len = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(x), Some(y)) => (-x).min(-y),
        (Some(x), None) | (None, Some(x)) => -x,
        (None, None) => {
            return Err(Error::NonTerminating(format!(
                "2F1({a}, {b}; {c}; z) needs a or b to be a non-positive integer"
            )))
        }
    };
    let mut term = Rational::one();
    let mut acc = Rational::one();
    for j in 0..len {
        let denom = (c + int(j)) * int(j + 1);
        if denom.is_zero() {
            return Err(Error::Pole(format!(
                "2F1 lower parameter c={c} reaches a non-positive integer"
            )));
        }
        term = term * (a + int(j)) * (b + int(j)) * z / denom;
        acc += &term;
    }
    Ok(acc)
}

/// Generalized Bernoulli polynomial `B_i^(γ)(α)`, the coefficient of
/// `t^i/i!` in `(t/(e^t-1))^γ e^(αt)`.
pub fn gen_bernoulli(i: usize, gamma: &Rational, alpha: &Rational) -> Result<Rational> {
    gen_bernoulli_with_max(i, gamma, alpha, MAX_BERNOULLI_ORDER)
}

pub fn gen_bernoulli_with_max(
    i: usize,
    gamma: &Rational,
    alpha: &Rational,
    max_order: usize,
) -> Result<Rational> {
    Ok(gen_bernoulli_all(i, gamma, alpha, max_order)?.swap_remove(i))
}

/// `B_0 … B_order` in one series pass.
fn gen_bernoulli_all(
    order: usize,
    gamma: &Rational,
    alpha: &Rational,
    max_order: usize,
) -> Result<Vec<Rational>> {
    if order > max_order {
        return Err(Error::Domain(format!(
            "Bernoulli order {order} exceeds the configured maximum {max_order}"
        )));
    }
    let len = order + 1;
    // (e^t - 1)/t = Σ t^m/(m+1)!
    let expm1_over_t = Series::new(
        (0..len)
            .map(|m| Rational::new(1.into(), factorial(m as u64 + 1)))
            .collect(),
    );
    let log_kernel = -&expm1_over_t.log()?;
    let mut exponent = log_kernel.scale(gamma);
    if len > 1 {
        exponent.set_coeff(1, exponent.coeff(1) + alpha);
    }
    let e = exponent.exp()?;
    Ok((0..len)
        .map(|m| e.coeff(m) * Rational::from_integer(factorial(m as u64)))
        .collect())
}

/// Coefficients `c_i` with `Γ(z+α)/Γ(z+β) ~ z^(α-β) Σ c_i z^(-i)`.
pub fn gamma_ratio_coeffs(
    alpha: &Rational,
    beta: &Rational,
    order: usize,
) -> Result<Vec<Rational>> {
    let g = alpha - beta + Rational::one();
    let b = gen_bernoulli_all(order, &g, alpha, MAX_BERNOULLI_ORDER)?;
    let mut out = Vec::with_capacity(order + 1);
    for (i, bi) in b.into_iter().enumerate() {
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        let p: Rational = pochhammer(&(beta - alpha), i as i64)?;
        out.push(sign * p / Rational::from_integer(factorial(i as u64)) * bi);
    }
    Ok(out)
}

/// Exact square root of a rational, if it has one.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom_ext(5, 2), int(10));
        assert_eq!(binom_ext(-3, 2), int(6));
        assert_eq!(binom_ext(4, -1), int(0));
        assert_eq!(binom_ext(3, 5), int(0));
        assert_eq!(binom_ext(-1, 3), int(-1));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(3), 2).unwrap(), int(12));
        assert_eq!(pochhammer(&int(3), -1).unwrap(), q(1, 2));
        assert_eq!(pochhammer(&q(1, 2), 3).unwrap(), q(15, 8));
        assert!(matches!(pochhammer(&int(2), -2), Err(Error::Pole(_))));
        assert_eq!(pochhammer(&int(7), 0).unwrap(), int(1));
    }

    #[test]
    fn narayana_examples() {
        assert_eq!(narayana(3, 2).unwrap(), int(3));
        assert_eq!(narayana(2, 0).unwrap(), int(0));
        assert_eq!(narayana(-2, 1).unwrap(), int(3));
        assert!(narayana(0, 1).is_err());
        assert_eq!(narayana_poly(1, &int(5)).unwrap(), int(5));
        assert_eq!(narayana_poly(2, &int(1)).unwrap(), int(2));
        assert_eq!(narayana_poly(3, &int(2)).unwrap(), int(22));
        assert!(narayana_poly(0, &int(2)).is_err());
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_poly(0, 2, 2, &int(7)).unwrap(), int(1));
        assert_eq!(jacobi_poly(1, 1, 0, &int(3)).unwrap(), int(5));
        assert_eq!(jacobi_poly(4, 0, 0, &int(1)).unwrap(), int(1));
        assert!(jacobi_poly(-1, 0, 0, &int(1)).is_err());
        let p = jacobi_polynomial(3, &int(1), &int(2)).unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.eval(&q(2, 7)), jacobi_poly(3, 1, 2, &q(2, 7)).unwrap());
    }

    #[test]
    fn hyp2f1_examples() {
        assert_eq!(
            hyp2f1_terminating(&int(0), &int(5), &int(2), &int(9)).unwrap(),
            int(1)
        );
        assert_eq!(
            hyp2f1_terminating(&int(-1), &int(1), &int(1), &q(1, 2)).unwrap(),
            q(1, 2)
        );
        assert!(matches!(
            hyp2f1_terminating(&q(1, 2), &int(1), &int(1), &q(1, 2)),
            Err(Error::NonTerminating(_))
        ));
        assert!(matches!(
            hyp2f1_terminating(&int(-3), &int(1), &int(-1), &q(1, 2)),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(gen_bernoulli(0, &q(7, 3), &q(-2, 5)).unwrap(), int(1));
        assert_eq!(gen_bernoulli(1, &int(1), &int(0)).unwrap(), q(-1, 2));
        // ordinary Bernoulli numbers
        assert_eq!(gen_bernoulli(2, &int(1), &int(0)).unwrap(), q(1, 6));
        assert_eq!(gen_bernoulli(4, &int(1), &int(0)).unwrap(), q(-1, 30));
        assert_eq!(gen_bernoulli(8, &int(1), &int(0)).unwrap(), q(-1, 30));
        assert!(gen_bernoulli(9, &int(1), &int(0)).is_err());
        // B_2^(γ)(x) = x² - γx + γ(3γ-1)/12
        let (g, x) = (int(2), int(1));
        let expect = &x * &x - &g * &x + &g * (int(3) * &g - int(1)) / int(12);
        assert_eq!(gen_bernoulli(2, &g, &x).unwrap(), expect);
    }

    #[test]
    fn gamma_ratio_examples() {
        let c = gamma_ratio_coeffs(&q(3, 7), &q(3, 7), 4).unwrap();
        assert_eq!(c, vec![int(1), int(0), int(0), int(0), int(0)]);
        assert_eq!(gamma_ratio_coeffs(&int(1), &int(0), 2).unwrap()[1], int(0));
        // Γ(z+2)/Γ(z) = z² + z exactly
        let c = gamma_ratio_coeffs(&int(2), &int(0), 3).unwrap();
        assert_eq!(c, vec![int(1), int(1), int(0), int(0)]);
    }

    #[test]
    fn rational_sqrt_examples() {
        assert_eq!(rational_sqrt(&q(9, 4)), Some(q(3, 2)));
        assert_eq!(rational_sqrt(&q(2, 1)), None);
        assert_eq!(rational_sqrt(&q(-1, 1)), None);
    }
}
