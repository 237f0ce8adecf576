//! Finite-n closed forms, generic over the scalar so the same code serves
//! exact evaluation, removable-singularity limits and `1/n` expansions.

use crate::error::Result;
use crate::exactmath::{binom, pochhammer};
use crate::scalar::Scalar;

fn t<T: Scalar>(x: i64) -> T {
    T::from_i64(x)
}

fn half<T: Scalar>(x: T) -> Result<T> {
    x.checked_div(&t(2))
}

/// `1/(x)_(m)`; for `m <= 0` this is the pole-free product `(x+m)_(-m)`.
fn rpoch<T: Scalar>(x: &T, m: i64) -> Result<T> {
    if m <= 0 {
        pochhammer(&(x.clone() + t(m)), -m)
    } else {
        T::one().checked_div(&pochhammer(x, m)?)
    }
}

fn bin<T: Scalar>(n: i64, k: i64) -> T {
    T::from_bigint(&binom(n, k))
}

/// Coefficient `U_{n,k,j}` of the β=2 difference formula.
pub fn u_coeff<T: Scalar>(a: &T, b: &T, n: &T, k: i64, j: i64) -> Result<T> {
    let ab = a.clone() + b.clone();
    let two_n = n.clone() + n.clone();
    let num = (ab.clone() + two_n.clone() - t(2 * j) + t(k + 1))
        * pochhammer(&(ab.clone() + n.clone()), k - j + 1)?
        * pochhammer(&(a.clone() + n.clone() - t(j) + t(1)), j)?
        * pochhammer(&(b.clone() + n.clone()), k - j + 1)?;
    let den = pochhammer(&(ab.clone() + two_n.clone() - t(j)), k + 2)?
        * pochhammer(&(ab + two_n - t(j) + t(1)), k)?;
    (num * rpoch(&(n.clone() + t(1)), -j)?).checked_div(&den)
}

/// `ΔM(k,n) = M(k,n) - M(k+1,n)` for β=2 Jacobi.
pub fn jacobi2_diff<T: Scalar>(k: i64, n: &T, a: &T, b: &T) -> Result<T> {
    let mut acc = T::zero();
    for j in 0..=k {
        let c = binom(k, j) * binom(k, j - 1);
        if c == 0.into() {
            continue;
        }
        acc = acc + T::from_bigint(&c) * u_coeff(a, b, n, k, j)?;
    }
    acc.checked_div(&t(k))
}

/// Aomoto's first moment `n(b+n)/(a+b+2n)`.
pub fn aomoto<T: Scalar>(n: &T, a: &T, b: &T) -> Result<T> {
    (n.clone() * (b.clone() + n.clone()))
        .checked_div(&(a.clone() + b.clone() + n.clone() + n.clone()))
}

/// β=2 Jacobi moment `M(k,n) = Aomoto - Σ_{j<k} ΔM(j,n)`.
pub fn jacobi2<T: Scalar>(k: i64, n: &T, a: &T, b: &T) -> Result<T> {
    let mut acc = aomoto(n, a, b)?;
    for j in 1..k {
        acc = acc - jacobi2_diff(j, n, a, b)?;
    }
    Ok(acc)
}

/// Same value as [`jacobi2`], summed from the largest difference down and
/// with the inner Narayana-weighted sums taken in reverse order.
pub fn jacobi2_reversed<T: Scalar>(k: i64, n: &T, a: &T, b: &T) -> Result<T> {
    let mut diffs = T::zero();
    for jj in (1..k).rev() {
        let mut inner = T::zero();
        for j in (0..=jj).rev() {
            let c = binom(jj, j) * binom(jj, j - 1);
            inner = inner + T::from_bigint(&c) * u_coeff(a, b, n, jj, j)?;
        }
        diffs = diffs + inner.checked_div(&t(jj))?;
    }
    Ok(aomoto(n, a, b)? - diffs)
}

/// `S^{a,b}_{i,j}(k,n)` of the β=1 and β=4 Jacobi decompositions.
pub fn s_jacobi<T: Scalar>(a: &T, b: &T, i: i64, j: i64, k: i64, n: &T) -> Result<T> {
    let a2 = a.clone() + a.clone();
    let b2 = b.clone() + b.clone();
    let n2 = n.clone() + n.clone();
    let n4 = n2.clone() + n2.clone();
    let num = T::from_i64(2).powi(4 * j - 3)?
        * pochhammer(&(a2.clone() + n2.clone() - t(i) - t(2 * j) + t(1)), i)?
        * pochhammer(&(b2.clone() + n2.clone()), k - i - 2 * j + 1)?
        * pochhammer(&(a2.clone() + b2.clone() + n2.clone()), k - i - 2 * j + 1)?;
    let inv_den = rpoch(&(n2 - t(2 * j) + t(1)), -i)?
        * rpoch(&(n.clone() + t(1)), -j)?
        * rpoch(&(a.clone() + n.clone() + t(1)), -j)?
        * rpoch(&(b.clone() + n.clone()), 1 - j)?
        * rpoch(&(a.clone() + b.clone() + n.clone()), 1 - j)?;
    let base = a2 + b2 + n4;
    let f_num = (base.clone() - t(4 * j) + t(1)) * (base.clone() - t(2 * i) - t(4 * j) + t(k + 1));
    let f_den = pochhammer(&(base.clone() - t(i) - t(2 * j) + t(1)), 1 + k)?
        * pochhammer(&(base - t(i) - t(4 * j) + t(1)), 1 + k)?;
    (num * inv_den * f_num).checked_div(&f_den)
}

/// `I_J(k,n)` of the β=1 Jacobi decomposition.
pub fn i_jacobi<T: Scalar>(k: i64, n: &T, a: &T, b: &T) -> Result<T> {
    let ab = a.clone() + b.clone();
    let two_n = n.clone() + n.clone();
    let mut acc = T::zero();
    for j in 0..=k {
        let num = bin::<T>(2 * k, 2 * j)
            * (ab.clone() + two_n.clone() - t(4 * j) - t(1) + t(2 * k))
            * pochhammer(&half(ab.clone() + n.clone())?, k - j)?
            * pochhammer(&half(b.clone() + n.clone())?, k - j)?;
        let inv_den =
            rpoch(&half(a.clone() + n.clone() + t(1))?, -j)? * rpoch(&half(n.clone() + t(1))?, -j)?;
        let den = pochhammer(&(ab.clone() + two_n.clone() - t(2 * j) - t(1)), 2 * k + 1)?;
        acc = acc + (num * inv_den).checked_div(&den)?;
    }
    Ok(acc * T::from_i64(4).powi(k)?)
}

/// β=1 Jacobi moment.
pub fn jacobi1<T: Scalar>(k: i64, n: &T, a: &T, b: &T) -> Result<T> {
    let n1 = n.clone() - t(1);
    let mut acc = jacobi2(k, &n1, a, b)?;
    let ah = half(a.clone())?;
    let bh = half(b.clone())?;
    let nh = half(n1)?;
    let mut s = T::zero();
    for j in 1..=k / 2 {
        for i in 0..=(k - 2 * j) {
            let c = binom(k, i) * binom(k, i + 2 * j);
            s = s + T::from_bigint(&c) * s_jacobi(&ah, &bh, i, j, k, &nh)?;
        }
    }
    acc = acc - t::<T>(2) * s;
    Ok(acc + i_jacobi(k, n, a, b)?)
}

/// β=4 Jacobi moment.
pub fn jacobi4<T: Scalar>(k: i64, n: &T, a: &T, b: &T) -> Result<T> {
    let two = t::<T>(2);
    let m2 = jacobi2(
        k,
        &(two.clone() * n.clone()),
        &(two.clone() * a.clone()),
        &(two.clone() * b.clone()),
    )?;
    let mut acc = half(m2)?;
    for j in 1..=k / 2 {
        for i in 0..=(k - 2 * j) {
            let c = binom(k, i) * binom(k, i + 2 * j);
            acc = acc - T::from_bigint(&c) * s_jacobi(a, b, i, j, k, n)?;
        }
    }
    Ok(acc)
}

/// β=2 Laguerre negative moment `⟨Σ x^(-k)⟩`.
pub fn laguerre2<T: Scalar>(k: i64, n: i64, b: &T) -> Result<T> {
    let nn = t::<T>(n);
    let bn = b.clone() + nn.clone();
    let mut acc = T::zero();
    for j in 0..n {
        let c = binom(k + j, k - 1) * binom(k + j - 1, k - 1);
        let term = pochhammer(&bn, -k - j)? * rpoch(&(nn.clone() + t(1)), -j - 1)?;
        acc = acc + T::from_bigint(&c) * term;
    }
    acc.checked_div(&t(k))
}

/// `S^b_{i,j}(-k,n)` of the β=1 and β=4 Laguerre decompositions.
pub fn s_laguerre<T: Scalar>(b: &T, i: i64, j: i64, k: i64, n: &T) -> Result<T> {
    let b2 = b.clone() + b.clone();
    let n2 = n.clone() + n.clone();
    let num = pochhammer(&(b2 + n2.clone()), -k - i - 2 * j + 1)?
        * pochhammer(&(n2 - t(i) - t(2 * j) + t(1)), i)?;
    let inv_den = T::from_i64(2).powi(k + 2 * j - 2)?
        * rpoch(&(n.clone() + t(1)), -j)?
        * rpoch(&(b.clone() + n.clone()), 1 - j)?;
    Ok(num * inv_den)
}

/// `I_L(-k,n)` without the exponentially small remainder.
pub fn i_laguerre<T: Scalar>(k: i64, n: i64, b: &T) -> Result<T> {
    let nn = t::<T>(n);
    let mut acc = T::zero();
    for j in 0..(n / 2) {
        let num = bin::<T>(2 * k + 2 * j - 1, 2 * j)
            * pochhammer(&half(b.clone() + nn.clone())?, -k - j)?;
        acc = acc + num * rpoch(&half(nn.clone() + t(1))?, -j)?;
    }
    Ok(acc * T::from_i64(2).powi(-k)?)
}

/// β=1 Laguerre negative moment, even n, without the exponentially small term.
pub fn laguerre1<T: Scalar>(k: i64, n: i64, b: &T) -> Result<T> {
    let mut acc = laguerre2(k, n - 1, b)?;
    let bh = half(b.clone())?;
    let nh = half(t::<T>(n - 1))?;
    let mut s = T::zero();
    for j in 1..(n / 2) {
        for i in 0..=(n - 2 * j) {
            let c = binom(k + i - 1, k - 1) * binom(k + i + 2 * j - 1, k - 1);
            s = s + T::from_bigint(&c) * s_laguerre(&bh, i, j, k, &nh)?;
        }
    }
    acc = acc - T::from_i64(2).powi(1 - k)? * s;
    Ok(acc + i_laguerre(k, n, b)?)
}

/// β=4 Laguerre negative moment.
pub fn laguerre4<T: Scalar>(k: i64, n: i64, b: &T) -> Result<T> {
    let mut acc = T::from_i64(2).powi(k - 1)? * laguerre2(k, 2 * n, &(t::<T>(2) * b.clone()))?;
    let nn = t::<T>(n);
    for j in 1..=n {
        for i in 0..=(2 * n - 2 * j) {
            let c = binom(k + i - 1, k - 1) * binom(k + i + 2 * j - 1, k - 1);
            acc = acc - T::from_bigint(&c) * s_laguerre(b, i, j, k, &nn)?;
        }
    }
    Ok(acc)
}
