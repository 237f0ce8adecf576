//! Independent routes to the expansion coefficients: the finite-n Jacobi
//! formulas evaluated over Laurent series in `ε = 1/n`, and polynomial
//! extrapolation in `1/n` of exact Laguerre moments.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{int, q};
use crate::moments::{check_beta, finite};
use crate::scalar::Laurent;
use crate::Rational;

/// A parameter `slope·n + offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearInN {
    pub slope: Rational,
    pub offset: Rational,
}

impl LinearInN {
    pub fn new(slope: Rational, offset: Rational) -> Self {
        LinearInN { slope, offset }
    }

    pub fn fixed(offset: Rational) -> Self {
        LinearInN {
            slope: Rational::zero(),
            offset,
        }
    }

    pub fn at(&self, n: i64) -> Rational {
        &self.slope * int(n) + &self.offset
    }

    fn laurent(&self, terms: i32) -> Laurent {
        Laurent::growing(self.slope.clone(), self.offset.clone()).with_terms(terms)
    }
}

/// First `order` coefficients `c_p` of `n^{-1} M_J(k,n) ~ Σ c_p n^{-p}` for
/// Jacobi parameters linear in `n`.
pub fn jacobi_expansion(
    beta: i64,
    k: i64,
    a: &LinearInN,
    b: &LinearInN,
    order: usize,
) -> Result<Vec<Rational>> {
    check_beta(beta)?;
    // Cancellations between the large Pochhammer factors eat leading terms.
    let terms = order as i32 + 4 * k as i32 + 8;
    let n = Laurent::growing(Rational::one(), Rational::zero()).with_terms(terms);
    let (la, lb) = (a.laurent(terms), b.laurent(terms));
    let m = match beta {
        2 => finite::jacobi2(k, &n, &la, &lb)?,
        1 => finite::jacobi1(k, &n, &la, &lb)?,
        _ => finite::jacobi4(k, &n, &la, &lb)?,
    };
    let scaled = m * Laurent::eps();
    (0..order as i32).map(|p| scaled.coeff(p)).collect()
}

/// Solves `Σ_p c_p h_i^p = g_i` exactly.
fn vandermonde_solve(h: &[Rational], g: &[Rational]) -> Result<Vec<Rational>> {
    let m = h.len();
    let mut rows: Vec<Vec<Rational>> = h
        .iter()
        .zip(g)
        .map(|(hi, gi)| {
            let mut row: Vec<Rational> = Vec::with_capacity(m + 1);
            let mut pw = Rational::one();
            for _ in 0..m {
                row.push(pw.clone());
                pw *= hi;
            }
            row.push(gi.clone());
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or_else(|| Error::Domain("singular extrapolation system".into()))?;
        rows.swap(col, piv);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    Ok(rows.into_iter().map(|r| r[m].clone()).collect())
}

/// Approximate `D_{k,p}^{(β)}(w)` for `p < order` by fitting a polynomial of
/// degree `points-1` in `1/n` through `n^{k-1} M_L(-k,n)` at
/// `n = n0, n0+step, ...` with `b = n(w-1) + 2/β - 1`. The error of `c_p`
/// is `O(n0^{p-points})`; for β=1 the omitted exponentially small term adds
/// to it.
pub fn delay_expansion(
    beta: i64,
    k: i64,
    w: &Rational,
    order: usize,
    n0: i64,
    points: usize,
) -> Result<Vec<Rational>> {
    check_beta(beta)?;
    if points < order {
        return Err(Error::ParameterDomain(format!(
            "need at least {order} extrapolation points, got {points}"
        )));
    }
    let step = if beta == 1 { 2 } else { 1 };
    let n0 = if beta == 1 { n0 + n0 % 2 } else { n0 };
    let shift = q(2, beta) - int(1);
    let mut h = Vec::with_capacity(points);
    let mut g = Vec::with_capacity(points);
    for i in 0..points as i64 {
        let n = n0 + step * i;
        let b = int(n) * (w - int(1)) + &shift;
        let m = match beta {
            2 => finite::laguerre2(k, n, &b)?,
            1 => finite::laguerre1(k, n, &b)?,
            _ => finite::laguerre4(k, n, &b)?,
        };
        h.push(q(1, n));
        g.push(m * num_traits::pow(int(n), (k - 1) as usize));
    }
    let mut c = vandermonde_solve(&h, &g)?;
    c.truncate(order);
    Ok(c)
}
