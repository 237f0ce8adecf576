//! What is left of the exact finite-n moments after subtracting the
//! expansion through `n^{-2}`.

use rayon::prelude::*;
use rug::Float;

use crate::error::{Error, Result};
use crate::exactmath::{int, q};
use crate::moments::{check_beta, jacobi_a, moment_jacobi, moment_laguerre_neg, to_float_prec};
use crate::Rational;

use super::{delay_coeff, trans_coeff, MAX_ORDER};

/// Decimal digits of the floats the remainders are reported in.
pub const REMAINDER_DIGITS: u32 = 50;

/// Binary precision carrying [`REMAINDER_DIGITS`].
fn remainder_bits() -> u32 {
    (REMAINDER_DIGITS as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 4
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScanTarget {
    /// `a` fixed by `(β, δ)`, `b = (u-1)n`.
    Transmission {
        beta: i64,
        delta: Rational,
        u: Rational,
    },
    /// `b = n(w-1) + 2/β - 1`.
    Delay { beta: i64, w: Rational },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RemainderRow {
    pub n: i64,
    pub remainder: Float,
    /// `n³ · remainder`.
    pub scaled: Float,
    /// True when the conjectured second correction was subtracted.
    pub conjecture: bool,
}

fn row(target: &ScanTarget, k: i64, n: i64, coeffs: &[Rational]) -> Result<RemainderRow> {
    let nq = int(n);
    let scaled_moment = match target {
        ScanTarget::Transmission { beta, delta, u } => {
            let a = jacobi_a(*beta, delta);
            let b = (u - int(1)) * &nq;
            moment_jacobi(*beta, k, n, &a, &b)?.value / &nq
        }
        ScanTarget::Delay { beta, w } => {
            let b = &nq * (w - int(1)) + q(2, *beta) - int(1);
            moment_laguerre_neg(*beta, k, n, &b)?.value
                * num_traits::pow(nq.clone(), (k - 1) as usize)
        }
    };
    let expansion: Rational = coeffs
        .iter()
        .enumerate()
        .map(|(p, c)| c / num_traits::pow(nq.clone(), p))
        .sum();
    let exact = scaled_moment - expansion;
    let prec = remainder_bits();
    let remainder = to_float_prec(&exact, prec);
    let scaled = remainder.clone() * Float::with_val(prec, n).square() * n;
    Ok(RemainderRow {
        n,
        remainder,
        scaled,
        conjecture: false,
    })
}

/// Remainders `n^{-1}M_J(k,n) - Σ_{p≤2} T_{k,p} n^{-p}` (transmission) or
/// `n^{k-1}M_L(-k,n) - Σ_{p≤2} D_{k,p} n^{-p}` (delay) for each `n`, in order.
/// The subtraction is exact; only the result is rounded.
pub fn remainder_scan(target: &ScanTarget, k: i64, n_list: &[i64]) -> Result<Vec<RemainderRow>> {
    let (coeffs, conjecture) = match target {
        ScanTarget::Transmission { beta, delta, u } => {
            check_beta(*beta)?;
            let mut cs = Vec::new();
            let mut conj = false;
            for p in 0..=MAX_ORDER {
                let c = trans_coeff(*beta, delta, k, p, u)?;
                conj |= c.conjecture;
                cs.push(c.value);
            }
            (cs, conj)
        }
        ScanTarget::Delay { beta, w } => {
            check_beta(*beta)?;
            let cs = (0..=MAX_ORDER)
                .map(|p| delay_coeff(*beta, k, p, w))
                .collect::<Result<Vec<_>>>()?;
            (cs, false)
        }
    };
    if let Some(&bad) = n_list.iter().find(|&&n| n < 1) {
        return Err(Error::ParameterDomain(format!("n must be >= 1, got {bad}")));
    }
    let rows: Vec<Result<RemainderRow>> = n_list
        .par_iter()
        .map(|&n| row(target, k, n, &coeffs))
        .collect();
    rows.into_iter()
        .map(|r| {
            r.map(|mut r| {
                r.conjecture = conjecture;
                r
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn first_delay_moment_is_exact() {
        let t = ScanTarget::Delay { beta: 2, w: int(2) };
        for r in remainder_scan(&t, 1, &[2, 5, 17, 40]).unwrap() {
            assert!(r.remainder.is_zero());
        }
    }

    #[test]
    fn rows_keep_input_order() {
        let t = ScanTarget::Transmission {
            beta: 2,
            delta: Rational::zero(),
            u: int(2),
        };
        let ns = [16, 4, 8];
        let rows = remainder_scan(&t, 2, &ns).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), ns);
    }
}
