//! Limiting eigenvalue densities and their moments by quadrature.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::rational_to_f64;
use crate::Rational;

use super::quadrature::integrate_1d;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupportInterval {
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LimitKind {
    /// Laguerre ensemble with `b = n(w-1) + O(1)`.
    MarchenkoPastur { w: Rational },
    /// Jacobi ensemble with `a = (v-1)n`, `b = (u-1)n`.
    JacobiLimit { u: Rational, v: Rational },
}

pub fn support(kind: &LimitKind) -> Result<SupportInterval> {
    match kind {
        LimitKind::MarchenkoPastur { w } => {
            let w = rational_to_f64(w);
            if w <= 1.0 {
                return Err(Error::ParameterDomain(format!("need w > 1, got {w}")));
            }
            let r = w.sqrt();
            Ok(SupportInterval {
                lower: (r - 1.0) * (r - 1.0),
                upper: (r + 1.0) * (r + 1.0),
            })
        }
        LimitKind::JacobiLimit { u, v } => {
            let (u, v) = (rational_to_f64(u), rational_to_f64(v));
            if u < 1.0 || v < 1.0 {
                return Err(Error::ParameterDomain(format!(
                    "need u, v >= 1, got u={u}, v={v}"
                )));
            }
            let s = u + v;
            let p = (u / s * (1.0 - 1.0 / s)).sqrt();
            let m = (1.0 / s * (1.0 - u / s)).sqrt();
            Ok(SupportInterval {
                lower: (p - m) * (p - m),
                upper: (p + m) * (p + m),
            })
        }
    }
}

/// Marčenko–Pastur: `∫ x^k ρ(x) dx`. Jacobi limit: the difference moment
/// `∫ x^k (1-x) ρ(x) dx`.
pub fn limiting_moment(kind: &LimitKind, k: i64) -> Result<f64> {
    let sup = support(kind)?;
    let (lo, hi) = (sup.lower, sup.upper);
    match kind {
        LimitKind::MarchenkoPastur { .. } => {
            if k == 0 {
                return Err(Error::ParameterDomain("k must be nonzero".into()));
            }
            integrate_1d(lo, hi, 1e-14, |x, dl, dh| {
                (dl * dh).sqrt() / (2.0 * PI) * x.powi(k as i32 - 1)
            })
        }
        LimitKind::JacobiLimit { u, v } => {
            if k < 1 {
                return Err(Error::ParameterDomain(format!("k must be >= 1, got {k}")));
            }
            let s = rational_to_f64(u) + rational_to_f64(v);
            // (1-x) cancels the density's 1/(1-x); at u=v=1 the support is
            // all of [0,1] and the remaining 1/x singularity is integrable.
            integrate_1d(lo, hi, 1e-14, |x, dl, dh| {
                s * (dl * dh).sqrt() / (2.0 * PI) * x.powi(k as i32 - 1)
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn arcsine_and_mp() {
        let j = LimitKind::JacobiLimit {
            u: int(1),
            v: int(1),
        };
        assert!((limiting_moment(&j, 1).unwrap() - 0.125).abs() < 1e-12);
        let mp = LimitKind::MarchenkoPastur { w: int(2) };
        assert!((limiting_moment(&mp, -1).unwrap() - 1.0).abs() < 1e-12);
        assert!((limiting_moment(&mp, 1).unwrap() - 2.0).abs() < 1e-12);
    }
}
