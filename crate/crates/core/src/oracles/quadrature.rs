//! Tanh-sinh quadrature on intervals and on the ordered simplex of the
//! low-dimensional Jacobi and Laguerre densities.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::moments::{laguerre_constant, selberg_constant};
use crate::scalar::rational_to_f64;
use crate::Rational;

use super::OracleEnsemble;

/// Half-width of the truncated `t` range. At `t = 5` the nodes sit within
/// `e^-230` of the endpoints.
const T_MAX: f64 = 5.0;

/// Default absolute error target.
pub const QUAD_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug)]
struct Node {
    /// Distance to the lower endpoint of the unit interval.
    lo: f64,
    /// Distance to the upper endpoint.
    hi: f64,
    weight: f64,
}

/// Tanh-sinh nodes on `(0,1)` with step `2^-level`.
#[derive(Clone, Debug)]
pub struct TanhSinhRule {
    nodes: Vec<Node>,
}

impl TanhSinhRule {
    pub fn new(level: u32) -> Self {
        let h = 0.5f64.powi(level as i32);
        let kmax = (T_MAX / h).ceil() as i64;
        let mut nodes = Vec::with_capacity(2 * kmax as usize + 1);
        for k in -kmax..=kmax {
            let t = k as f64 * h;
            let u = FRAC_PI_2 * t.sinh();
            let e = (-2.0 * u.abs()).exp();
            let (small, large) = (e / (1.0 + e), 1.0 / (1.0 + e));
            let (lo, hi) = if u >= 0.0 {
                (large, small)
            } else {
                (small, large)
            };
            // sech²u = 4e/(1+e)² with e = exp(-2|u|)
            let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
            let weight = h * 0.5 * FRAC_PI_2 * t.cosh() * sech2;
            if lo > 0.0 && hi > 0.0 && weight > 0.0 {
                nodes.push(Node { lo, hi, weight });
            }
        }
        TanhSinhRule { nodes }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫_lo^hi f`, where `f` receives the point together with its exact
    /// distances to both endpoints.
    pub fn integrate(&self, lo: f64, hi: f64, f: impl Fn(f64, f64, f64) -> f64) -> f64 {
        let len = hi - lo;
        self.nodes
            .iter()
            .map(|nd| {
                let dl = len * nd.lo;
                let dh = len * nd.hi;
                nd.weight * len * f(lo + dl, dl, dh)
            })
            .sum()
    }
}

/// Error of the finer of two levels whose results differ by `diff`, given
/// the previous difference: tanh-sinh roughly doubles its correct digits per
/// level, so the error is about `10^(d1²/d2)` in decimal exponents. The
/// extrapolation is trusted only once the levels already agree to 1e-8.
fn error_estimate(diff: f64, prev_diff: f64) -> f64 {
    if diff == 0.0 {
        return 0.0;
    }
    // A NaN previous difference (first level) also lands here.
    if diff > 1e-8 || prev_diff.partial_cmp(&diff) != Some(std::cmp::Ordering::Greater) {
        return diff;
    }
    let (d1, d2) = (diff.log10(), prev_diff.log10());
    if d2 >= 0.0 {
        return diff;
    }
    10f64.powf(d1 * d1 / d2).min(diff)
}

/// Adaptive 1D tanh-sinh: refines until two levels agree within `tol`.
pub fn integrate_1d(lo: f64, hi: f64, tol: f64, f: impl Fn(f64, f64, f64) -> f64) -> Result<f64> {
    let mut prev = TanhSinhRule::new(2).integrate(lo, hi, &f);
    let mut prev_diff = f64::NAN;
    for level in 3..=10 {
        let cur = TanhSinhRule::new(level).integrate(lo, hi, &f);
        let diff = (cur - prev).abs();
        if error_estimate(diff, prev_diff) <= tol {
            return Ok(cur);
        }
        prev = cur;
        prev_diff = diff;
    }
    Err(Error::Convergence(format!(
        "1D tanh-sinh did not reach {tol:e} on ({lo}, {hi})"
    )))
}

/// Parameters of the low-dimensional density integral.
struct Density {
    kind: OracleEnsemble,
    beta: f64,
    n: usize,
    /// Exponent of `x`.
    ex: f64,
    /// Exponent of `1-x` (Jacobi only).
    e1x: f64,
    /// Laguerre map `x = scale·t/(1-t)`.
    scale: f64,
}

/// One coordinate of the ordered simplex, in the integration variable
/// (`x` for Jacobi, `t = x/(scale+x)` for Laguerre).
#[derive(Clone, Copy, Default)]
struct Coord {
    t: f64,
    one_minus_t: f64,
    /// `t_i - t_{i-1}`, exact.
    gap: f64,
    ln_x: f64,
}

impl Density {
    fn ln_weight(&self, c: &Coord) -> f64 {
        match self.kind {
            OracleEnsemble::Jacobi => self.ex * c.ln_x + self.e1x * c.one_minus_t.ln(),
            OracleEnsemble::Laguerre => {
                let x = self.scale * c.t / c.one_minus_t;
                // dx/dt = scale/(1-t)²
                self.ex * c.ln_x - 0.5 * self.beta * x + self.scale.ln() - 2.0 * c.one_minus_t.ln()
            }
        }
    }

    fn ln_diff(&self, ci: &Coord, cj: &Coord, dt: f64) -> f64 {
        match self.kind {
            OracleEnsemble::Jacobi => dt.ln(),
            OracleEnsemble::Laguerre => {
                self.scale.ln() + dt.ln() - ci.one_minus_t.ln() - cj.one_minus_t.ln()
            }
        }
    }

    fn coord(&self, prev: Option<&Coord>, nd: &Node) -> (Coord, f64) {
        let (start, len) = match prev {
            None => (0.0, 1.0),
            Some(p) => (p.t, p.one_minus_t),
        };
        let gap = len * nd.lo;
        let t = start + gap;
        let one_minus_t = len * nd.hi;
        let ln_x = match self.kind {
            OracleEnsemble::Jacobi => t.ln(),
            OracleEnsemble::Laguerre => self.scale.ln() + t.ln() - one_minus_t.ln(),
        };
        (
            Coord {
                t,
                one_minus_t,
                gap,
                ln_x,
            },
            nd.weight * len,
        )
    }

    /// Integrals over the ordered simplex of the unnormalized density times
    /// `Σ_j x_j^k` for each `k`, followed by the integral of the density.
    fn integrate(&self, rule: &TanhSinhRule, ks: &[i64]) -> Vec<f64> {
        let mut acc = vec![0.0; ks.len() + 1];
        let mut coords = vec![Coord::default(); self.n];
        self.recurse(rule, ks, 0, 0.0, &mut coords, &mut acc);
        acc
    }

    fn recurse(
        &self,
        rule: &TanhSinhRule,
        ks: &[i64],
        dim: usize,
        ln_acc: f64,
        coords: &mut [Coord],
        acc: &mut [f64],
    ) {
        for nd in &rule.nodes {
            let (c, w) = self.coord(
                if dim == 0 {
                    None
                } else {
                    Some(&coords[dim - 1])
                },
                nd,
            );
            let mut ln_w = ln_acc + w.ln() + self.ln_weight(&c);
            let mut dt = c.gap;
            for i in (0..dim).rev() {
                ln_w += self.beta * self.ln_diff(&coords[i], &c, dt);
                dt += coords[i].gap;
            }
            coords[dim] = c;
            if dim + 1 < self.n {
                self.recurse(rule, ks, dim + 1, ln_w, coords, acc);
            } else {
                for (slot, &k) in acc.iter_mut().zip(ks) {
                    let kf = k as f64;
                    *slot += coords
                        .iter()
                        .map(|c| (ln_w + kf * c.ln_x).exp())
                        .sum::<f64>();
                }
                acc[ks.len()] += ln_w.exp();
            }
        }
    }
}

/// Normalized `⟨Σ_j x_j^k⟩` for every `k` in `ks` by direct integration of
/// the `n ≤ 3` dimensional density; `a` is ignored for Laguerre.
pub fn quadrature_moments(
    kind: OracleEnsemble,
    beta: i64,
    ks: &[i64],
    n: i64,
    a: &Rational,
    b: &Rational,
) -> Result<Vec<f64>> {
    if !(1..=3).contains(&n) {
        return Err(Error::ParameterDomain(format!(
            "quadrature supports n in 1..=3, got {n}"
        )));
    }
    let bf = rational_to_f64(b);
    let af = rational_to_f64(a);
    let g = beta as f64 / 2.0;
    let ex = g * (bf + 1.0) - 1.0;
    let e1x = g * (af + 1.0) - 1.0;
    if ex <= -1.0 || (kind == OracleEnsemble::Jacobi && e1x <= -1.0) {
        return Err(Error::NonNormalizableDensity(format!(
            "weight exponents ({ex}, {e1x}) are not integrable"
        )));
    }
    for &k in ks {
        let bad = match kind {
            OracleEnsemble::Jacobi => k < 0 && ex + k as f64 <= -1.0,
            OracleEnsemble::Laguerre => ex + (k.min(0)) as f64 <= -1.0,
        };
        if bad {
            return Err(Error::ValidityRange(format!(
                "the moment of order {k} diverges at these parameters"
            )));
        }
    }
    let constant = match kind {
        OracleEnsemble::Jacobi => selberg_constant(beta, a, b, n)?,
        OracleEnsemble::Laguerre => laguerre_constant(beta, b, n)?,
    };
    let n_fact: f64 = (1..=n).product::<i64>() as f64;
    let z_exact = constant.to_f64() / n_fact;
    let dens = Density {
        kind,
        beta: beta as f64,
        n: n as usize,
        ex,
        e1x,
        // Eigenvalues sit around b+n, which lands the bulk mid-interval.
        scale: (bf + n as f64).max(1.0),
    };
    let max_level = if n == 3 { 5 } else { 8 };
    let mut prev = dens.integrate(&TanhSinhRule::new(2), ks);
    let mut prev_diff = f64::NAN;
    for level in 3..=max_level {
        let cur = dens.integrate(&TanhSinhRule::new(level), ks);
        let diff = cur
            .iter()
            .zip(&prev)
            .map(|(c, p)| (c - p).abs() / z_exact)
            .fold(0.0, f64::max);
        if error_estimate(diff, prev_diff) <= QUAD_TOL {
            let z_rel = (cur[ks.len()] / z_exact - 1.0).abs();
            if z_rel > 1e-10 {
                return Err(Error::Convergence(format!(
                    "normalization integral disagrees with the closed form by {z_rel:e}"
                )));
            }
            return Ok(cur[..ks.len()].iter().map(|v| v / z_exact).collect());
        }
        prev = cur;
        prev_diff = diff;
    }
    Err(Error::Convergence(format!(
        "tanh-sinh did not reach {QUAD_TOL:e} by level {max_level}"
    )))
}

pub fn quadrature_moment(
    kind: OracleEnsemble,
    beta: i64,
    k: i64,
    n: i64,
    a: &Rational,
    b: &Rational,
) -> Result<f64> {
    Ok(quadrature_moments(kind, beta, &[k], n, a, b)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn one_dimensional_singular() {
        // ∫_0^1 x^{-1/2} dx = 2
        let v = integrate_1d(0.0, 1.0, 1e-14, |x, _, _| x.powf(-0.5)).unwrap();
        assert!((v - 2.0).abs() < 1e-13);
    }

    #[test]
    fn spec_examples() {
        let z = int(0);
        let v = quadrature_moment(OracleEnsemble::Jacobi, 2, 2, 2, &z, &z).unwrap();
        assert!((v - 11.0 / 15.0).abs() < 1e-12);
        let v = quadrature_moment(OracleEnsemble::Jacobi, 2, 1, 1, &z, &z).unwrap();
        assert!((v - 0.5).abs() < 1e-12);
        let v = quadrature_moment(OracleEnsemble::Laguerre, 2, -1, 2, &z, &int(2)).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }
}
