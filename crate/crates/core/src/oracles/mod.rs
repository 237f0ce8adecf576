//! Floating-point ground truth: Monte Carlo sampling, quadrature of the
//! low-dimensional densities, and limiting densities.

pub mod limits;
pub mod quadrature;
pub mod sampler;

pub use limits::{limiting_moment, support, LimitKind, SupportInterval};
pub use quadrature::{integrate_1d, quadrature_moment, quadrature_moments, TanhSinhRule};
pub use sampler::{
    mc_moment, sample_ensemble, sample_ensemble_draw, EigenSample, McEstimate, SampleParams,
    SAMPLER_VERSION,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleEnsemble {
    Jacobi,
    Laguerre,
}

/// Kolmogorov–Smirnov statistic of `samples` against the continuous `cdf`.
pub fn ks_statistic(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n).max((i + 1) as f64 / n - f)
        })
        .fold(0.0, f64::max)
}

/// Asymptotic p-value of the KS statistic `d` for `n` samples.
pub fn ks_pvalue(d: f64, n: usize) -> f64 {
    let sn = (n as f64).sqrt();
    let lambda = (sn + 0.12 + 0.11 / sn) * d;
    if lambda < 1e-3 {
        return 1.0;
    }
    let mut sum = 0.0;
    for j in 1..=100 {
        let jf = j as f64;
        let term = (-2.0 * jf * jf * lambda * lambda).exp();
        sum += if j % 2 == 1 { term } else { -term };
        if term < 1e-16 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}
