//! Bidiagonal β-ensemble matrix models.
//!
//! Jacobi: the squared singular values of the upper bidiagonal block built
//! from Beta-distributed angles (Edelman–Sutton). Laguerre: squared singular
//! values of a chi bidiagonal (Dumitriu–Edelman), rescaled by `1/β`.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, ChiSquared, Distribution};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::moments::check_beta;
use crate::scalar::rational_to_f64;
use crate::Rational;

use super::OracleEnsemble;

/// Bumped whenever the stream of draws for a given seed changes.
pub const SAMPLER_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct SampleParams {
    pub kind: OracleEnsemble,
    pub beta: i64,
    pub n: i64,
    /// Ignored for Laguerre.
    pub a: Rational,
    pub b: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenSample {
    /// Ascending.
    pub values: Vec<f64>,
    pub seed: u64,
    /// Index of the draw within the seed's stream.
    pub draw: u64,
    pub params: SampleParams,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub n_samples: u64,
    pub seed: u64,
}

impl SampleParams {
    pub fn validate(&self) -> Result<()> {
        check_beta(self.beta)?;
        if self.n < 1 {
            return Err(Error::ParameterDomain(format!(
                "n must be >= 1, got {}",
                self.n
            )));
        }
        let minus_one = -Rational::from_integer(1.into());
        if self.b <= minus_one || (self.kind == OracleEnsemble::Jacobi && self.a <= minus_one) {
            return Err(Error::NonNormalizableDensity(format!(
                "need beta/2(a+1) > 0 and beta/2(b+1) > 0, got a={}, b={}",
                self.a, self.b
            )));
        }
        Ok(())
    }
}

fn rng_for(seed: u64, draw: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(draw);
    rng
}

fn beta_draw(rng: &mut ChaCha8Rng, p: f64, q: f64) -> f64 {
    Beta::new(p, q).expect("positive Beta shapes").sample(rng)
}

fn chi_draw(rng: &mut ChaCha8Rng, dof: f64) -> f64 {
    ChiSquared::new(dof)
        .expect("positive chi dof")
        .sample(rng)
        .sqrt()
}

fn squared_singular_values(m: DMatrix<f64>) -> Vec<f64> {
    let mut v: Vec<f64> = m.singular_values().iter().map(|s| s * s).collect();
    v.sort_by(f64::total_cmp);
    v
}

fn jacobi_draw(rng: &mut ChaCha8Rng, beta: f64, n: usize, a: f64, b: f64) -> Vec<f64> {
    // The model's first exponent belongs to λ, which is the paper's x.
    let (pa, pb) = (b, a);
    let g = beta / 2.0;
    let mut c = vec![0.0; n + 1];
    let mut s = vec![0.0; n + 1];
    let mut cp = vec![0.0; n + 1];
    let mut sp = vec![0.0; n + 1];
    for k in (1..=n).rev() {
        let x = beta_draw(rng, g * (pa + k as f64), g * (pb + k as f64));
        c[k] = x.sqrt();
        s[k] = (1.0 - x).sqrt();
        if k < n {
            let y = beta_draw(rng, g * k as f64, g * (pa + pb + 1.0 + k as f64));
            cp[k] = y.sqrt();
            sp[k] = (1.0 - y).sqrt();
        }
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        let k = n - i;
        m[(i, i)] = if i == 0 { c[k] } else { c[k] * sp[k] };
        if i + 1 < n {
            m[(i, i + 1)] = -s[k] * cp[k - 1];
        }
    }
    squared_singular_values(m)
}

fn laguerre_draw(rng: &mut ChaCha8Rng, beta: f64, n: usize, b: f64) -> Vec<f64> {
    let two_a = beta * (b + n as f64);
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = chi_draw(rng, two_a - beta * i as f64);
        if i + 1 < n {
            m[(i + 1, i)] = chi_draw(rng, beta * (n - 1 - i) as f64);
        }
    }
    squared_singular_values(m)
        .into_iter()
        .map(|x| x / beta)
        .collect()
}

fn draw_values(p: &SampleParams, seed: u64, draw: u64) -> Vec<f64> {
    let mut rng = rng_for(seed, draw);
    let beta = p.beta as f64;
    let n = p.n as usize;
    match p.kind {
        OracleEnsemble::Jacobi => jacobi_draw(
            &mut rng,
            beta,
            n,
            rational_to_f64(&p.a),
            rational_to_f64(&p.b),
        ),
        OracleEnsemble::Laguerre => laguerre_draw(&mut rng, beta, n, rational_to_f64(&p.b)),
    }
}

/// One eigenvalue draw; `draw` selects an independent stream of `seed`.
pub fn sample_ensemble_draw(params: &SampleParams, seed: u64, draw: u64) -> Result<EigenSample> {
    params.validate()?;
    Ok(EigenSample {
        values: draw_values(params, seed, draw),
        seed,
        draw,
        params: params.clone(),
    })
}

pub fn sample_ensemble(params: &SampleParams, seed: u64) -> Result<EigenSample> {
    sample_ensemble_draw(params, seed, 0)
}

/// Monte Carlo mean and standard error of `Σ_j x_j^k`.
pub fn mc_moment(params: &SampleParams, k: i64, n_samples: u64, seed: u64) -> Result<McEstimate> {
    params.validate()?;
    if n_samples < 2 {
        return Err(Error::ParameterDomain("need at least 2 samples".into()));
    }
    if k < 0 {
        // The smallest eigenvalue behaves like x^{β/2(b+1)-1} near 0; for the
        // physical delay parameters this is the condition k < nβ/2 + 1.
        let limit = rational_to_f64(&params.b) + 1.0 > 2.0 * (-k) as f64 / params.beta as f64;
        if !limit {
            return Err(Error::ValidityRange(format!(
                "the moment of order {k} diverges for n={}, beta={}, b={}",
                params.n, params.beta, params.b
            )));
        }
    }
    let values: Vec<f64> = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            draw_values(params, seed, i)
                .iter()
                .map(|x| x.powi(k as i32))
                .sum::<f64>()
        })
        .collect();
    let count = n_samples as f64;
    let mean = values.iter().sum::<f64>() / count;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (count - 1.0);
    Ok(McEstimate {
        mean,
        stderr: (var / count).sqrt(),
        n_samples,
        seed,
    })
}
