//! Exact finite-n moments of the Jacobi and Laguerre β-ensembles.

pub mod finite;

use std::fmt;

use num_traits::{One, Signed, Zero};
use rug::Float;

use crate::error::{Error, Result};
use crate::exactmath::{int, q};
use crate::scalar::{Laurent, Scalar};
use crate::Rational;

/// Working precision (bits) of the normalization constants.
pub const CONSTANT_PRECISION: u32 = 256;

/// A Dyson or Andreev symmetry class `(β, δ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymmetryClass {
    beta: u8,
    delta: i8,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 7] = [
        SymmetryClass { beta: 1, delta: 0 },
        SymmetryClass { beta: 2, delta: 0 },
        SymmetryClass { beta: 4, delta: 0 },
        SymmetryClass { beta: 1, delta: -1 },
        SymmetryClass { beta: 2, delta: -1 },
        SymmetryClass { beta: 4, delta: 2 },
        SymmetryClass { beta: 2, delta: 1 },
    ];

    pub fn new(beta: i64, delta: i64) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| i64::from(c.beta) == beta && i64::from(c.delta) == delta)
            .ok_or(Error::InvalidSymmetryPair {
                beta,
                delta: delta.to_string(),
            })
    }

    pub fn dyson(beta: i64) -> Result<Self> {
        Self::new(beta, 0)
    }

    pub fn beta(&self) -> i64 {
        i64::from(self.beta)
    }

    pub fn delta(&self) -> i64 {
        i64::from(self.delta)
    }

    pub fn delta_q(&self) -> Rational {
        int(self.delta())
    }

    /// Jacobi exponent `a = (2/β)(1+δ/2) - 1`.
    pub fn jacobi_a(&self) -> Rational {
        jacobi_a(self.beta(), &self.delta_q())
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(beta={}, delta={})", self.beta, self.delta)
    }
}

/// `(2/β)(1+δ/2) - 1` for any rational δ.
pub fn jacobi_a(beta: i64, delta: &Rational) -> Rational {
    q(2, beta) * (Rational::one() + delta / int(2)) - Rational::one()
}

pub fn check_beta(beta: i64) -> Result<()> {
    match beta {
        1 | 2 | 4 => Ok(()),
        _ => Err(Error::ParameterDomain(format!(
            "beta must be 1, 2 or 4, got {beta}"
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnsembleKind {
    JacobiTransmission,
    LaguerreDelay,
    SelbergLike,
}

/// Physical inputs from which the ensemble exponents are derived.
#[derive(Clone, Debug, PartialEq)]
pub enum PhysicalSpec {
    Transmission { n: i64, m: i64 },
    Delay { n: i64, w: Rational },
    SelbergLike { n: i64, u: Rational, v: Rational },
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleParams {
    pub kind: EnsembleKind,
    pub class: SymmetryClass,
    pub n: i64,
    pub m: Option<i64>,
    /// Absent for the Laguerre ensemble.
    pub a: Option<Rational>,
    pub b: Rational,
    pub u: Option<Rational>,
    pub v: Option<Rational>,
    pub w: Option<Rational>,
}

pub fn map_params(class: SymmetryClass, spec: &PhysicalSpec) -> Result<EnsembleParams> {
    let n = match spec {
        PhysicalSpec::Transmission { n, .. }
        | PhysicalSpec::Delay { n, .. }
        | PhysicalSpec::SelbergLike { n, .. } => *n,
    };
    if n < 1 {
        return Err(Error::ParameterDomain(format!("n must be >= 1, got {n}")));
    }
    let beta = class.beta();
    Ok(match spec {
        PhysicalSpec::Transmission { m, .. } => {
            if *m < n {
                return Err(Error::LeadOrder { m: *m, n });
            }
            EnsembleParams {
                kind: EnsembleKind::JacobiTransmission,
                class,
                n,
                m: Some(*m),
                a: Some(class.jacobi_a()),
                b: int(m - n),
                u: Some(q(*m, n)),
                v: None,
                w: None,
            }
        }
        PhysicalSpec::Delay { w, .. } => {
            if !w.is_positive() {
                return Err(Error::ParameterDomain(format!("w must be > 0, got {w}")));
            }
            EnsembleParams {
                kind: EnsembleKind::LaguerreDelay,
                class,
                n,
                m: None,
                a: None,
                b: int(n) * (w - Rational::one()) + q(2, beta) - Rational::one(),
                u: None,
                v: None,
                w: Some(w.clone()),
            }
        }
        PhysicalSpec::SelbergLike { u, v, .. } => {
            if !u.is_positive() || !v.is_positive() {
                return Err(Error::ParameterDomain(format!(
                    "u and v must be > 0, got u={u}, v={v}"
                )));
            }
            EnsembleParams {
                kind: EnsembleKind::SelbergLike,
                class,
                n,
                m: None,
                a: Some((v - Rational::one()) * int(n)),
                b: (u - Rational::one()) * int(n),
                u: Some(u.clone()),
                v: Some(v.clone()),
                w: None,
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MomentFlag {
    /// The exponentially small β=1 Laguerre correction is not included.
    OmittedPhiTerm,
    /// The formula had a removable singularity at these parameters; the
    /// value is its limit.
    RemovableLimit,
}

impl MomentFlag {
    pub fn name(&self) -> &'static str {
        match self {
            MomentFlag::OmittedPhiTerm => "OMITTED_PHI_TERM",
            MomentFlag::RemovableLimit => "REMOVABLE_LIMIT",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MomentResult {
    pub value: Rational,
    pub formula: &'static str,
    pub flags: Vec<MomentFlag>,
}

/// Evaluates `f` exactly; if it meets a removable pole, re-evaluates along
/// `a+ε, b+(7/3)ε` and takes the ε⁰ coefficient.
fn eval_with_limit(
    a: &Rational,
    b: &Rational,
    f_q: impl Fn(&Rational, &Rational) -> Result<Rational>,
    f_l: impl Fn(&Laurent, &Laurent) -> Result<Laurent>,
) -> Result<(Rational, bool)> {
    match f_q(a, b) {
        Ok(v) => Ok((v, false)),
        Err(e) if e.is_removable() => {
            let la = Laurent::linear(a.clone(), Rational::one());
            let lb = Laurent::linear(b.clone(), q(7, 3));
            let limit = f_l(&la, &lb)
                .and_then(|v| v.regular_part())
                .map_err(|e| match e {
                    Error::Pole(m) => {
                        Error::ValidityRange(format!("the moment diverges at a={a}, b={b} ({m})"))
                    }
                    e => e,
                })?;
            Ok((limit, true))
        }
        Err(e) => Err(e),
    }
}

fn check_normalizable(beta: i64, a: Option<&Rational>, b: &Rational) -> Result<()> {
    let minus_one = -Rational::one();
    if b <= &minus_one || a.is_some_and(|a| a <= &minus_one) {
        return Err(Error::ParameterDomain(format!(
            "exponents must exceed -1 for a normalizable beta={beta} density (a={}, b={b})",
            a.map_or("-".to_string(), |a| a.to_string())
        )));
    }
    Ok(())
}

/// `⟨Σ_j x_j^k⟩` over the Jacobi ensemble with weight
/// `x^{β/2(b+1)-1}(1-x)^{β/2(a+1)-1}|Δ|^β`.
pub fn moment_jacobi(
    beta: i64,
    k: i64,
    n: i64,
    a: &Rational,
    b: &Rational,
) -> Result<MomentResult> {
    check_beta(beta)?;
    if k < 1 {
        return Err(Error::ParameterDomain(format!("k must be >= 1, got {k}")));
    }
    // The β=2 route holds for every n; the β=1,4 decompositions need n > kβ/2.
    if beta != 2 && 2 * n <= k * beta {
        return Err(Error::ValidityRange(format!(
            "need n > k*beta/2, got n={n}, k={k}, beta={beta}"
        )));
    }
    check_normalizable(beta, Some(a), b)?;
    let nq = int(n);
    let nl = Laurent::from_i64(n);
    let (value, limit, formula) = match beta {
        2 => {
            let (v, l) = eval_with_limit(
                a,
                b,
                |a, b| finite::jacobi2(k, &nq, a, b),
                |a, b| finite::jacobi2(k, &nl, a, b),
            )?;
            (v, l, "jacobi-beta2-differences")
        }
        1 => {
            let (v, l) = eval_with_limit(
                a,
                b,
                |a, b| finite::jacobi1(k, &nq, a, b),
                |a, b| finite::jacobi1(k, &nl, a, b),
            )?;
            (v, l, "jacobi-beta1-decomposition")
        }
        _ => {
            let (v, l) = eval_with_limit(
                a,
                b,
                |a, b| finite::jacobi4(k, &nq, a, b),
                |a, b| finite::jacobi4(k, &nl, a, b),
            )?;
            (v, l, "jacobi-beta4-decomposition")
        }
    };
    let mut flags = Vec::new();
    if limit {
        flags.push(MomentFlag::RemovableLimit);
    }
    Ok(MomentResult {
        value,
        formula,
        flags,
    })
}

/// `⟨Σ_j x_j^{-k}⟩` over the Laguerre ensemble with weight
/// `x^{β/2(b+1)-1} e^{-βx/2} |Δ|^β`.
pub fn moment_laguerre_neg(beta: i64, k: i64, n: i64, b: &Rational) -> Result<MomentResult> {
    check_beta(beta)?;
    if k < 1 || n < 1 {
        return Err(Error::ParameterDomain(format!(
            "need k >= 1 and n >= 1, got k={k}, n={n}"
        )));
    }
    if 2 * (k - 1) >= n * beta {
        return Err(Error::ValidityRange(format!(
            "need k < n*beta/2 + 1, got n={n}, k={k}, beta={beta}"
        )));
    }
    if beta == 1 && n % 2 != 0 {
        return Err(Error::Parity(format!(
            "beta=1 Laguerre moments need even n, got n={n}"
        )));
    }
    check_normalizable(beta, None, b)?;
    let zero = Rational::zero();
    let (value, limit, formula) = match beta {
        2 => {
            let (v, l) = eval_with_limit(
                &zero,
                b,
                |_, b| finite::laguerre2(k, n, b),
                |_, b| finite::laguerre2(k, n, b),
            )?;
            (v, l, "laguerre-beta2-sum")
        }
        1 => {
            let (v, l) = eval_with_limit(
                &zero,
                b,
                |_, b| finite::laguerre1(k, n, b),
                |_, b| finite::laguerre1(k, n, b),
            )?;
            (v, l, "laguerre-beta1-decomposition")
        }
        _ => {
            let (v, l) = eval_with_limit(
                &zero,
                b,
                |_, b| finite::laguerre4(k, n, b),
                |_, b| finite::laguerre4(k, n, b),
            )?;
            (v, l, "laguerre-beta4-decomposition")
        }
    };
    let mut flags = Vec::new();
    if beta == 1 {
        flags.push(MomentFlag::OmittedPhiTerm);
    }
    if limit {
        flags.push(MomentFlag::RemovableLimit);
    }
    Ok(MomentResult {
        value,
        formula,
        flags,
    })
}

/// Jacobi moment with both exponents growing with n: `a=(v-1)n`, `b=(u-1)n`.
pub fn moment_selberg_like(
    beta: i64,
    k: i64,
    n: i64,
    u: &Rational,
    v: &Rational,
) -> Result<MomentResult> {
    let class = SymmetryClass::dyson(beta)?;
    let p = map_params(
        class,
        &PhysicalSpec::SelbergLike {
            n,
            u: u.clone(),
            v: v.clone(),
        },
    )?;
    let a = p.a.expect("Selberg-like parameters carry a");
    moment_jacobi(beta, k, n, &a, &p.b)
}

/// Exact moment for an already mapped parameter set.
pub fn moment_for(params: &EnsembleParams, k: i64) -> Result<MomentResult> {
    let beta = params.class.beta();
    match params.kind {
        EnsembleKind::LaguerreDelay => moment_laguerre_neg(beta, k, params.n, &params.b),
        _ => moment_jacobi(
            beta,
            k,
            params.n,
            params.a.as_ref().expect("Jacobi parameters carry a"),
            &params.b,
        ),
    }
}

pub fn to_float(x: &Rational) -> Float {
    to_float_prec(x, CONSTANT_PRECISION)
}

pub fn to_float_prec(x: &Rational, prec: u32) -> Float {
    let num = rug::Integer::from_str_radix(&x.numer().to_str_radix(16), 16)
        .expect("hex digits of a BigInt");
    let den = rug::Integer::from_str_radix(&x.denom().to_str_radix(16), 16)
        .expect("hex digits of a BigInt");
    Float::with_val(prec, rug::Rational::from((num, den)))
}

/// Decimal rendering with `digits` significant digits.
pub fn float_decimal_string(x: &Float, digits: usize) -> String {
    x.to_string_radix(10, Some(digits.max(1)))
}

/// Decimal rendering of an exact rational, correctly rounded to `digits`
/// significant digits.
pub fn decimal_string(x: &Rational, digits: usize) -> String {
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32;
    float_decimal_string(&to_float_prec(x, bits), digits)
}

fn ln_gamma_pos(x: &Rational, what: &str) -> Result<Float> {
    if !x.is_positive() {
        return Err(Error::Domain(format!(
            "gamma argument {what} = {x} is not positive"
        )));
    }
    Ok(to_float(x).ln_gamma())
}

/// Selberg's integral
/// `∫_{[0,1]^n} Π x^{β/2(b+1)-1}(1-x)^{β/2(a+1)-1} |Δ|^β dx`.
pub fn selberg_constant(beta: i64, a: &Rational, b: &Rational, n: i64) -> Result<Float> {
    check_beta(beta)?;
    if n < 1 {
        return Err(Error::Domain(format!("n must be >= 1, got {n}")));
    }
    let g = q(beta, 2);
    let alpha = &g * (b + Rational::one());
    let bet = &g * (a + Rational::one());
    let mut acc = Float::with_val(CONSTANT_PRECISION, 0);
    for j in 0..n {
        let jg = &g * int(j);
        acc += ln_gamma_pos(&(&alpha + &jg), "alpha + j*gamma")?;
        acc += ln_gamma_pos(&(&bet + &jg), "beta + j*gamma")?;
        acc += ln_gamma_pos(&(Rational::one() + &g * int(j + 1)), "1 + (j+1)*gamma")?;
        acc -= ln_gamma_pos(
            &(&alpha + &bet + &g * int(n + j - 1)),
            "alpha + beta + (n+j-1)*gamma",
        )?;
        acc -= ln_gamma_pos(&(Rational::one() + &g), "1 + gamma")?;
    }
    Ok(acc.exp())
}

/// Laguerre analogue
/// `∫_{(0,∞)^n} Π x^{β/2(b+1)-1} e^{-βx/2} |Δ|^β dx`.
pub fn laguerre_constant(beta: i64, b: &Rational, n: i64) -> Result<Float> {
    check_beta(beta)?;
    if n < 1 {
        return Err(Error::Domain(format!("n must be >= 1, got {n}")));
    }
    let g = q(beta, 2);
    let c = &g * (b + Rational::one());
    let mut acc = Float::with_val(CONSTANT_PRECISION, 0);
    for j in 0..n {
        acc += ln_gamma_pos(&(&c + &g * int(j)), "c + j*gamma")?;
        acc += ln_gamma_pos(&(Rational::one() + &g * int(j + 1)), "1 + (j+1)*gamma")?;
        acc -= ln_gamma_pos(&(Rational::one() + &g), "1 + gamma")?;
    }
    let degree = &c * int(n) + int(beta * n * (n - 1) / 2);
    let scale = to_float(&q(2, beta)).ln() * to_float(&degree);
    Ok((acc + scale).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: &Float, expect: f64, tol: f64) -> bool {
        (x.to_f64() - expect).abs() < tol
    }

    #[test]
    fn parameter_maps() {
        let p = map_params(
            SymmetryClass::new(2, 0).unwrap(),
            &PhysicalSpec::Transmission { n: 3, m: 5 },
        )
        .unwrap();
        assert_eq!(p.a, Some(int(0)));
        assert_eq!(p.b, int(2));
        assert_eq!(p.u, Some(q(5, 3)));
        let d = map_params(
            SymmetryClass::new(1, 0).unwrap(),
            &PhysicalSpec::Delay { n: 4, w: int(2) },
        )
        .unwrap();
        assert_eq!(d.b, int(5));
        assert_eq!(SymmetryClass::new(4, 2).unwrap().jacobi_a(), int(0));
        assert!(matches!(
            SymmetryClass::new(4, 1),
            Err(Error::InvalidSymmetryPair { .. })
        ));
        assert!(matches!(
            map_params(
                SymmetryClass::new(2, 0).unwrap(),
                &PhysicalSpec::Transmission { n: 3, m: 2 }
            ),
            Err(Error::LeadOrder { m: 2, n: 3 })
        ));
    }

    #[test]
    fn jacobi_examples() {
        let z = int(0);
        assert_eq!(moment_jacobi(2, 1, 2, &z, &z).unwrap().value, int(1));
        assert_eq!(moment_jacobi(2, 2, 2, &z, &z).unwrap().value, q(11, 15));
        assert_eq!(moment_jacobi(2, 1, 1, &z, &z).unwrap().value, q(1, 2));
        assert!(matches!(
            moment_jacobi(1, 3, 1, &z, &z),
            Err(Error::ValidityRange(_))
        ));
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(moment_laguerre_neg(2, 1, 1, &int(1)).unwrap().value, int(1));
        assert_eq!(moment_laguerre_neg(2, 1, 2, &int(2)).unwrap().value, int(1));
        for n in 1..=10 {
            assert_eq!(moment_laguerre_neg(2, 1, n, &int(n)).unwrap().value, int(1));
        }
        assert!(matches!(
            moment_laguerre_neg(2, 1, 1, &int(0)),
            Err(Error::ValidityRange(_))
        ));
        assert!(matches!(
            moment_laguerre_neg(1, 1, 3, &int(3)),
            Err(Error::Parity(_))
        ));
        let r = moment_laguerre_neg(1, 1, 2, &int(3)).unwrap();
        assert!(r.flags.contains(&MomentFlag::OmittedPhiTerm));
    }

    #[test]
    fn selberg_like_examples() {
        assert_eq!(
            moment_selberg_like(2, 1, 2, &int(1), &int(1))
                .unwrap()
                .value,
            int(1)
        );
        assert_eq!(
            moment_selberg_like(2, 1, 2, &int(2), &int(1))
                .unwrap()
                .value,
            q(4, 3)
        );
    }

    #[test]
    fn removable_limit_matches_neighbours() {
        let a = int(0);
        let b = int(0);
        let r = moment_jacobi(1, 2, 2, &a, &b).unwrap();
        assert!(r.flags.contains(&MomentFlag::RemovableLimit));
        let near = |d: Rational| {
            moment_jacobi(1, 2, 2, &(&a + &d), &(&b + &d * q(3, 5)))
                .unwrap()
                .value
        };
        let lo = near(q(-1, 1_000_000));
        let hi = near(q(1, 1_000_000));
        let tol = q(1, 10_000);
        assert!((&r.value - lo).abs() < tol && (&r.value - hi).abs() < tol);
    }

    #[test]
    fn constants() {
        let z = int(0);
        assert!(close(&selberg_constant(2, &z, &z, 1).unwrap(), 1.0, 1e-30));
        assert!(close(
            &selberg_constant(2, &z, &z, 2).unwrap(),
            1.0 / 6.0,
            1e-15
        ));
        // Unit weight at β=1 is a=b=1; a=b=0 gives the arcsine weight.
        assert!(close(
            &selberg_constant(1, &int(1), &int(1), 2).unwrap(),
            1.0 / 3.0,
            1e-15
        ));
        assert!(close(&selberg_constant(1, &z, &z, 2).unwrap(), 4.0, 1e-15));
        // ∫∫ x y (x-y)² e^{-x-y} = 2·3!·1! - 2·2!·2! = 4
        assert!(close(
            &laguerre_constant(2, &int(1), 2).unwrap(),
            4.0,
            1e-12
        ));
        assert!(close(
            &laguerre_constant(2, &int(1), 1).unwrap(),
            1.0,
            1e-30
        ));
        assert!(selberg_constant(2, &int(-1), &z, 1).is_err());
    }
}
