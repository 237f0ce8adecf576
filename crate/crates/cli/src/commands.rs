use serde_json::{json, Value};
use tmoments::asympt::{
    self, laguerre_pos_leading, remainder_scan, run_suite_with, selberg_like_diff_p0, CoeffParams,
    CoeffRequest, CoeffTarget, Limits, ScanTarget, Suite,
};
use tmoments::exactmath::int;
use tmoments::moments::{
    float_decimal_string, laguerre_constant, moment_jacobi, moment_laguerre_neg,
    moment_selberg_like, selberg_constant,
};
use tmoments::oracles::{
    limiting_moment, mc_moment, sample_ensemble_draw, support, LimitKind, OracleEnsemble,
    SampleParams,
};
use tmoments::series::genfun::{genfun_eval, GenFunId};
use tmoments::{Error, Rational};

use crate::args::*;
use crate::render::{decimal, exact_json, Report};

#[derive(Debug)]
pub enum CliError {
    /// Missing or inconsistent flags.
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::InternalIdentityViolation(_)) => 2,
            _ => 1,
        }
    }
}

type Res<T> = std::result::Result<T, CliError>;

fn need<'a, T>(x: &'a Option<T>, flag: &str, what: &str) -> Res<&'a T> {
    x.as_ref()
        .ok_or_else(|| CliError::Usage(format!("--{flag} is required for {what}")))
}

fn opt_str(x: &Option<Rational>) -> Value {
    x.as_ref()
        .map_or(Value::Null, |v| Value::String(v.to_string()))
}

const VALUE_COLUMNS: [&str; 6] = ["k", "n", "p", "value_rational", "value_decimal", "flags"];

fn value_row(
    k: Option<i64>,
    n: Option<i64>,
    p: Option<i64>,
    x: &Rational,
    digits: usize,
    flags: &[&str],
) -> Vec<String> {
    let s = |v: Option<i64>| v.map_or(String::new(), |v| v.to_string());
    vec![
        s(k),
        s(n),
        s(p),
        x.to_string(),
        decimal(x, digits),
        flags.join(";"),
    ]
}

fn merge(report: &mut Report, v: Value) {
    if let Value::Object(m) = v {
        report.fields.extend(m);
    }
}

pub fn moment(a: &MomentArgs, digits: usize) -> Res<Report> {
    let r = match a.ensemble {
        Ensemble::Jacobi => {
            let (ja, jb) = (
                need(&a.a, "a", "the Jacobi ensemble")?,
                need(&a.b, "b", "the Jacobi ensemble")?,
            );
            moment_jacobi(a.beta, a.k, a.n, ja, jb)?
        }
        Ensemble::Laguerre => {
            let b = need(&a.b, "b", "the Laguerre ensemble")?;
            if a.k >= 0 {
                return Err(CliError::Usage(format!(
                    "--k must be negative for the Laguerre ensemble (moments of 1/x), got {}",
                    a.k
                )));
            }
            moment_laguerre_neg(a.beta, -a.k, a.n, b)?
        }
        Ensemble::SelbergLike => {
            let (u, v) = (
                need(&a.u, "u", "selberg-like")?,
                need(&a.v, "v", "selberg-like")?,
            );
            moment_selberg_like(a.beta, a.k, a.n, u, v)?
        }
    };
    let flags: Vec<&str> = r.flags.iter().map(|f| f.name()).collect();
    let mut rep = Report::new(&VALUE_COLUMNS);
    merge(&mut rep, exact_json(&r.value, digits));
    rep.set("formula", json!(r.formula));
    rep.set("flags", json!(flags));
    rep.set("conjecture", json!(false));
    rep.set(
        "inputs",
        json!({
            "ensemble": format!("{:?}", a.ensemble).to_lowercase(),
            "beta": a.beta, "k": a.k, "n": a.n,
            "a": opt_str(&a.a), "b": opt_str(&a.b), "u": opt_str(&a.u), "v": opt_str(&a.v),
        }),
    );
    rep.rows.push(value_row(
        Some(a.k),
        Some(a.n),
        None,
        &r.value,
        digits,
        &flags,
    ));
    Ok(rep)
}

pub fn coeff(a: &CoeffArgs, digits: usize) -> Res<Report> {
    let (target, params) = match a.target {
        Target::Transmission => (
            CoeffTarget::Transmission,
            CoeffParams::U(need(&a.u, "u", "transmission")?.clone()),
        ),
        Target::Delay => (
            CoeffTarget::Delay,
            CoeffParams::W(need(&a.w, "w", "delay")?.clone()),
        ),
        Target::SelbergLike => (
            CoeffTarget::SelbergLike,
            CoeffParams::UV(
                need(&a.u, "u", "selberg-like")?.clone(),
                need(&a.v, "v", "selberg-like")?.clone(),
            ),
        ),
    };
    let req = CoeffRequest {
        target,
        beta: a.beta,
        delta: a.delta.clone(),
        k: a.k,
        p: a.p,
        params,
    };
    let c = asympt::coeff(&req)?;
    let mut flags = Vec::new();
    if c.conjecture {
        flags.push("conjecture");
    }
    if c.non_physical_delta {
        flags.push("non_physical_delta");
    }
    let mut rep = Report::new(&VALUE_COLUMNS);
    merge(&mut rep, exact_json(&c.value, digits));
    rep.set("conjecture", json!(c.conjecture));
    rep.set("non_physical_delta", json!(c.non_physical_delta));
    rep.set(
        "inputs",
        json!({
            "target": format!("{:?}", a.target).to_lowercase(),
            "beta": a.beta, "delta": a.delta.to_string(), "k": a.k, "p": a.p,
            "u": opt_str(&a.u), "v": opt_str(&a.v), "w": opt_str(&a.w),
        }),
    );
    rep.rows.push(value_row(
        Some(a.k),
        None,
        Some(a.p),
        &c.value,
        digits,
        &flags,
    ));
    Ok(rep)
}

fn beta_u8(beta: &Option<i64>) -> Res<u8> {
    let b = *need(beta, "beta", "this generating function")?;
    u8::try_from(b).map_err(|_| {
        CliError::Core(Error::ParameterDomain(format!(
            "beta must be 1, 2 or 4, got {b}"
        )))
    })
}

pub fn genfun(a: &GenfunArgs, digits: usize) -> Res<Report> {
    let u = || need(&a.u, "u", "this generating function").cloned();
    let w = || need(&a.w, "w", "this generating function").cloned();
    let delta = || need(&a.delta, "delta", "this generating function").cloned();
    let id = match a.id {
        GenfunName::NarayanaRho => GenFunId::NarayanaRho { u: u()? },
        GenfunName::D0 => GenFunId::D0 { w: w()? },
        GenfunName::T0 => GenFunId::T0 { u: u()? },
        GenfunName::D1 => GenFunId::D1 {
            beta: beta_u8(&a.beta)?,
            w: w()?,
        },
        GenfunName::T1 => GenFunId::T1 {
            beta: beta_u8(&a.beta)?,
            delta: delta()?,
            u: u()?,
        },
        GenfunName::D2Beta2 => GenFunId::D2Beta2 { w: w()? },
        GenfunName::T2Beta2Delta => GenFunId::T2Beta2Delta {
            u: u()?,
            delta: delta()?,
        },
        GenfunName::D2Beta1 => GenFunId::D2Beta1 { w: w()? },
        GenfunName::T2Beta1Delta0 => GenFunId::T2Beta1Delta0 { u: u()? },
        GenfunName::T2Beta1DeltaConjectured => GenFunId::T2Beta1DeltaConjectured {
            u: u()?,
            delta: delta()?,
        },
        GenfunName::SelbergH => GenFunId::SelbergH {
            u: u()?,
            v: need(&a.v, "v", "selberg-h")?.clone(),
        },
    };
    let g = genfun_eval(&id, a.order)?;
    let flags: Vec<&str> = if g.conjecture {
        vec!["conjecture"]
    } else {
        vec![]
    };
    let mut rep = Report::new(&VALUE_COLUMNS);
    let coeffs: Vec<Value> = g
        .series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            rep.rows
                .push(value_row(Some(k as i64), None, None, c, digits, &flags));
            let mut v = exact_json(c, digits);
            v["k"] = json!(k);
            v
        })
        .collect();
    rep.set("id", json!(id.name()));
    rep.set("order", json!(a.order));
    rep.set("coefficients", Value::Array(coeffs));
    rep.set("conjecture", json!(g.conjecture));
    Ok(rep)
}

pub fn selberg(a: &SelbergArgs, digits: usize) -> Res<Report> {
    let c = match a.ensemble {
        Ensemble::Jacobi => {
            selberg_constant(a.beta, need(&a.a, "a", "the Jacobi ensemble")?, &a.b, a.n)?
        }
        Ensemble::Laguerre => laguerre_constant(a.beta, &a.b, a.n)?,
        Ensemble::SelbergLike => {
            return Err(CliError::Usage(
                "--ensemble must be jacobi or laguerre".into(),
            ));
        }
    };
    let dec = float_decimal_string(&c, digits);
    let mut rep = Report::new(&VALUE_COLUMNS);
    rep.set("value", Value::Null);
    rep.set("value_decimal", json!(dec));
    rep.set(
        "inputs",
        json!({ "beta": a.beta, "n": a.n, "a": opt_str(&a.a), "b": a.b.to_string() }),
    );
    rep.rows.push(vec![
        String::new(),
        a.n.to_string(),
        String::new(),
        String::new(),
        dec,
        String::new(),
    ]);
    Ok(rep)
}

pub fn verify(a: &VerifyArgs) -> Res<Report> {
    let suites: Vec<Suite> = match a.suite {
        SuiteName::All => Suite::ALL.to_vec(),
        SuiteName::Coker => vec![Suite::Coker],
        SuiteName::Chu => vec![Suite::Chu],
        SuiteName::JacobiPoly => vec![Suite::JacobiPoly],
        SuiteName::GenfunDuality => vec![Suite::GenfunDuality],
        SuiteName::AppendixD => vec![Suite::AppendixD],
    };
    if let Some(k) = a.kmax {
        if k < 1 {
            return Err(CliError::Core(Error::ParameterDomain(format!(
                "--kmax must be >= 1, got {k}"
            ))));
        }
    }
    let mut rep = Report::new(&["suite", "identity", "cases", "passed", "first_failure"]);
    let mut out = Vec::new();
    let mut all = true;
    for s in suites {
        let r = run_suite_with(s, Limits { kmax: a.kmax })?;
        all &= r.passed();
        let checks: Vec<Value> = r
            .checks
            .iter()
            .map(|c| {
                rep.rows.push(vec![
                    s.name().into(),
                    c.name.into(),
                    c.cases.to_string(),
                    c.passed().to_string(),
                    c.failures.first().cloned().unwrap_or_default(),
                ]);
                json!({
                    "identity": c.name,
                    "cases": c.cases,
                    "passed": c.passed(),
                    "failures": c.failures.iter().take(5).collect::<Vec<_>>(),
                })
            })
            .collect();
        out.push(json!({ "suite": s.name(), "passed": r.passed(), "cases": r.cases(), "checks": checks }));
    }
    rep.set("passed", json!(all));
    rep.set("kmax", json!(a.kmax));
    rep.set("suites", Value::Array(out));
    rep.identity_failure = !all;
    Ok(rep)
}

fn oracle_kind(e: Ensemble) -> Res<OracleEnsemble> {
    match e {
        Ensemble::Jacobi => Ok(OracleEnsemble::Jacobi),
        Ensemble::Laguerre => Ok(OracleEnsemble::Laguerre),
        Ensemble::SelbergLike => Err(CliError::Usage(
            "sampling takes --ensemble jacobi with explicit --a/--b".into(),
        )),
    }
}

pub fn sample(a: &SampleArgs) -> Res<Report> {
    let kind = oracle_kind(a.ensemble)?;
    let ja = match kind {
        OracleEnsemble::Jacobi => need(&a.a, "a", "the Jacobi ensemble")?.clone(),
        OracleEnsemble::Laguerre => int(0),
    };
    let params = SampleParams {
        kind,
        beta: a.beta,
        n: a.n,
        a: ja,
        b: a.b.clone(),
    };
    let mut rep;
    if let Some(k) = a.k {
        let est = mc_moment(&params, k, a.samples, a.seed)?;
        rep = Report::new(&["k", "n", "mean", "stderr", "samples"]);
        rep.set("k", json!(k));
        rep.set("mean", json!(est.mean));
        rep.set("stderr", json!(est.stderr));
        rep.set("samples", json!(est.n_samples));
        rep.rows.push(vec![
            k.to_string(),
            a.n.to_string(),
            format!("{:e}", est.mean),
            format!("{:e}", est.stderr),
            est.n_samples.to_string(),
        ]);
    } else {
        rep = Report::new(&["draw", "index", "eigenvalue"]);
        let mut draws = Vec::new();
        for d in 0..a.samples {
            let s = sample_ensemble_draw(&params, a.seed, d)?;
            for (i, x) in s.values.iter().enumerate() {
                rep.rows
                    .push(vec![d.to_string(), i.to_string(), format!("{x:e}")]);
            }
            draws.push(json!(s.values));
        }
        rep.set("eigenvalues", Value::Array(draws));
    }
    rep.set(
        "inputs",
        json!({
            "ensemble": format!("{:?}", a.ensemble).to_lowercase(),
            "beta": a.beta, "n": a.n, "a": opt_str(&a.a), "b": a.b.to_string(),
            "samples": a.samples,
        }),
    );
    rep.seed = Some(a.seed);
    Ok(rep)
}

pub fn density(a: &DensityArgs, digits: usize) -> Res<Report> {
    let kind = match a.ensemble {
        Ensemble::Laguerre => LimitKind::MarchenkoPastur {
            w: need(&a.w, "w", "the Laguerre limit")?.clone(),
        },
        Ensemble::Jacobi | Ensemble::SelbergLike => LimitKind::JacobiLimit {
            u: need(&a.u, "u", "the Jacobi limit")?.clone(),
            v: need(&a.v, "v", "the Jacobi limit")?.clone(),
        },
    };
    let sup = support(&kind)?;
    let mut rep = Report::new(&["k", "value_rational", "value_decimal", "quadrature"]);
    rep.set("support", json!({ "lower": sup.lower, "upper": sup.upper }));
    if let Some(k) = a.k {
        let exact = match &kind {
            LimitKind::MarchenkoPastur { w } if k > 0 => laguerre_pos_leading(k, w)?,
            LimitKind::MarchenkoPastur { w } if k < 0 => asympt::delay_coeff(2, -k, 0, w)?,
            LimitKind::MarchenkoPastur { .. } => {
                return Err(CliError::Core(Error::ParameterDomain(
                    "k must be nonzero".into(),
                )))
            }
            LimitKind::JacobiLimit { u, v } => selberg_like_diff_p0(k, u, v)?,
        };
        let quad = limiting_moment(&kind, k)?;
        merge(&mut rep, exact_json(&exact, digits));
        rep.set("k", json!(k));
        rep.set("quadrature", json!(quad));
        rep.set(
            "moment",
            json!(match kind {
                LimitKind::MarchenkoPastur { .. } => "x^k",
                LimitKind::JacobiLimit { .. } => "x^k (1-x)",
            }),
        );
        rep.rows.push(vec![
            k.to_string(),
            exact.to_string(),
            decimal(&exact, digits),
            format!("{quad:e}"),
        ]);
    }
    rep.set(
        "inputs",
        json!({ "u": opt_str(&a.u), "v": opt_str(&a.v), "w": opt_str(&a.w), "k": a.k }),
    );
    Ok(rep)
}

pub fn remainder(a: &RemainderArgs, digits: usize) -> Res<Report> {
    let target = match a.target {
        Target::Transmission => ScanTarget::Transmission {
            beta: a.beta,
            delta: a.delta.clone(),
            u: need(&a.u, "u", "transmission")?.clone(),
        },
        Target::Delay => ScanTarget::Delay {
            beta: a.beta,
            w: need(&a.w, "w", "delay")?.clone(),
        },
        Target::SelbergLike => {
            return Err(CliError::Usage(
                "--target must be transmission or delay".into(),
            ));
        }
    };
    let rows = remainder_scan(&target, a.k, &a.n)?;
    let mut rep = Report::new(&["k", "n", "remainder", "scaled_remainder", "flags"]);
    let conjecture = rows.iter().any(|r| r.conjecture);
    let flag = if conjecture { "conjecture" } else { "" };
    let out: Vec<Value> = rows
        .iter()
        .map(|r| {
            let rem = float_decimal_string(&r.remainder, digits);
            let sc = float_decimal_string(&r.scaled, digits);
            rep.rows.push(vec![
                a.k.to_string(),
                r.n.to_string(),
                rem.clone(),
                sc.clone(),
                flag.into(),
            ]);
            json!({ "n": r.n, "remainder": rem, "scaled_remainder": sc })
        })
        .collect();
    rep.set("rows", Value::Array(out));
    rep.set("conjecture", json!(conjecture));
    rep.set(
        "inputs",
        json!({
            "target": format!("{:?}", a.target).to_lowercase(),
            "beta": a.beta, "delta": a.delta.to_string(), "k": a.k,
            "u": opt_str(&a.u), "w": opt_str(&a.w), "n": a.n,
        }),
    );
    Ok(rep)
}
