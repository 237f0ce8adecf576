use clap::{Args, Parser, Subcommand, ValueEnum};
use tmoments::Rational;

#[derive(Parser, Debug)]
#[command(
    name = "tmoments",
    version,
    about = "Exact moments of transmission eigenvalues and proper delay times"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Significant digits of the decimal renderings.
    #[arg(long, global = true, default_value_t = 30)]
    pub digits: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact finite-n moment.
    Moment(MomentArgs),
    /// Coefficient of the 1/n expansion.
    Coeff(CoeffArgs),
    /// Taylor coefficients of a generating function.
    Genfun(GenfunArgs),
    /// Normalization constant of the Jacobi or Laguerre density.
    Selberg(SelbergArgs),
    /// Run identity suites.
    Verify(VerifyArgs),
    /// Draw eigenvalues, or estimate a moment by Monte Carlo.
    Sample(SampleArgs),
    /// Limiting density: support and moments.
    Density(DensityArgs),
    /// Remainder of the expansion against exact moments.
    Remainder(RemainderArgs),
}

/// Exact rational from "p/q" or an integer; decimal notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("'{s}' is not a rational of the form p/q or an integer"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ensemble {
    Jacobi,
    Laguerre,
    SelbergLike,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Transmission,
    Delay,
    SelbergLike,
}

#[derive(Args, Debug)]
pub struct MomentArgs {
    #[arg(long, value_enum)]
    pub ensemble: Ensemble,
    #[arg(long)]
    pub beta: i64,
    /// Moment order; negative for the Laguerre ensemble.
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long)]
    pub n: i64,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub u: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub v: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct CoeffArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long)]
    pub beta: i64,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, default_value = "0")]
    pub delta: Rational,
    #[arg(long)]
    pub k: i64,
    #[arg(long)]
    pub p: i64,
    #[arg(long, value_parser = parse_rational)]
    pub u: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub v: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub w: Option<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenfunName {
    NarayanaRho,
    D0,
    T0,
    D1,
    T1,
    D2Beta2,
    T2Beta2Delta,
    D2Beta1,
    T2Beta1Delta0,
    T2Beta1DeltaConjectured,
    SelbergH,
}

#[derive(Args, Debug)]
pub struct GenfunArgs {
    #[arg(long, value_enum)]
    pub id: GenfunName,
    #[arg(long)]
    pub beta: Option<i64>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub delta: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub u: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub v: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub w: Option<Rational>,
    /// Number of coefficients, starting at s^0.
    #[arg(long, default_value_t = tmoments::series::DEFAULT_ORDER)]
    pub order: usize,
}

#[derive(Args, Debug)]
pub struct SelbergArgs {
    #[arg(long, value_enum, default_value_t = Ensemble::Jacobi)]
    pub ensemble: Ensemble,
    #[arg(long)]
    pub beta: i64,
    #[arg(long)]
    pub n: i64,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub b: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Coker,
    Chu,
    JacobiPoly,
    GenfunDuality,
    AppendixD,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteName::All)]
    pub suite: SuiteName,
    /// Replaces every index bound of the suites.
    #[arg(long)]
    pub kmax: Option<i64>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub ensemble: Ensemble,
    #[arg(long)]
    pub beta: i64,
    #[arg(long)]
    pub n: i64,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub b: Rational,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub samples: u64,
    /// Estimate the moment of this order instead of listing eigenvalues.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
}

#[derive(Args, Debug)]
pub struct DensityArgs {
    #[arg(long, value_enum)]
    pub ensemble: Ensemble,
    #[arg(long, value_parser = parse_rational)]
    pub u: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub v: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub w: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
}

#[derive(Args, Debug)]
pub struct RemainderArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long)]
    pub beta: i64,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, default_value = "0")]
    pub delta: Rational,
    #[arg(long)]
    pub k: i64,
    #[arg(long, value_parser = parse_rational)]
    pub u: Option<Rational>,
    #[arg(long, value_parser = parse_rational)]
    pub w: Option<Rational>,
    /// Comma-separated matrix sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<i64>,
}
