use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("hypergeometric series does not terminate: {0}")]
    NonTerminating(String),
    #[error("series division by a series with zero constant term")]
    DivisionByZeroSeries,
    #[error("constant term {0} is not the square of a rational")]
    NotAPerfectSquareConstant(String),
    #[error("parameter domain: {0}")]
    ParameterDomain(String),
    #[error("unsupported generating function family: {0}")]
    UnsupportedFamily(String),
    #[error("invalid symmetry pair (beta={beta}, delta={delta})")]
    InvalidSymmetryPair { beta: i64, delta: String },
    #[error("second lead must have at least as many channels: m={m} < n={n}")]
    LeadOrder { m: i64, n: i64 },
    #[error("outside validity range: {0}")]
    ValidityRange(String),
    #[error("parity: {0}")]
    Parity(String),
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),
    #[error("internal identity violation: {0}")]
    InternalIdentityViolation(String),
    #[error("density is not normalizable: {0}")]
    NonNormalizableDensity(String),
    #[error("quadrature did not converge: {0}")]
    Convergence(String),
}

impl Error {
    /// Poles and series-division failures are the only errors a parameter
    /// perturbation can cure.
    pub fn is_removable(&self) -> bool {
        matches!(self, Error::Pole(_) | Error::DivisionByZeroSeries)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
