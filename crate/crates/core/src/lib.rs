//! Exact finite-n and asymptotic moments of transmission eigenvalues and
//! proper delay times for the Jacobi and Laguerre β-ensembles, together
//! with the brute-force oracles used to check them.

pub mod asympt;
pub mod error;
pub mod exactmath;
pub mod moments;
pub mod oracles;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};

/// Exact rational scalar used by every closed form.
pub type Rational = num_rational::BigRational;
pub type SeriesQ = series::SeriesQ;
pub type PolyQ = exactmath::PolyQ;
