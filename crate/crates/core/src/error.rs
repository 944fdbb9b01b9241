use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The requested value is infinite or undefined (pole, zero argument, overflow).
    #[error("domain error: {0}")]
    Domain(String),

    /// A denominator Pochhammer symbol vanishes.
    #[error("parameter {param} is a pole of a denominator Pochhammer symbol")]
    ParameterPole { param: Complex64 },

    #[error("arguments outside the convergence region: {0}")]
    OutOfRegion(String),

    #[error("series did not converge within {terms} terms (last contribution {est_error:e})")]
    NoConvergence { terms: usize, est_error: f64 },

    #[error("zeta = {zeta} lies in (or too close to) the essential spectrum [-{sigma}, inf)")]
    InvalidZeta { zeta: Complex64, sigma: f64 },

    #[error("none of the convergence conditions (a), (b), (c) holds{0}")]
    NoValidRegion(String),

    #[error("G2 is singular at the origin; use the renormalized value instead")]
    OriginNotAllowed,

    #[error("quadrature failed: {0}")]
    QuadFailure(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
