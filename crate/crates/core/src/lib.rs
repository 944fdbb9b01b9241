//! Green's function of the three-dimensional Rashba–Dresselhaus Hamiltonian.
//!
//! The diagonal kernels `G1`, `G2` and the off-diagonal `D±G1` are evaluated
//! through the triple hypergeometric series `X` and `X′`, which in turn are
//! summed as single series of two-variable functions (Kampé de Fériet,
//! Srivastava–Daoust, Horn `H3`, `Ｈ3`, `Ｈ10` and Humbert `Ξ2`).
//!
//! Module map:
//!
//! - [`series_engine`]: Pochhammer symbols, gamma, `0F1`, half-integer
//!   Macdonald functions and the generic double-series evaluator.
//! - [`xy_series`]: the triple series `X`, `X′`, their representations,
//!   convergence-region classification and derivatives.
//! - [`greens_function`]: physical parameters, resolvent-set checks and the
//!   assembled 2×2 Green's matrix with its special-case branches.
//! - [`oracle`]: independent checks (momentum-space quadrature, Macdonald
//!   double sums and brute-force triple sums).

pub mod error;
pub mod greens_function;
pub mod oracle;
pub mod series_engine;
pub mod xy_series;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Universal numeric carrier.
pub type ComplexScalar = Complex64;

pub use greens_function::{
    dpm_g1, g1, g1_at_origin, g2, g2_ren, g2_ren_at_origin, green_matrix, sigma_threshold,
    theorem_conditions, to_dresselhaus, EvalPath, EvalPoint, GreenMatrix, GreenOptions,
    GreenValue, PhysicalParams, Sign, TheoremConditions,
};
pub use series_engine::{Representation, SeriesConfig, SeriesResult};
pub use xy_series::{RepChoice, SeriesParams, TripleArg};
