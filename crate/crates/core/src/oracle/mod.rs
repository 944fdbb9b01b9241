//! Independent evaluation paths used to check the series.
//!
//! - [`momentum`]: the defining momentum integrals, reduced by residues to
//!   one radial integral and summed by adaptive Gauss–Kronrod quadrature.
//! - [`macdonald_sum`]: the double sums of half-integer Macdonald functions
//!   from which the series are derived, and their closed-form side.
//! - [`brute_force`]: direct enumeration of `X` and `X′`.

pub mod brute_force;
pub mod macdonald_sum;
pub mod momentum;
pub mod quadrature;

pub use brute_force::{brute_force_x, brute_force_x_prime};
pub use macdonald_sum::{
    lemma_rhs, macdonald_double_sum, macdonald_sum_g1, macdonald_sum_g2, MacdonaldKind,
    MacdonaldSumArgs,
};
pub use momentum::{quad_g1, quad_g1_detailed, quad_g2, quad_g2_detailed};
pub use quadrature::{integrate, integrate_semi_infinite, QuadResult, QuadratureConfig};
