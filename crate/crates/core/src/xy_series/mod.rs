//! The triple series
//!
//! ```text
//!   X(a,b;ζ)  = Σ ζ1^m ζ2^n ζ3^p / (m! p! (a)_{2m+n+p} (b)_{m+n})
//!   X′(a,b;ζ) = Σ ζ1^m ζ2^n ζ3^p (a)_{2m−n−p} / ((m−n)! p! (b)_m)
//! ```
//!
//! Each is summed as a single outer series whose coefficients are
//! two-variable functions from [`crate::series_engine`].

mod derivatives;
mod region;
mod representations;

use num_complex::Complex64;

pub use derivatives::{confluence_xprime, dx_d1, dx_d2, dx_d2_with, dx_d3, dxp_d3};
pub use region::{classify_xprime_region, xprime_gauge, Membership, XpRegions};
pub use representations::{eval_x, eval_x_prime, eval_x_prime_with, eval_x_with, kdf_a21_b1};

use crate::series_engine::Representation;

/// Argument triple `(ζ1, ζ2, ζ3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripleArg {
    pub z1: Complex64,
    pub z2: Complex64,
    pub z3: Complex64,
}

impl TripleArg {
    pub fn new(z1: Complex64, z2: Complex64, z3: Complex64) -> Self {
        Self { z1, z2, z3 }
    }

    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        Self::new(z, z, z)
    }

    pub fn is_finite(&self) -> bool {
        [self.z1, self.z2, self.z3]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Parameters `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    pub a: Complex64,
    pub b: Complex64,
}

impl SeriesParams {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        Self { a, b }
    }

    pub fn real(a: f64, b: f64) -> Self {
        Self::new(Complex64::new(a, 0.0), Complex64::new(b, 0.0))
    }
}

/// Representation request for [`eval_x`] / [`eval_x_prime`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RepChoice {
    #[default]
    Auto,
    X1,
    X2,
    X3,
    Xp1,
    Xp2,
    Xp3,
}

impl RepChoice {
    pub(crate) fn representation(self) -> Option<Representation> {
        match self {
            Self::Auto => None,
            Self::X1 => Some(Representation::X1),
            Self::X2 => Some(Representation::X2),
            Self::X3 => Some(Representation::X3),
            Self::Xp1 => Some(Representation::Xp1),
            Self::Xp2 => Some(Representation::Xp2),
            Self::Xp3 => Some(Representation::Xp3),
        }
    }
}
