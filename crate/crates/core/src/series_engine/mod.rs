//! Foundational evaluators: Pochhammer symbols, gamma, `0F1`, half-integer
//! Macdonald functions and the two-variable hypergeometric families.
//!
//! Every two-variable function here is an instance of one signed-weight
//! Srivastava–Daoust double sum ([`double_series`]); the named wrappers in
//! [`horn`] only add the convergence-region bookkeeping of each family.

pub mod double_series;
pub mod gamma;
pub mod horn;
pub mod hyp0f1;
pub mod macdonald;
pub mod pochhammer;
pub(crate) mod scaled;

use std::fmt;

use num_complex::Complex64;

pub use double_series::{srivastava_daoust, srivastava_daoust_with, Factor, Polydisc, SdSpec};
pub use gamma::{gamma, ln_gamma};
pub use horn::{
    h3_gauge, h3_polydisc, h3_region_contains, horn_h10, horn_h10_with, horn_h3, horn_h3_confluent,
    horn_h3_confluent_with, horn_h3_with, humbert_xi2, humbert_xi2_with,
};
pub use hyp0f1::{hyp0f1, hyp0f1_with};
pub use macdonald::{ln_macdonald_k_half_seq, macdonald_k_half};
pub use pochhammer::{pochhammer, reciprocal_factorial, rpochhammer};

/// Margin by which convergence regions are shrunk before membership tests.
pub const REGION_MARGIN: f64 = 1e-12;

/// Truncation controls shared by every series evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// A shell (or outer term) is negligible when its magnitude is below
    /// `tol_rel * (1 + |partial sum|)`.
    pub tol_rel: f64,
    /// Cap on the number of triangular shells of a double series.
    pub max_shells: usize,
    /// Cap on the number of terms of an outer single series.
    pub max_outer: usize,
    /// Cap on the number of terms of a single-variable series.
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            tol_rel: 1e-12,
            max_shells: 2000,
            max_outer: 2000,
            max_terms: 2000,
        }
    }
}

/// Which formula produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    Hyp0F1,
    SrivastavaDaoust,
    HornH3,
    HornH3Confluent,
    HornH10,
    HumbertXi2,
    X1,
    X2,
    X3,
    Xp1,
    Xp2,
    Xp3,
    ClosedForm,
}

impl Representation {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Hyp0F1 => "0F1",
            Self::SrivastavaDaoust => "SD",
            Self::HornH3 => "H3",
            Self::HornH3Confluent => "H3c",
            Self::HornH10 => "H10",
            Self::HumbertXi2 => "Xi2",
            Self::X1 => "X1",
            Self::X2 => "X2",
            Self::X3 => "X3",
            Self::Xp1 => "Xp1",
            Self::Xp2 => "Xp2",
            Self::Xp3 => "Xp3",
            Self::ClosedForm => "closed",
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Value of a truncated series together with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    /// Magnitude of the last accepted shell. A heuristic, not a bound.
    pub est_error: f64,
    pub representation: Representation,
    /// Set when the arguments sit on a convergence boundary that is admitted
    /// only through a parameter side condition; convergence is algebraic there.
    pub boundary: bool,
}

impl SeriesResult {
    pub(crate) fn exact(value: Complex64, representation: Representation) -> Self {
        Self {
            value,
            terms_used: 1,
            est_error: 0.0,
            representation,
            boundary: false,
        }
    }
}

/// Tracks the "three consecutive negligible contributions" stopping rule.
///
/// A contribution counts as negligible once it, scaled by the geometric
/// tail factor `ρ/(1 − ρ)` when that exceeds one, is below the threshold.
#[derive(Debug, Default)]
pub(crate) struct QuietCounter {
    quiet: u32,
    history: [f64; 2],
    seen: u32,
}

impl QuietCounter {
    pub(crate) const NEEDED: u32 = 3;

    /// Feeds one contribution; returns `true` once the series may stop.
    pub(crate) fn feed(&mut self, contribution: f64, partial: Complex64, tol_rel: f64) -> bool {
        let tail = if self.seen >= 2 && self.history[0] > 0.0 {
            let rho = (contribution / self.history[0]).sqrt();
            if rho < 1.0 { (rho / (1.0 - rho)).max(1.0) } else { 1.0 }
        } else {
            1.0
        };
        self.history = [self.history[1], contribution];
        self.seen += 1;
        if contribution * tail <= tol_rel * (1.0 + partial.norm()) {
            self.quiet += 1;
        } else {
            self.quiet = 0;
        }
        self.quiet >= Self::NEEDED
    }
}

pub(crate) fn is_nonpositive_integer(a: Complex64) -> bool {
    a.im == 0.0 && a.re <= 0.0 && a.re == a.re.round()
}

pub(crate) fn is_positive_integer(a: Complex64) -> bool {
    a.im == 0.0 && a.re >= 1.0 && a.re == a.re.round()
}

pub(crate) fn ensure_finite(value: Complex64, what: &str) -> crate::Result<Complex64> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(crate::Error::Domain(format!("{what} is not finite")))
    }
}
