use num_complex::Complex64;

use crate::series_engine::horn::h3_region_contains;
use crate::series_engine::REGION_MARGIN;
use crate::{Error, Result};

/// Minimum distance between `ζ` and the essential spectrum `[−Σ, ∞)`.
pub const SPECTRUM_MARGIN: f64 = 1e-9;

/// Bottom `−Σ` of the essential spectrum is at `Σ = β` for `β > α²/2`,
/// otherwise `Σ = (β/α)² + (α/2)²`.
pub fn sigma_threshold(alpha: f64, beta: f64) -> f64 {
    if alpha == 0.0 || 2.0 * beta > alpha * alpha {
        beta
    } else {
        (beta / alpha).powi(2) + (alpha / 2.0).powi(2)
    }
}

/// Spin-orbit strength `α`, Zeeman field `β` and spectral parameter `ζ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    pub alpha: f64,
    pub beta: f64,
    pub zeta: Complex64,
}

impl PhysicalParams {
    /// Validated constructor.
    pub fn new(alpha: f64, beta: f64, zeta: Complex64) -> Result<Self> {
        let p = Self { alpha, beta, zeta };
        p.validate()?;
        Ok(p)
    }

    /// Constructor without the resolvent-set check, for diagnostics.
    pub fn unchecked(alpha: f64, beta: f64, zeta: Complex64) -> Self {
        Self { alpha, beta, zeta }
    }

    pub fn sigma(&self) -> f64 {
        sigma_threshold(self.alpha, self.beta)
    }

    /// Euclidean distance from `ζ` to `[−Σ, ∞)`.
    pub fn spectrum_distance(&self) -> f64 {
        let s = self.sigma();
        if self.zeta.re >= -s {
            self.zeta.im.abs()
        } else {
            (self.zeta + s).norm()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha.is_finite() && self.alpha >= 0.0) {
            return Err(Error::InvalidInput(format!("alpha = {} must be finite and ≥ 0", self.alpha)));
        }
        if !(self.beta.is_finite() && self.beta >= 0.0) {
            return Err(Error::InvalidInput(format!("beta = {} must be finite and ≥ 0", self.beta)));
        }
        if !(self.zeta.re.is_finite() && self.zeta.im.is_finite()) {
            return Err(Error::InvalidInput("zeta must be finite".into()));
        }
        if self.spectrum_distance() <= SPECTRUM_MARGIN {
            return Err(Error::InvalidZeta {
                zeta: self.zeta,
                sigma: self.sigma(),
            });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

/// Position `x ∈ ℝ³`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    x1: f64,
    x2: f64,
    x3: f64,
    r: f64,
}

impl EvalPoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self {
            x1,
            x2,
            x3,
            r: x1.hypot(x2).hypot(x3),
        }
    }

    /// The point `(0, 0, r)`.
    pub fn on_axis(r: f64) -> Self {
        Self::new(0.0, 0.0, r)
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn x3(&self) -> f64 {
        self.x3
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// `x1 + i·sign·x2`.
    pub(crate) fn transverse(&self, sign: f64) -> Complex64 {
        Complex64::new(self.x1, sign * self.x2)
    }
}

/// Which of the convergence conditions (a), (b), (c) hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TheoremConditions {
    /// `2β > α²` and `β ≤ |ζ| < 2(β/α)²`.
    pub a: bool,
    /// `|ζ| ≥ Σ`, equality only when `2β < α²`.
    pub b: bool,
    /// `|ζ| > max(β/(2√R), α²/(4S))` for some `R + (S − 1/2)² = 1/4`.
    pub c: bool,
}

impl TheoremConditions {
    pub fn any(&self) -> bool {
        self.a || self.b || self.c
    }
}

/// Evaluates the three conditions without checking `ζ`.
///
/// Condition (c) is the `H3` region test on `(β²/(4|ζ|²), α²/(4|ζ|))`,
/// the closed-form envelope of the cone of polydiscs.
pub fn theorem_flags(p: &PhysicalParams) -> TheoremConditions {
    let (alpha, beta) = (p.alpha, p.beta);
    let t = p.zeta.norm();
    let a2 = alpha * alpha;
    let tol = REGION_MARGIN;

    let a = 2.0 * beta > a2 && {
        let upper = if alpha == 0.0 { f64::INFINITY } else { 2.0 * (beta / alpha).powi(2) };
        t >= beta * (1.0 - tol) && t < upper * (1.0 - tol)
    };

    let sigma = p.sigma();
    let b = t > sigma * (1.0 + tol) || ((t - sigma).abs() <= tol * sigma.max(1.0) && 2.0 * beta < a2);

    let c = t > 0.0 && h3_region_contains(beta * beta / (4.0 * t * t), a2 / (4.0 * t));

    TheoremConditions { a, b, c }
}

/// Conditions (a), (b), (c) for valid parameters; [`Error::NoValidRegion`]
/// when none holds.
pub fn theorem_conditions(p: &PhysicalParams) -> Result<TheoremConditions> {
    p.validate()?;
    let flags = theorem_flags(p);
    if flags.any() {
        Ok(flags)
    } else {
        Err(Error::NoValidRegion(String::new()))
    }
}
