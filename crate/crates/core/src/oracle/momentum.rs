//! `G1`, `G2` from the momentum-space integrals.
//!
//! For `x = (0, 0, r)` the `p3` integration is done by residues at the two
//! roots `p3² = −κ±²` of the quartic denominator, where
//!
//! ```text
//!   D = √(α²ρ² + β²),   κ± = √(ρ² − ζ ∓ D),   ρ = |(p1, p2)|.
//! ```
//!
//! The remaining radial integrals decay like `e^{−rρ}` and carry no
//! oscillatory tail:
//!
//! ```text
//!   G1 = (1/4π) ∫ ρ e^{−rκ−} [r·exprel(−r(κ+ − κ−))/κ+ + 1/(κ+κ−)]/(κ+ + κ−) dρ
//!   G2 = (1/8π) ∫ ρ [e^{−rκ+}/κ+ + e^{−rκ−}/κ−] dρ
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;

use super::quadrature::{integrate_semi_infinite, QuadResult, QuadratureConfig};
use crate::greens_function::PhysicalParams;
use crate::{Error, Result};

fn expm1(z: Complex64) -> Complex64 {
    let ex = z.re.exp_m1();
    let half = (0.5 * z.im).sin();
    Complex64::new(ex * z.im.cos() - 2.0 * half * half, (ex + 1.0) * z.im.sin())
}

/// `e^{−r k_hi} · r · exprel(r(k_hi − k_lo))`, evaluated from whichever
/// exponent decays.
fn exp_divided_difference(r: f64, k_lo: Complex64, k_hi: Complex64) -> Complex64 {
    // (e^{−r k_lo} − e^{−r k_hi})/(k_hi − k_lo)
    let d = k_hi - k_lo;
    let x = -r * d;
    let (base, arg) = if x.re <= 0.0 { (k_lo, x) } else { (k_hi, -x) };
    let ex = if arg.norm() < 1e-8 {
        Complex64::new(1.0, 0.0) + 0.5 * arg
    } else {
        expm1(arg) / arg
    };
    (-r * base).exp() * r * ex
}

fn roots(p: &PhysicalParams, rho: f64) -> (Complex64, Complex64) {
    let d = (p.alpha * p.alpha * rho * rho + p.beta * p.beta).sqrt();
    let base = rho * rho - p.zeta;
    ((base - d).sqrt(), (base + d).sqrt())
}

fn scale(p: &PhysicalParams, cfg: &QuadratureConfig) -> f64 {
    cfg.radial_map_scale.unwrap_or_else(|| p.zeta.norm().sqrt().max(1.0))
}

/// `G1` at `(0, 0, r)` with its quadrature error estimate.
pub fn quad_g1_detailed(r: f64, p: &PhysicalParams, cfg: &QuadratureConfig) -> Result<QuadResult> {
    p.validate()?;
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::InvalidInput(format!("r = {r} must be finite and ≥ 0")));
    }
    let f = |rho: f64| {
        let (kp, km) = roots(p, rho);
        let first = exp_divided_difference(r, kp, km) / kp;
        let second = (-r * km).exp() / (kp * km);
        rho * (first + second) / (kp + km)
    };
    let mut q = integrate_semi_infinite(f, scale(p, cfg), cfg)?;
    q.value /= 4.0 * PI;
    q.abs_error /= 4.0 * PI;
    Ok(q)
}

/// `G2` at `(0, 0, r)`, `r > 0`, with its quadrature error estimate.
pub fn quad_g2_detailed(r: f64, p: &PhysicalParams, cfg: &QuadratureConfig) -> Result<QuadResult> {
    p.validate()?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::OriginNotAllowed);
    }
    let f = |rho: f64| {
        let (kp, km) = roots(p, rho);
        rho * ((-r * kp).exp() / kp + (-r * km).exp() / km)
    };
    let mut q = integrate_semi_infinite(f, scale(p, cfg), cfg)?;
    q.value /= 8.0 * PI;
    q.abs_error /= 8.0 * PI;
    Ok(q)
}

pub fn quad_g1(r: f64, p: &PhysicalParams, cfg: &QuadratureConfig) -> Result<Complex64> {
    quad_g1_detailed(r, p, cfg).map(|q| q.value)
}

pub fn quad_g2(r: f64, p: &PhysicalParams, cfg: &QuadratureConfig) -> Result<Complex64> {
    quad_g2_detailed(r, p, cfg).map(|q| q.value)
}
