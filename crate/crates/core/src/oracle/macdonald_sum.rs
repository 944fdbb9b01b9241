//! Double sums of half-integer Macdonald functions
//!
//! ```text
//!   S1 = Σ_{m≥0} Σ_{n≤m} m! x^m y^n / ((2m+1)! (m−n)!) · K_{2m−n+1/2}(z)
//!   S2 = Σ_{m≥0} Σ_{n≤m} m! x^m y^n / ((2m)!   (m−n)!) · K_{2m−n−1/2}(z)
//! ```
//!
//! with `G1 = √r/(4π√(2π)(−ζ)^{1/4}) S1` and `G2 = (−ζ)^{1/4}/(2π√(2πr)) S2`
//! at `x = −β²r²/(4ζ)`, `xy = α²r/(2√(−ζ))`, `z = r√(−ζ)`.
//! Terms are formed in log space so that neither factorials nor `K_ν` at
//! large order overflow.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::greens_function::PhysicalParams;
use crate::series_engine::ln_macdonald_k_half_seq;
use crate::xy_series::{classify_xprime_region, eval_x, eval_x_prime, RepChoice, SeriesParams, TripleArg};
use crate::{Error, Result};

const ROW_TOL: f64 = 1e-14;
const MAX_ROWS: usize = 6000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MacdonaldKind {
    /// `(2m+1)!` and `K_{2m−n+1/2}`, the `G1` sum.
    First,
    /// `(2m)!` and `K_{2m−n−1/2}`, the `G2` sum.
    Second,
}

/// Arguments `(x, y, z)` of the double sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MacdonaldSumArgs {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl MacdonaldSumArgs {
    /// The physical arguments; `None` when `β = 0` (then `y` is infinite).
    pub fn physical(r: f64, p: &PhysicalParams) -> Option<Self> {
        if p.beta == 0.0 {
            return None;
        }
        let sq = (-p.zeta).sqrt();
        Some(Self {
            x: -p.beta * p.beta * r * r / (4.0 * p.zeta),
            y: 2.0 * p.alpha * p.alpha * sq / (p.beta * p.beta * r),
            z: r * sq,
        })
    }

    /// `(x/z², yz/2, −z²/4)`, the `X′` argument of the closed-form side.
    pub fn xprime_arg(&self) -> TripleArg {
        let z2 = self.z * self.z;
        TripleArg::new(self.x / z2, self.y * self.z / 2.0, -z2 / 4.0)
    }

    /// `(xz²/16, −xyz/8, z²/4)`, the `X` argument of the closed-form side.
    pub fn x_arg(&self) -> TripleArg {
        let z2 = self.z * self.z;
        TripleArg::new(self.x * z2 / 16.0, -self.x * self.y * self.z / 8.0, z2 / 4.0)
    }
}

fn ln_factorials(n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    out.push(0.0);
    for k in 1..=n {
        acc += (k as f64).ln();
        out.push(acc);
    }
    out
}

/// Logarithm of a base, or `None` for an exactly zero base.
fn ln_base(b: Complex64) -> Option<Complex64> {
    if b.norm() == 0.0 {
        None
    } else {
        Some(b.ln())
    }
}

/// Sums `S1` or `S2` from `x`, the product `xy` and `z`.
fn double_sum_xy(kind: MacdonaldKind, x: Complex64, xy: Complex64, z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 || (z.im == 0.0 && z.re < 0.0) {
        return Err(Error::Domain(format!("K_ν(z) needs z off (−∞, 0]; got {z}")));
    }
    let lx = ln_base(x);
    let lxy = ln_base(xy);
    let mut lnk = ln_macdonald_k_half_seq(z, 64)?;
    let lf = ln_factorials(2 * MAX_ROWS + 2);

    let mut sum = Complex64::new(0.0, 0.0);
    let mut quiet = 0;
    for m in 0..MAX_ROWS {
        let need = 2 * m + 2;
        if lnk.len() <= need {
            lnk = ln_macdonald_k_half_seq(z, 2 * need)?;
        }
        let denom = match kind {
            MacdonaldKind::First => lf[2 * m + 1],
            MacdonaldKind::Second => lf[2 * m],
        };
        let mut row = Complex64::new(0.0, 0.0);
        let mut row_abs = 0.0;
        for n in 0..=m {
            let px = m - n;
            let mut l = Complex64::new(lf[m] - denom - lf[px], 0.0);
            match (px, lx) {
                (0, _) => {}
                (_, Some(v)) => l += px as f64 * v,
                (_, None) => continue,
            }
            match (n, lxy) {
                (0, _) => {}
                (_, Some(v)) => l += n as f64 * v,
                (_, None) => continue,
            }
            let j = match kind {
                MacdonaldKind::First => (2 * m - n) as i64,
                MacdonaldKind::Second => (2 * m - n) as i64 - 1,
            };
            let j = if j < 0 { -j - 1 } else { j } as usize;
            let t = (l + lnk[j]).exp();
            row += t;
            row_abs += t.norm();
        }
        sum += row;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::Domain("Macdonald double sum overflowed".into()));
        }
        if row_abs <= ROW_TOL * sum.norm() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence {
        terms: MAX_ROWS,
        est_error: f64::NAN,
    })
}

fn check_region(args: &MacdonaldSumArgs) -> Result<()> {
    let regions = classify_xprime_region(&args.xprime_arg(), &SeriesParams::real(0.5, 1.5));
    if regions.is_empty() {
        Err(Error::OutOfRegion(
            "(x, y, z) outside every convergence region of the double sum".into(),
        ))
    } else {
        Ok(())
    }
}

/// `S1` or `S2` at general in-region arguments.
pub fn macdonald_double_sum(kind: MacdonaldKind, args: &MacdonaldSumArgs) -> Result<Complex64> {
    check_region(args)?;
    double_sum_xy(kind, args.x, args.x * args.y, args.z)
}

/// Closed-form side of the double-sum identity:
///
/// ```text
///   S1 = √(π/2z) X′(1/2,3/2; x/z², yz/2, −z²/4) − √(πz/2) X(3/2,3/2; xz²/16, −xyz/8, z²/4)
///   S2 = √(π/2z) X(1/2,1/2; …) − √(πz/2) X′(−1/2,1/2; …)
/// ```
pub fn lemma_rhs(kind: MacdonaldKind, args: &MacdonaldSumArgs) -> Result<Complex64> {
    let z = args.z;
    let small = (PI / (2.0 * z)).sqrt();
    let large = (PI * z / 2.0).sqrt();
    let (v, u) = (args.xprime_arg(), args.x_arg());
    match kind {
        MacdonaldKind::First => {
            let xp = eval_x_prime(&SeriesParams::real(0.5, 1.5), &v, RepChoice::Auto)?.value;
            let x = eval_x(&SeriesParams::real(1.5, 1.5), &u, RepChoice::Auto)?.value;
            Ok(small * xp - large * x)
        }
        MacdonaldKind::Second => {
            let x = eval_x(&SeriesParams::real(0.5, 0.5), &u, RepChoice::Auto)?.value;
            let xp = eval_x_prime(&SeriesParams::real(-0.5, 0.5), &v, RepChoice::Auto)?.value;
            Ok(small * x - large * xp)
        }
    }
}

fn physical_sum(kind: MacdonaldKind, r: f64, p: &PhysicalParams) -> Result<Complex64> {
    p.validate()?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidInput(format!("r = {r} must be finite and > 0")));
    }
    let sq = (-p.zeta).sqrt();
    let z = r * sq;
    match MacdonaldSumArgs::physical(r, p) {
        Some(args) => check_region(&args)?,
        None => {
            if p.alpha * p.alpha / (4.0 * p.zeta.norm()) >= 1.0 {
                return Err(Error::OutOfRegion("β = 0 needs |ζ| > α²/4".into()));
            }
        }
    }
    let x = -p.beta * p.beta * r * r / (4.0 * p.zeta);
    let xy = p.alpha * p.alpha * r / (2.0 * sq);
    double_sum_xy(kind, x, xy, z)
}

/// `G1` at distance `r` from the `G1` double sum.
pub fn macdonald_sum_g1(r: f64, p: &PhysicalParams) -> Result<Complex64> {
    let s = physical_sum(MacdonaldKind::First, r, p)?;
    let q = (-p.zeta).sqrt().sqrt();
    Ok(s * r.sqrt() / (4.0 * PI * (2.0 * PI).sqrt() * q))
}

/// `G2` at distance `r` from the `G2` double sum.
pub fn macdonald_sum_g2(r: f64, p: &PhysicalParams) -> Result<Complex64> {
    let s = physical_sum(MacdonaldKind::Second, r, p)?;
    let q = (-p.zeta).sqrt().sqrt();
    Ok(s * q / (2.0 * PI * (2.0 * PI * r).sqrt()))
}
