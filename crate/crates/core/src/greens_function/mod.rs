//! Green's function of the Rashba Hamiltonian
//!
//! ```text
//!   𝒢(x) = [ G2 − βG1    −α D₋G1 ]
//!          [ α D₊G1     G2 + βG1 ]
//! ```
//!
//! with `G1`, `G2` expressed through `X` and `X′` at the argument triples
//!
//! ```text
//!   v = (β²/(4ζ²), −ζα²/β², ζr²/4),   u = (β²r⁴/64, −α²r²/16, −ζr²/4).
//! ```

mod closed_forms;
mod params;

use std::f64::consts::PI;

use num_complex::Complex64;

pub use params::{
    sigma_threshold, theorem_conditions, theorem_flags, EvalPoint, PhysicalParams,
    TheoremConditions,
};

use crate::series_engine::horn::horn_h3_confluent_with;
use crate::series_engine::{Representation, SeriesConfig, SeriesResult};
use crate::xy_series::{dx_d2_with, eval_x_prime_with, eval_x_with, RepChoice, SeriesParams, TripleArg};
use crate::{Error, Result};
use closed_forms::AlphaZeroRoots;

/// Parameters below this are treated as exactly zero.
pub const DEGENERATE_EPS: f64 = 1e-10;

/// Sign of `D± = ∂1 ± i∂2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Which formula produced a [`GreenValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalPath {
    /// `α = β = 0`, elementary exponential.
    Free,
    /// `α = 0`, elementary exponentials.
    AlphaZeroClosedForm,
    /// `α = 0` through the general series (`X′` collapses to `Ｈ10`).
    AlphaZeroSeries,
    /// `β = 0`, `X′` replaced by its confluent limit `Ｈ3`.
    BetaZeroSeries,
    /// `r = 0`, inverse-hyperbolic-tangent closed forms.
    OriginClosedForm,
    /// `r = 0` through `X′` at `ζ3 = 0`.
    OriginSeries,
    /// General `X`/`X′` expansion.
    Theorem,
}

impl EvalPath {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Free => "free",
            Self::AlphaZeroClosedForm => "alpha0-closed",
            Self::AlphaZeroSeries => "alpha0-series",
            Self::BetaZeroSeries => "beta0-series",
            Self::OriginClosedForm => "origin-closed",
            Self::OriginSeries => "origin-series",
            Self::Theorem => "theorem",
        }
    }
}

/// A Green's-function value with its provenance and truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenValue {
    pub value: Complex64,
    pub path: EvalPath,
    /// `X′` representation (or the two-variable function standing in for it).
    pub representation: Option<Representation>,
    pub terms_used: usize,
    pub est_error: f64,
    pub boundary: bool,
}

impl GreenValue {
    fn closed(value: Complex64, path: EvalPath) -> Self {
        Self {
            value,
            path,
            representation: Some(Representation::ClosedForm),
            terms_used: 0,
            est_error: 0.0,
            boundary: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenOptions {
    /// Use elementary closed forms where they exist.
    pub prefer_closed_form: bool,
    /// Representation forced on every `X′` evaluation.
    pub xprime_rep: RepChoice,
    pub series: SeriesConfig,
}

impl Default for GreenOptions {
    fn default() -> Self {
        Self {
            prefer_closed_form: true,
            xprime_rep: RepChoice::Auto,
            series: SeriesConfig::default(),
        }
    }
}

impl GreenOptions {
    pub fn series_only() -> Self {
        Self {
            prefer_closed_form: false,
            ..Self::default()
        }
    }
}

/// 2×2 Green's matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenMatrix {
    pub g11: Complex64,
    pub g12: Complex64,
    pub g21: Complex64,
    pub g22: Complex64,
}

/// Accumulates several series into one linear combination.
#[derive(Default)]
struct Combination {
    value: Complex64,
    terms: usize,
    err: f64,
    rep: Option<Representation>,
    boundary: bool,
}

impl Combination {
    fn add(&mut self, coef: Complex64, s: &SeriesResult) {
        self.value += coef * s.value;
        self.terms += s.terms_used;
        self.err += coef.norm() * s.est_error;
        self.boundary |= s.boundary;
    }

    fn add_xprime(&mut self, coef: Complex64, s: &SeriesResult) {
        self.add(coef, s);
        self.rep = Some(s.representation);
    }

    fn add_const(&mut self, c: Complex64) {
        self.value += c;
    }

    fn finish(self, path: EvalPath) -> GreenValue {
        GreenValue {
            value: self.value,
            path,
            representation: self.rep,
            terms_used: self.terms,
            est_error: self.err,
            boundary: self.boundary,
        }
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Validated parameters with degenerate values snapped to zero.
struct Ctx<'a> {
    alpha: f64,
    beta: f64,
    zeta: Complex64,
    /// `√(−ζ)`, principal branch.
    sq: Complex64,
    opts: &'a GreenOptions,
}

impl<'a> Ctx<'a> {
    fn new(p: &PhysicalParams, opts: &'a GreenOptions) -> Result<Self> {
        p.validate()?;
        let snap = |v: f64| if v < DEGENERATE_EPS { 0.0 } else { v };
        Ok(Self {
            alpha: snap(p.alpha),
            beta: snap(p.beta),
            zeta: p.zeta,
            sq: (-p.zeta).sqrt(),
            opts,
        })
    }

    fn roots(&self) -> AlphaZeroRoots {
        AlphaZeroRoots::new(self.beta, self.zeta)
    }

    fn closed_alpha_zero(&self) -> Option<EvalPath> {
        if !self.opts.prefer_closed_form || self.alpha != 0.0 {
            None
        } else if self.beta == 0.0 {
            Some(EvalPath::Free)
        } else {
            Some(EvalPath::AlphaZeroClosedForm)
        }
    }

    fn series_path(&self) -> EvalPath {
        if self.beta == 0.0 {
            EvalPath::BetaZeroSeries
        } else if self.alpha == 0.0 {
            EvalPath::AlphaZeroSeries
        } else {
            EvalPath::Theorem
        }
    }

    fn v(&self, r: f64) -> TripleArg {
        let (a2, b2) = (self.alpha * self.alpha, self.beta * self.beta);
        TripleArg::new(
            b2 / (4.0 * self.zeta * self.zeta),
            -self.zeta * a2 / b2,
            self.zeta * r * r / 4.0,
        )
    }

    fn u(&self, r: f64) -> TripleArg {
        let (a2, b2) = (self.alpha * self.alpha, self.beta * self.beta);
        let r2 = r * r;
        TripleArg::new(re(b2 * r2 * r2 / 64.0), re(-a2 * r2 / 16.0), -self.zeta * r2 / 4.0)
    }

    /// `X′(a,b; v)`, or its confluent limit `Ｈ3(a,1;b; −α²/(4ζ), v3)` at `β = 0`.
    fn xprime_v(&self, a: f64, b: f64, r: f64) -> Result<SeriesResult> {
        let cfg = &self.opts.series;
        if self.beta == 0.0 {
            let w = -self.alpha * self.alpha / (4.0 * self.zeta);
            return horn_h3_confluent_with(re(a), re(1.0), re(b), w, self.zeta * r * r / 4.0, cfg)
                .map_err(region_error);
        }
        let v = self.v(r);
        eval_x_prime_with(&SeriesParams::real(a, b), &v, self.opts.xprime_rep, cfg).map_err(region_error)
    }

    fn x_u(&self, a: f64, b: f64, r: f64) -> Result<SeriesResult> {
        eval_x_with(&SeriesParams::real(a, b), &self.u(r), RepChoice::Auto, &self.opts.series)
    }

    fn g1_series(&self, r: f64) -> Result<GreenValue> {
        let mut acc = Combination::default();
        let xp = self.xprime_v(0.5, 1.5, r)?;
        acc.add_xprime((8.0 * PI * self.sq).inv(), &xp);
        if r > 0.0 {
            let x = self.x_u(1.5, 1.5, r)?;
            acc.add(re(-r / (8.0 * PI)), &x);
        }
        let path = if r == 0.0 { EvalPath::OriginSeries } else { self.series_path() };
        Ok(acc.finish(path))
    }

    fn g2_series(&self, r: f64) -> Result<GreenValue> {
        let mut acc = Combination::default();
        let x = self.x_u(0.5, 0.5, r)?;
        acc.add(re((4.0 * PI * r).recip()), &x);
        let xp = self.xprime_v(-0.5, 0.5, r)?;
        acc.add_xprime(-self.sq / (4.0 * PI), &xp);
        Ok(acc.finish(self.series_path()))
    }

    fn g2_ren_origin_series(&self) -> Result<GreenValue> {
        let mut acc = Combination::default();
        let xp = self.xprime_v(-0.5, 0.5, 0.0)?;
        acc.add_const(self.sq / (4.0 * PI));
        acc.add_xprime(-self.sq / (4.0 * PI), &xp);
        Ok(acc.finish(EvalPath::OriginSeries))
    }

    /// `D±G1/(x1 ± i x2)`.
    fn dpm_reduced_series(&self, r: f64) -> Result<GreenValue> {
        let mut acc = Combination::default();
        let k = re((8.0 * PI).recip());
        let xp = self.xprime_v(-0.5, 1.5, r)?;
        acc.add_xprime(k * self.sq, &xp);
        let x33 = self.x_u(1.5, 1.5, r)?;
        acc.add(k * (-1.0 / r), &x33);
        if self.beta != 0.0 {
            let x75 = self.x_u(3.5, 2.5, r)?;
            acc.add(k * (-0.5 * r * self.beta * self.beta * r * r / 45.0), &x75);
        }
        let x53 = self.x_u(2.5, 1.5, r)?;
        acc.add(k * (0.5 * r) * (2.0 * self.zeta / 3.0), &x53);
        if self.alpha != 0.0 {
            let d2 = dx_d2_with(&SeriesParams::real(1.5, 1.5), &self.u(r), &self.opts.series)?;
            acc.add(k * (0.5 * r * self.alpha * self.alpha / 4.0), &d2);
        }
        Ok(acc.finish(self.series_path()))
    }
}

fn region_error(e: Error) -> Error {
    match e {
        Error::OutOfRegion(msg) => Error::NoValidRegion(format!(": {msg}")),
        other => other,
    }
}

/// The argument triples `(v, u)` at distance `r`; `v` is `None` at `β = 0`.
pub fn argument_triples(p: &PhysicalParams, r: f64) -> (Option<TripleArg>, TripleArg) {
    let opts = GreenOptions::default();
    let ctx = Ctx {
        alpha: p.alpha,
        beta: p.beta,
        zeta: p.zeta,
        sq: (-p.zeta).sqrt(),
        opts: &opts,
    };
    let v = (p.beta >= DEGENERATE_EPS).then(|| ctx.v(r));
    (v, ctx.u(r))
}

pub fn g1(x: &EvalPoint, p: &PhysicalParams) -> Result<Complex64> {
    g1_detailed(x, p, &GreenOptions::default()).map(|v| v.value)
}

/// Diagonal kernel `G1` with provenance.
pub fn g1_detailed(x: &EvalPoint, p: &PhysicalParams, opts: &GreenOptions) -> Result<GreenValue> {
    let ctx = Ctx::new(p, opts)?;
    let r = x.r();
    if r < DEGENERATE_EPS {
        return g1_at_origin_detailed(p, opts);
    }
    if let Some(path) = ctx.closed_alpha_zero() {
        let v = if path == EvalPath::Free {
            (-r * ctx.sq).exp() / (8.0 * PI * ctx.sq)
        } else {
            ctx.roots().g1(r)
        };
        return Ok(GreenValue::closed(v, path));
    }
    ctx.g1_series(r)
}

pub fn g2(x: &EvalPoint, p: &PhysicalParams) -> Result<Complex64> {
    g2_detailed(x, p, &GreenOptions::default()).map(|v| v.value)
}

/// Diagonal kernel `G2` with provenance. Singular at the origin.
pub fn g2_detailed(x: &EvalPoint, p: &PhysicalParams, opts: &GreenOptions) -> Result<GreenValue> {
    let ctx = Ctx::new(p, opts)?;
    let r = x.r();
    if r < DEGENERATE_EPS {
        return Err(Error::OriginNotAllowed);
    }
    if let Some(path) = ctx.closed_alpha_zero() {
        return Ok(GreenValue::closed(ctx.roots().g2(r), path));
    }
    ctx.g2_series(r)
}

pub fn g1_at_origin(p: &PhysicalParams) -> Result<Complex64> {
    g1_at_origin_detailed(p, &GreenOptions::default()).map(|v| v.value)
}

/// `G1(0)`: closed form, or `X′(1/2, 3/2; v1, v2, 0)/(8π√(−ζ))`.
pub fn g1_at_origin_detailed(p: &PhysicalParams, opts: &GreenOptions) -> Result<GreenValue> {
    let ctx = Ctx::new(p, opts)?;
    if opts.prefer_closed_form {
        let v = closed_forms::g1_origin(ctx.alpha, ctx.beta, ctx.zeta);
        return Ok(GreenValue::closed(v, EvalPath::OriginClosedForm));
    }
    ctx.g1_series(0.0)
}

pub fn g2_ren(x: &EvalPoint, p: &PhysicalParams) -> Result<Complex64> {
    g2_ren_detailed(x, p, &GreenOptions::default()).map(|v| v.value)
}

/// `G2(x) − e^{−r√(−ζ)}/(4πr)`, finite at the origin.
pub fn g2_ren_detailed(x: &EvalPoint, p: &PhysicalParams, opts: &GreenOptions) -> Result<GreenValue> {
    let ctx = Ctx::new(p, opts)?;
    let r = x.r();
    if r < DEGENERATE_EPS {
        return g2_ren_at_origin_detailed(p, opts);
    }
    if let Some(path) = ctx.closed_alpha_zero() {
        let v = if path == EvalPath::Free {
            Complex64::new(0.0, 0.0)
        } else {
            ctx.roots().g2_ren(r)
        };
        return Ok(GreenValue::closed(v, path));
    }
    let mut g = ctx.g2_series(r)?;
    g.value -= (-r * ctx.sq).exp() / (4.0 * PI * r);
    Ok(g)
}

pub fn g2_ren_at_origin(p: &PhysicalParams) -> Result<Complex64> {
    g2_ren_at_origin_detailed(p, &GreenOptions::default()).map(|v| v.value)
}

/// `G2ren(0)`: closed form, or `(√(−ζ)/4π)(1 − X′(−1/2, 1/2; v1, v2, 0))`.
pub fn g2_ren_at_origin_detailed(p: &PhysicalParams, opts: &GreenOptions) -> Result<GreenValue> {
    let ctx = Ctx::new(p, opts)?;
    if opts.prefer_closed_form {
        let v = closed_forms::g2_ren_origin(ctx.alpha, ctx.beta, ctx.zeta);
        return Ok(GreenValue::closed(v, EvalPath::OriginClosedForm));
    }
    ctx.g2_ren_origin_series()
}

pub fn dpm_g1(x: &EvalPoint, p: &PhysicalParams, sign: Sign) -> Result<Complex64> {
    dpm_g1_detailed(x, p, sign, &GreenOptions::default()).map(|v| v.value)
}

/// Off-diagonal kernel `D±G1 = (∂1 ± i∂2) G1`.
pub fn dpm_g1_detailed(x: &EvalPoint, p: &PhysicalParams, sign: Sign, opts: &GreenOptions) -> Result<GreenValue> {
    let mut v = dpm_reduced(x, p, opts)?;
    v.value *= x.transverse(sign.as_f64());
    Ok(v)
}

fn dpm_reduced(x: &EvalPoint, p: &PhysicalParams, opts: &GreenOptions) -> Result<GreenValue> {
    let ctx = Ctx::new(p, opts)?;
    let r = x.r();
    if r < DEGENERATE_EPS {
        return Err(Error::Domain("D±G1 has a direction-dependent limit at the origin".into()));
    }
    if let Some(path) = ctx.closed_alpha_zero() {
        let v = if path == EvalPath::Free {
            -(-r * ctx.sq).exp() / (8.0 * PI * r)
        } else {
            ctx.roots().dpm_g1_reduced(r)
        };
        return Ok(GreenValue::closed(v, path));
    }
    ctx.dpm_reduced_series(r)
}

pub fn green_matrix(x: &EvalPoint, p: &PhysicalParams) -> Result<GreenMatrix> {
    green_matrix_with(x, p, &GreenOptions::default())
}

/// Assembles the 2×2 Green's matrix. Off-diagonal entries are exactly zero at `α = 0`.
pub fn green_matrix_with(x: &EvalPoint, p: &PhysicalParams, opts: &GreenOptions) -> Result<GreenMatrix> {
    let g1v = g1_detailed(x, p, opts)?.value;
    let g2v = g2_detailed(x, p, opts)?.value;
    let beta = p.beta;
    let (g12, g21) = if p.alpha < DEGENERATE_EPS {
        (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    } else {
        let d = dpm_reduced(x, p, opts)?.value;
        (
            -p.alpha * x.transverse(-1.0) * d,
            p.alpha * x.transverse(1.0) * d,
        )
    };
    Ok(GreenMatrix {
        g11: g2v - beta * g1v,
        g12,
        g21,
        g22: g2v + beta * g1v,
    })
}

/// Green's matrix of the unitarily equivalent Dresselhaus Hamiltonian:
/// `U m U†` with `U = (−1)ⁿ e^{iδ} diag(1, i)`.
pub fn to_dresselhaus(m: &GreenMatrix, delta: f64, n: i64) -> GreenMatrix {
    let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let phase = Complex64::from_polar(sign, delta);
    let u = [phase, phase * Complex64::i()];
    let entries = [[m.g11, m.g12], [m.g21, m.g22]];
    let e = |j: usize, k: usize| u[j] * entries[j][k] * u[k].conj();
    GreenMatrix {
        g11: e(0, 0),
        g12: e(0, 1),
        g21: e(1, 0),
        g22: e(1, 1),
    }
}
