use num_complex::Complex64;

use super::region::{classify_xprime_region, x_gauge, xprime_gauge, Membership};
use super::{RepChoice, SeriesParams, TripleArg};
use crate::series_engine::double_series::{srivastava_daoust_with, Factor, SdSpec};
use crate::series_engine::horn::{horn_h10_with, horn_h3_with, humbert_xi2_with};
use crate::series_engine::{
    is_nonpositive_integer, is_positive_integer, QuietCounter, Representation, SeriesConfig,
    SeriesResult,
};
use crate::{Error, Result};

fn c1() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn is_zero(z: Complex64) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// Sums `Σ_n coef_n · inner_n` with the three-quiet-terms rule.
///
/// `next_coef(n, c_n)` returns `c_{n+1}`; `inner(n, cfg)` evaluates the
/// two-variable coefficient function. Only `n = 0` is used when `single`.
/// When the terms cancel by a factor `κ`, the pass is repeated with the
/// inner tolerance divided by `κ`.
fn outer_sum(
    cfg: &SeriesConfig,
    rep: Representation,
    single: bool,
    mut next_coef: impl FnMut(usize, Complex64) -> Complex64,
    mut inner: impl FnMut(usize, &SeriesConfig) -> Result<SeriesResult>,
) -> Result<SeriesResult> {
    let (first, magnitude) = outer_pass(cfg, cfg, rep, single, &mut next_coef, &mut inner)?;
    let kappa = magnitude / first.value.norm();
    if single || !(kappa > CANCELLATION_RETRY) {
        return Ok(first);
    }
    let inner_cfg = SeriesConfig { tol_rel: (cfg.tol_rel / kappa).max(MIN_INNER_TOL), ..*cfg };
    match outer_pass(cfg, &inner_cfg, rep, single, &mut next_coef, &mut inner) {
        Ok((refined, _)) => Ok(refined),
        Err(_) => Ok(first),
    }
}

const CANCELLATION_RETRY: f64 = 10.0;
const MIN_INNER_TOL: f64 = 1e-17;

fn outer_pass(
    cfg: &SeriesConfig,
    inner_cfg: &SeriesConfig,
    rep: Representation,
    single: bool,
    next_coef: &mut impl FnMut(usize, Complex64) -> Complex64,
    inner: &mut impl FnMut(usize, &SeriesConfig) -> Result<SeriesResult>,
) -> Result<(SeriesResult, f64)> {
    let mut coef = c1();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut inner_err = 0.0;
    let mut magnitude = 0.0;
    let mut quiet = QuietCounter::default();
    let mut last = 0.0;
    let cap = if single { 1 } else { cfg.max_outer };
    for n in 0..cap {
        let contribution = if is_zero(coef) {
            Complex64::new(0.0, 0.0)
        } else {
            let f = inner(n, inner_cfg)?;
            inner_err += coef.norm() * f.est_error;
            coef * f.value
        };
        sum += contribution;
        last = contribution.norm();
        magnitude += last;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::Domain(format!("outer series of {rep} overflowed")));
        }
        if single || quiet.feed(last, sum, cfg.tol_rel) {
            let result = SeriesResult {
                value: sum,
                terms_used: n + 1,
                est_error: if single { inner_err } else { last + inner_err },
                representation: rep,
                boundary: false,
            };
            return Ok((result, magnitude));
        }
        coef = next_coef(n, coef);
    }
    Err(Error::NoConvergence {
        terms: cap,
        est_error: last,
    })
}

fn check_x_params(p: &SeriesParams) -> Result<()> {
    for v in [p.a, p.b] {
        if is_nonpositive_integer(v) {
            return Err(Error::ParameterPole { param: v });
        }
    }
    Ok(())
}

fn check_xprime_params(p: &SeriesParams) -> Result<()> {
    if is_positive_integer(p.a) {
        return Err(Error::Domain(format!(
            "X′ is undefined for a = {} (a positive integer)",
            p.a
        )));
    }
    if is_nonpositive_integer(p.b) {
        return Err(Error::ParameterPole { param: p.b });
    }
    Ok(())
}

fn check_arg(z: &TripleArg) -> Result<()> {
    if z.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput("non-finite series argument".into()))
    }
}

/// `F^{0:0;0}_{1:1;0}((a:2,1):(b:1);-;z1,z3) = Σ z1^m z3^p/(m!p!(a)_{2m+p}(b)_m)`.
pub fn kdf_a21_b1(a: Complex64, b: Complex64, z1: Complex64, z3: Complex64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    let spec = SdSpec::new(vec![], vec![Factor::joint(a, 2, 1), Factor::first(b)]);
    srivastava_daoust_with(&spec, z1, z3, cfg)
}

fn x_rep(p: &SeriesParams, z: &TripleArg, rep: Representation, cfg: &SeriesConfig) -> Result<SeriesResult> {
    let (a, b) = (p.a, p.b);
    match rep {
        Representation::X1 => outer_sum(
            cfg,
            rep,
            is_zero(z.z1),
            |n, c| {
                let nf = n as f64;
                c * z.z1 / ((nf + 1.0) * (a + 2.0 * nf) * (a + 2.0 * nf + 1.0) * (b + nf))
            },
            |n, cfg| {
                let nf = n as f64;
                let spec = SdSpec::new(
                    vec![Factor::first(c1())],
                    vec![Factor::joint(a + 2.0 * nf, 1, 1), Factor::first(b + nf)],
                );
                srivastava_daoust_with(&spec, z.z2, z.z3, cfg)
            },
        ),
        Representation::X2 => outer_sum(
            cfg,
            rep,
            is_zero(z.z2),
            |n, c| {
                let nf = n as f64;
                c * z.z2 / ((a + nf) * (b + nf))
            },
            |n, cfg| kdf_a21_b1(a + n as f64, b + n as f64, z.z1, z.z3, cfg),
        ),
        Representation::X3 => outer_sum(
            cfg,
            rep,
            is_zero(z.z3),
            |n, c| {
                let nf = n as f64;
                c * z.z3 / ((nf + 1.0) * (a + nf))
            },
            |n, cfg| {
                let spec = SdSpec::new(
                    vec![Factor::second(c1())],
                    vec![Factor::joint(a + n as f64, 2, 1), Factor::joint(b, 1, 1)],
                );
                srivastava_daoust_with(&spec, z.z1, z.z2, cfg)
            },
        ),
        other => Err(Error::InvalidInput(format!("{other} is not a representation of X"))),
    }
}

pub fn eval_x(p: &SeriesParams, z: &TripleArg, rep: RepChoice) -> Result<SeriesResult> {
    eval_x_with(p, z, rep, &SeriesConfig::default())
}

/// Evaluates `X(a,b;ζ)`. Every representation converges for all finite `ζ`;
/// `Auto` picks the one whose outer variable is smallest relative to the
/// parameters.
pub fn eval_x_with(p: &SeriesParams, z: &TripleArg, rep: RepChoice, cfg: &SeriesConfig) -> Result<SeriesResult> {
    check_x_params(p)?;
    check_arg(z)?;
    match rep.representation() {
        Some(r) => x_rep(p, z, r, cfg),
        None => {
            let mut order = [Representation::X1, Representation::X2, Representation::X3];
            order.sort_by(|l, r| x_gauge(*l, p, z).total_cmp(&x_gauge(*r, p, z)));
            first_success(order.iter().map(|r| x_rep(p, z, *r, cfg)))
        }
    }
}

fn first_success(attempts: impl Iterator<Item = Result<SeriesResult>>) -> Result<SeriesResult> {
    let mut first_err = None;
    for a in attempts {
        match a {
            Ok(v) => return Ok(v),
            Err(e @ (Error::NoConvergence { .. } | Error::Domain(_))) => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(first_err.unwrap_or_else(|| Error::OutOfRegion("no representation available".into())))
}

fn xp_rep(p: &SeriesParams, z: &TripleArg, rep: Representation, cfg: &SeriesConfig) -> Result<SeriesResult> {
    let (a, b) = (p.a, p.b);
    match rep {
        Representation::Xp1 => outer_sum(
            cfg,
            rep,
            is_zero(z.z1),
            |n, c| {
                let nf = n as f64;
                c * z.z1 * (a + 2.0 * nf) * (a + 2.0 * nf + 1.0) / ((nf + 1.0) * (b + nf))
            },
            |n, cfg| {
                let nf = n as f64;
                humbert_xi2_with(c1(), Complex64::new(-nf, 0.0), 1.0 - a - 2.0 * nf, z.z2, -z.z3, cfg)
            },
        ),
        Representation::Xp2 => {
            let w = z.z1 * z.z2;
            outer_sum(
                cfg,
                rep,
                is_zero(w),
                |n, c| {
                    let nf = n as f64;
                    c * w * (a + nf) / (b + nf)
                },
                |n, cfg| horn_h10_with(a + n as f64, b + n as f64, z.z1, z.z3, cfg),
            )
        }
        Representation::Xp3 => {
            let w = z.z1 * z.z2;
            outer_sum(
                cfg,
                rep,
                is_zero(z.z3),
                |n, c| {
                    let nf = n as f64;
                    -c * z.z3 / ((nf + 1.0) * (1.0 - a + nf))
                },
                |n, cfg| horn_h3_with(a - n as f64, c1(), b, z.z1, w, cfg),
            )
        }
        other => Err(Error::InvalidInput(format!("{other} is not a representation of X′"))),
    }
}

pub fn eval_x_prime(p: &SeriesParams, z: &TripleArg, rep: RepChoice) -> Result<SeriesResult> {
    eval_x_prime_with(p, z, rep, &SeriesConfig::default())
}

/// Evaluates `X′(a,b;ζ)` through a representation whose region contains `ζ`.
///
/// `Auto` ranks admissible representations by [`xprime_gauge`], interior
/// points before boundary points, ties in the order `Xp2, Xp1, Xp3`.
pub fn eval_x_prime_with(
    p: &SeriesParams,
    z: &TripleArg,
    rep: RepChoice,
    cfg: &SeriesConfig,
) -> Result<SeriesResult> {
    check_xprime_params(p)?;
    check_arg(z)?;
    let regions = classify_xprime_region(z, p);
    let run = |r: Representation| {
        xp_rep(p, z, r, cfg).map(|mut v| {
            v.boundary = regions.get(r) == Membership::Boundary;
            v
        })
    };
    match rep.representation() {
        Some(r @ (Representation::Xp1 | Representation::Xp2 | Representation::Xp3)) => {
            if regions.contains(r) {
                run(r)
            } else {
                Err(Error::OutOfRegion(format!(
                    "representation {r} does not converge at |ζ1| = {:.6e}, |ζ2| = {:.6e}",
                    z.z1.norm(),
                    z.z2.norm()
                )))
            }
        }
        Some(r) => Err(Error::InvalidInput(format!("{r} is not a representation of X′"))),
        None => {
            let mut order = regions.admissible();
            if order.is_empty() {
                return Err(Error::OutOfRegion(format!(
                    "no X′ representation converges at |ζ1| = {:.6e}, |ζ2| = {:.6e}",
                    z.z1.norm(),
                    z.z2.norm()
                )));
            }
            let key = |r: &Representation| {
                let boundary = regions.get(*r) == Membership::Boundary;
                (boundary, xprime_gauge(*r, z))
            };
            // stable sort keeps the Xp2, Xp1, Xp3 tie order
            order.sort_by(|l, r| {
                let (bl, gl) = key(l);
                let (br, gr) = key(r);
                bl.cmp(&br).then(gl.total_cmp(&gr))
            });
            first_success(order.into_iter().map(run))
        }
    }
}
