use num_complex::Complex64;

use super::representations::{eval_x, eval_x_prime, kdf_a21_b1};
use super::{RepChoice, SeriesParams, TripleArg};
use crate::series_engine::horn::horn_h3_confluent;
use crate::series_engine::{QuietCounter, Representation, SeriesConfig, SeriesResult};
use crate::{Error, Result};

fn shifted(p: &SeriesParams, da: f64, db: f64) -> SeriesParams {
    SeriesParams::new(p.a + da, p.b + db)
}

/// `∂X/∂ζ1 = X(a+2, b+1; ζ)/(a b (a+1))`.
pub fn dx_d1(p: &SeriesParams, z: &TripleArg) -> Result<Complex64> {
    let x = eval_x(&shifted(p, 2.0, 1.0), z, RepChoice::Auto)?;
    Ok(x.value / (p.a * p.b * (p.a + 1.0)))
}

/// `∂X/∂ζ3 = X(a+1, b; ζ)/a`.
pub fn dx_d3(p: &SeriesParams, z: &TripleArg) -> Result<Complex64> {
    let x = eval_x(&shifted(p, 1.0, 0.0), z, RepChoice::Auto)?;
    Ok(x.value / p.a)
}

pub fn dx_d2(p: &SeriesParams, z: &TripleArg) -> Result<SeriesResult> {
    dx_d2_with(p, z, &SeriesConfig::default())
}

/// `∂X/∂ζ2 = Σ_{n≥1} n ζ2^{n−1}/((a)_n (b)_n) · F((a+n:2,1):(b+n:1); ζ1, ζ3)`.
pub fn dx_d2_with(p: &SeriesParams, z: &TripleArg, cfg: &SeriesConfig) -> Result<SeriesResult> {
    // validates a and b
    eval_x(p, &TripleArg::zero(), RepChoice::X2)?;
    let (a, b) = (p.a, p.b);
    // c_n = ζ2^{n−1}/((a)_n (b)_n)
    let mut coef = (a * b).inv();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut inner_err = 0.0;
    let mut last = 0.0;
    let mut quiet = QuietCounter::default();
    let single = z.z2.norm() == 0.0;
    for n in 1..=cfg.max_outer {
        let nf = n as f64;
        let f = kdf_a21_b1(a + nf, b + nf, z.z1, z.z3, cfg)?;
        let t = nf * coef * f.value;
        inner_err += (nf * coef).norm() * f.est_error;
        sum += t;
        last = t.norm();
        if single || quiet.feed(last, sum, cfg.tol_rel) {
            return Ok(SeriesResult {
                value: sum,
                terms_used: n,
                est_error: if single { inner_err } else { last + inner_err },
                representation: Representation::X2,
                boundary: false,
            });
        }
        coef *= z.z2 / ((a + nf) * (b + nf));
    }
    Err(Error::NoConvergence {
        terms: cfg.max_outer,
        est_error: last,
    })
}

/// `∂X′/∂ζ3 = X′(a−1, b; ζ)/(a−1)`.
pub fn dxp_d3(p: &SeriesParams, z: &TripleArg) -> Result<Complex64> {
    let am1 = p.a - 1.0;
    if am1.norm() == 0.0 {
        return Err(Error::ParameterPole { param: p.a });
    }
    let x = eval_x_prime(&shifted(p, -1.0, 0.0), z, RepChoice::Auto)?;
    Ok(x.value / am1)
}

/// `lim_{ε→0} X′(a,b; εζ1, ζ2/ε, ζ3) = Ｈ3(a,1;b; ζ1ζ2, ζ3)`.
pub fn confluence_xprime(p: &SeriesParams, z1z2_product: Complex64, z3: Complex64) -> Result<Complex64> {
    horn_h3_confluent(p.a, Complex64::new(1.0, 0.0), p.b, z1z2_product, z3).map(|r| r.value)
}
