//! Horn `H3`, confluent `Ｈ3`, `Ｈ10` and Humbert `Ξ2` with their regions.

use num_complex::Complex64;

use super::double_series::{srivastava_daoust_with, Factor, Polydisc, SdSpec};
use super::{is_nonpositive_integer, Representation, SeriesConfig, SeriesResult, REGION_MARGIN};
use crate::{Error, Result};

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn is_origin(z1: Complex64, z2: Complex64) -> bool {
    z1.norm() == 0.0 && z2.norm() == 0.0
}

/// Boundary `φ(y)` of the `H3` region in the `(|z1|, |z2|)` quadrant:
/// the envelope of the polydiscs `R + (S − 1/2)² = 1/4`.
fn h3_boundary(y: f64) -> f64 {
    if y <= 0.5 {
        0.25
    } else {
        y * (1.0 - y)
    }
}

/// `(x, y) = (|z1|, |z2|)` lies strictly inside the `H3` convergence region.
pub fn h3_region_contains(x: f64, y: f64) -> bool {
    y < 1.0 - REGION_MARGIN && x < h3_boundary(y) - REGION_MARGIN
}

/// A polydisc `(R, S)` on the `H3` cone that contains `(x, y)`.
pub fn h3_polydisc(x: f64, y: f64) -> Polydisc {
    let s = if y < 0.5 {
        0.5
    } else {
        let s_max = 0.5 * (1.0 + (1.0 - 4.0 * x).max(0.0).sqrt());
        0.5 * (y + s_max)
    };
    Polydisc { r1: s * (1.0 - s), r2: s }
}

/// Smallest `λ` with `(x/λ, y/λ)` in the closed `H3` region; `< 1` inside.
pub fn h3_gauge(x: f64, y: f64) -> f64 {
    if x == 0.0 && y == 0.0 {
        return 0.0;
    }
    let inside = |l: f64| {
        let (u, v) = (x / l, y / l);
        v <= 1.0 && u <= h3_boundary(v)
    };
    let mut hi = 1.0;
    while !inside(hi) {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if inside(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn tagged(mut r: SeriesResult, rep: Representation) -> SeriesResult {
    r.representation = rep;
    r
}

fn check_den(c: Complex64) -> Result<()> {
    if is_nonpositive_integer(c) {
        Err(Error::ParameterPole { param: c })
    } else {
        Ok(())
    }
}

/// `H3(a,b;c;z1,z2) = Σ (a)_{2m+n}(b)_n/(c)_{m+n} z1^m z2^n/(m!n!)`.
pub fn horn_h3(a: Complex64, b: Complex64, c: Complex64, z1: Complex64, z2: Complex64) -> Result<SeriesResult> {
    horn_h3_with(a, b, c, z1, z2, &SeriesConfig::default())
}

pub fn horn_h3_with(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z1: Complex64,
    z2: Complex64,
    cfg: &SeriesConfig,
) -> Result<SeriesResult> {
    check_den(c)?;
    if is_origin(z1, z2) {
        return Ok(SeriesResult::exact(one(), Representation::HornH3));
    }
    let (x, y) = (z1.norm(), z2.norm());
    if !h3_region_contains(x, y) {
        return Err(Error::OutOfRegion(format!(
            "H3 needs |z1| < φ(|z2|), |z2| < 1; got ({x:.6e}, {y:.6e})"
        )));
    }
    let spec = SdSpec::new(
        vec![Factor::joint(a, 2, 1), Factor::second(b)],
        vec![Factor::joint(c, 1, 1)],
    )
    .with_region(h3_polydisc(x, y));
    srivastava_daoust_with(&spec, z1, z2, cfg).map(|r| tagged(r, Representation::HornH3))
}

/// Confluent `Ｈ3(a,b;c;z1,z2) = Σ (a)_{m−n}(b)_m/(c)_m z1^m z2^n/(m!n!)`, `|z1| < 1`.
pub fn horn_h3_confluent(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z1: Complex64,
    z2: Complex64,
) -> Result<SeriesResult> {
    horn_h3_confluent_with(a, b, c, z1, z2, &SeriesConfig::default())
}

pub fn horn_h3_confluent_with(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z1: Complex64,
    z2: Complex64,
    cfg: &SeriesConfig,
) -> Result<SeriesResult> {
    check_den(c)?;
    if is_origin(z1, z2) {
        return Ok(SeriesResult::exact(one(), Representation::HornH3Confluent));
    }
    let region = Polydisc { r1: 1.0, r2: f64::INFINITY };
    if !region.contains(z1, z2) {
        return Err(Error::OutOfRegion(format!("Ｈ3 needs |z1| < 1; got {:.6e}", z1.norm())));
    }
    let spec = SdSpec::new(
        vec![Factor::joint(a, 1, -1), Factor::first(b)],
        vec![Factor::first(c)],
    )
    .with_region(region);
    srivastava_daoust_with(&spec, z1, z2, cfg).map(|r| tagged(r, Representation::HornH3Confluent))
}

/// `Ｈ10(a;c;z1,z2) = Σ (a)_{2m−n}/(c)_m z1^m z2^n/(m!n!)`, `|z1| < 1/4`.
pub fn horn_h10(a: Complex64, c: Complex64, z1: Complex64, z2: Complex64) -> Result<SeriesResult> {
    horn_h10_with(a, c, z1, z2, &SeriesConfig::default())
}

pub fn horn_h10_with(
    a: Complex64,
    c: Complex64,
    z1: Complex64,
    z2: Complex64,
    cfg: &SeriesConfig,
) -> Result<SeriesResult> {
    check_den(c)?;
    if is_origin(z1, z2) {
        return Ok(SeriesResult::exact(one(), Representation::HornH10));
    }
    let region = Polydisc { r1: 0.25, r2: f64::INFINITY };
    if !region.contains(z1, z2) {
        return Err(Error::OutOfRegion(format!("Ｈ10 needs |z1| < 1/4; got {:.6e}", z1.norm())));
    }
    let spec = SdSpec::new(vec![Factor::joint(a, 2, -1)], vec![Factor::first(c)]).with_region(region);
    srivastava_daoust_with(&spec, z1, z2, cfg).map(|r| tagged(r, Representation::HornH10))
}

/// `Ξ2(a,b;c;z1,z2) = Σ (a)_m(b)_m/(c)_{m+n} z1^m z2^n/(m!n!)`.
///
/// `|z1| < 1`, unless `a` or `b` is a nonpositive integer, in which case the
/// `m`-sum terminates and any `z1` is allowed.
pub fn humbert_xi2(a: Complex64, b: Complex64, c: Complex64, z1: Complex64, z2: Complex64) -> Result<SeriesResult> {
    humbert_xi2_with(a, b, c, z1, z2, &SeriesConfig::default())
}

pub fn humbert_xi2_with(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z1: Complex64,
    z2: Complex64,
    cfg: &SeriesConfig,
) -> Result<SeriesResult> {
    check_den(c)?;
    if is_origin(z1, z2) {
        return Ok(SeriesResult::exact(one(), Representation::HumbertXi2));
    }
    let terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    let region = Polydisc {
        r1: if terminating { f64::INFINITY } else { 1.0 },
        r2: f64::INFINITY,
    };
    if !region.contains(z1, z2) {
        return Err(Error::OutOfRegion(format!("Ξ2 needs |z1| < 1; got {:.6e}", z1.norm())));
    }
    let spec = SdSpec::new(
        vec![Factor::first(a), Factor::first(b)],
        vec![Factor::joint(c, 1, 1)],
    )
    .with_region(region);
    srivastava_daoust_with(&spec, z1, z2, cfg).map(|r| tagged(r, Representation::HumbertXi2))
}
