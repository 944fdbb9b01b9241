use num_complex::Complex64;

use super::{is_nonpositive_integer, QuietCounter, Representation, SeriesConfig, SeriesResult};
use crate::{Error, Result};

/// `0F1(;c;z) = Σ z^k/(k!(c)_k)` with default truncation settings.
pub fn hyp0f1(c: Complex64, z: Complex64) -> Result<SeriesResult> {
    hyp0f1_with(c, z, &SeriesConfig::default())
}

pub fn hyp0f1_with(c: Complex64, z: Complex64, cfg: &SeriesConfig) -> Result<SeriesResult> {
    if is_nonpositive_integer(c) {
        return Err(Error::ParameterPole { param: c });
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(SeriesResult::exact(Complex64::new(1.0, 0.0), Representation::Hyp0F1));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = QuietCounter::default();
    for k in 0..cfg.max_terms {
        term *= z / ((k as f64 + 1.0) * (c + k as f64));
        sum += term;
        if quiet.feed(term.norm(), sum, cfg.tol_rel) {
            return Ok(SeriesResult {
                value: super::ensure_finite(sum, "0F1")?,
                terms_used: k + 2,
                est_error: term.norm(),
                representation: Representation::Hyp0F1,
                boundary: false,
            });
        }
    }
    Err(Error::NoConvergence {
        terms: cfg.max_terms,
        est_error: term.norm(),
    })
}
