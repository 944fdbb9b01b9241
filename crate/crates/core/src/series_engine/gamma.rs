//! Complex gamma function by the Lanczos approximation (g = 7, n = 9).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

const G: f64 = 7.0;
const COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(COEF[0], 0.0);
    for (i, &c) in COEF.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

fn check_pole(z: Complex64) -> Result<()> {
    if super::is_nonpositive_integer(z) {
        Err(Error::Domain(format!("gamma has a pole at {z}")))
    } else {
        Ok(())
    }
}

/// `Γ(z)`; reflection is used for `Re z < 1/2`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    let v = if z.re < 0.5 {
        PI / ((PI * z).sin() * ln_gamma_right(1.0 - z).exp())
    } else {
        ln_gamma_right(z).exp()
    };
    super::ensure_finite(v, "gamma")
}

/// A logarithm of `Γ(z)`. The real part is `ln|Γ(z)|`; the imaginary part is
/// a valid argument but not necessarily the principal-branch `lnΓ`.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    if z.re < 0.5 {
        Ok(Complex64::new(PI.ln(), 0.0) - (PI * z).sin().ln() - ln_gamma_right(1.0 - z))
    } else {
        Ok(ln_gamma_right(z))
    }
}
