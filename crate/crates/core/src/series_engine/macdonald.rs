//! Macdonald functions `K_{n+1/2}` of half-integer order.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

fn check_arg(z: Complex64) -> Result<()> {
    if z.norm() == 0.0 {
        return Err(Error::Domain("K_ν(z) is singular at z = 0".into()));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain(format!("{z} lies on the branch cut of K_ν")));
    }
    Ok(())
}

/// `K_ν(z)` with `ν = order_num + 1/2`, via the terminating expansion
/// `√(π/2z) e^{−z} Σ_{k≤n} (n+k)!/(k!(n−k)!(2z)^k)` and `K_{−ν} = K_ν`.
pub fn macdonald_k_half(order_num: i64, z: Complex64) -> Result<Complex64> {
    check_arg(z)?;
    let n = if order_num < 0 { -order_num - 1 } else { order_num };
    let mut c = Complex64::new(1.0, 0.0);
    let mut sum = c;
    for k in 0..n {
        let kf = k as f64;
        let nf = n as f64;
        c *= (nf + kf + 1.0) * (nf - kf) / ((kf + 1.0) * 2.0 * z);
        sum += c;
    }
    let v = (PI / (2.0 * z)).sqrt() * (-z).exp() * sum;
    super::ensure_finite(v, "K_ν")
}

/// `ln K_{j+1/2}(z)` for `j = 0..=jmax`.
///
/// Built from the ratio recurrence `K_{j+3/2}/K_{j+1/2} = K_{j−1/2}/K_{j+1/2}
/// + (2j+1)/z`, which is forward-stable and never leaves `f64` range.
pub fn ln_macdonald_k_half_seq(z: Complex64, jmax: usize) -> Result<Vec<Complex64>> {
    check_arg(z)?;
    let mut out = Vec::with_capacity(jmax + 1);
    let mut ln_k = 0.5 * (PI / (2.0 * z)).ln() - z;
    out.push(ln_k);
    let mut ratio = Complex64::new(1.0, 0.0);
    for j in 0..jmax {
        ratio = ratio.inv() + (2.0 * j as f64 + 1.0) / z;
        ln_k += ratio.ln();
        out.push(ln_k);
    }
    Ok(out)
}
