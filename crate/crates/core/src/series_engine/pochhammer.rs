use num_complex::Complex64;

use crate::{Error, Result};

/// Rising factorial `(a)_k = Γ(a+k)/Γ(a)` for any integer `k`.
///
/// For `k < 0` this is `1/((a-1)(a-2)…(a-|k|))`. That product vanishes when
/// `a` is a positive integer `≤ |k|`; `Γ(a+k)` has a pole there while `Γ(a)`
/// is finite, so the symbol is infinite and a [`Error::Domain`] is returned.
/// Use [`rpochhammer`] when the reciprocal is what is needed.
pub fn pochhammer(a: Complex64, k: i64) -> Result<Complex64> {
    if k >= 0 {
        let mut p = Complex64::new(1.0, 0.0);
        for j in 0..k {
            p *= a + j as f64;
        }
        return super::ensure_finite(p, "Pochhammer symbol");
    }
    let mut d = Complex64::new(1.0, 0.0);
    for j in 1..=(-k) {
        let f = a - j as f64;
        if f == Complex64::new(0.0, 0.0) {
            return Err(Error::Domain(format!(
                "({a})_{k} is a pole: Γ(a+k) is infinite"
            )));
        }
        d *= f;
    }
    super::ensure_finite(d.inv(), "Pochhammer symbol")
}

/// Reciprocal rising factorial `1/(a)_k`.
///
/// Exactly zero for negative `k` when `a` is a positive integer `≤ |k|`.
/// Returns [`Error::ParameterPole`] when `(a)_k` itself vanishes.
pub fn rpochhammer(a: Complex64, k: i64) -> Result<Complex64> {
    if k >= 0 {
        let mut p = Complex64::new(1.0, 0.0);
        for j in 0..k {
            let f = a + j as f64;
            if f == Complex64::new(0.0, 0.0) {
                return Err(Error::ParameterPole { param: a });
            }
            p *= f;
        }
        return super::ensure_finite(p.inv(), "reciprocal Pochhammer symbol");
    }
    let mut d = Complex64::new(1.0, 0.0);
    for j in 1..=(-k) {
        d *= a - j as f64;
    }
    super::ensure_finite(d, "reciprocal Pochhammer symbol")
}

/// `1/n!`, exactly zero for negative `n`.
pub fn reciprocal_factorial(n: i64) -> f64 {
    if n < 0 {
        return 0.0;
    }
    let mut r = 1.0;
    for j in 2..=n {
        r /= j as f64;
        if r == 0.0 {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_engine::gamma::gamma;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn basic_values() {
        assert_eq!(pochhammer(Complex64::new(0.3, -2.0), 0).unwrap(), c(1.0));
        assert_eq!(pochhammer(c(3.0), 4).unwrap(), c(360.0));
        assert!((pochhammer(c(0.5), -1).unwrap() - c(-2.0)).norm() < 1e-15);
    }

    #[test]
    fn negative_index_pole_and_zero() {
        assert!(matches!(pochhammer(c(2.0), -3), Err(Error::Domain(_))));
        assert_eq!(rpochhammer(c(2.0), -3).unwrap(), c(0.0));
        assert!(matches!(
            rpochhammer(c(-2.0), 5),
            Err(Error::ParameterPole { .. })
        ));
        // (−2)_2 = (−2)(−1) is a legitimate finite value
        assert_eq!(rpochhammer(c(-2.0), 2).unwrap(), c(0.5));
        assert_eq!(pochhammer(c(-2.0), 4).unwrap(), c(0.0));
    }

    #[test]
    fn gamma_ratio_cross_check() {
        let a = Complex64::new(0.37, 0.81);
        for k in -6..=9 {
            let direct = pochhammer(a, k).unwrap();
            let ratio = gamma(a + k as f64).unwrap() / gamma(a).unwrap();
            assert!((direct - ratio).norm() <= 1e-13 * ratio.norm(), "k = {k}");
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(reciprocal_factorial(0), 1.0);
        assert!((reciprocal_factorial(3) - 1.0 / 6.0).abs() < 1e-17);
        assert_eq!(reciprocal_factorial(-2), 0.0);
        assert_eq!(reciprocal_factorial(400), 0.0);
    }
}
