//! Direct enumeration of the triple series over a cube of indices.

use num_complex::Complex64;

use crate::series_engine::scaled::Scaled;
use crate::xy_series::{SeriesParams, TripleArg};

/// Largest accepted cube edge; larger requests are clamped.
pub const MAX_CAP: usize = 200;

/// `(a)_k` (or its reciprocal) for `k` in `[−kneg, kpos]`, `None` at poles.
fn poch_table(a: Complex64, kneg: usize, kpos: usize, reciprocal: bool) -> (Vec<Option<Scaled>>, Vec<Option<Scaled>>) {
    let mut pos = vec![Some(Scaled::ONE)];
    for j in 0..kpos {
        let f = a + j as f64;
        let prev = pos[j];
        pos.push(prev.and_then(|p| apply(p, f, !reciprocal)));
    }
    let mut neg = vec![Some(Scaled::ONE)];
    for j in 1..=kneg {
        let f = a - j as f64;
        let prev = neg[j - 1];
        neg.push(prev.and_then(|p| apply(p, f, reciprocal)));
    }
    (pos, neg)
}

fn apply(p: Scaled, f: Complex64, multiply: bool) -> Option<Scaled> {
    if multiply {
        Some(p.mul_c(f))
    } else if f.norm() == 0.0 {
        None
    } else {
        Some(p.div_c(f))
    }
}

fn powers(z: Complex64, n: usize, with_factorial: bool) -> Vec<Scaled> {
    let mut out = vec![Scaled::ONE];
    for k in 1..=n {
        let f = if with_factorial { z / k as f64 } else { z };
        out.push(out[k - 1].mul_c(f));
    }
    out
}

/// `Σ_{0≤m,n,p≤cap} ζ1^m ζ2^n ζ3^p/(m! p! (a)_{2m+n+p} (b)_{m+n})`, summed
/// in ascending shells `m + n + p`. Terms hitting a pole are skipped.
pub fn brute_force_x(p: &SeriesParams, z: &TripleArg, cap: usize) -> Complex64 {
    let cap = cap.min(MAX_CAP);
    let (ra, _) = poch_table(p.a, 0, 4 * cap, true);
    let (rb, _) = poch_table(p.b, 0, 2 * cap, true);
    let z1 = powers(z.z1, cap, true);
    let z2 = powers(z.z2, cap, false);
    let z3 = powers(z.z3, cap, true);
    let mut sum = Complex64::new(0.0, 0.0);
    for shell in 0..=3 * cap {
        for m in 0..=cap.min(shell) {
            for n in 0..=cap.min(shell - m) {
                let q = shell - m - n;
                if q > cap {
                    continue;
                }
                let (Some(fa), Some(fb)) = (ra[2 * m + n + q], rb[m + n]) else {
                    continue;
                };
                sum += z1[m].mul(z2[n]).mul(z3[q]).mul(fa).mul(fb).to_complex();
            }
        }
    }
    sum
}

/// `Σ_{0≤m,n,p≤cap} ζ1^m ζ2^n ζ3^p (a)_{2m−n−p}/((m−n)! p! (b)_m)`, with
/// `1/(m−n)! = 0` for `n > m`.
pub fn brute_force_x_prime(p: &SeriesParams, z: &TripleArg, cap: usize) -> Complex64 {
    let cap = cap.min(MAX_CAP);
    let (pa, na) = poch_table(p.a, 2 * cap, 2 * cap, false);
    let (rb, _) = poch_table(p.b, 0, cap, true);
    let z1 = powers(z.z1, cap, false);
    let z2 = powers(z.z2, cap, false);
    let z3 = powers(z.z3, cap, true);
    let inv_fact = powers(Complex64::new(1.0, 0.0), cap, true);
    let mut sum = Complex64::new(0.0, 0.0);
    for shell in 0..=3 * cap {
        for m in 0..=cap.min(shell) {
            for n in 0..=m.min(shell - m) {
                let q = shell - m - n;
                if q > cap {
                    continue;
                }
                let k = 2 * m as i64 - n as i64 - q as i64;
                let fa = if k >= 0 { pa[k as usize] } else { na[(-k) as usize] };
                let (Some(fa), Some(fb)) = (fa, rb[m]) else {
                    continue;
                };
                let t = z1[m].mul(z2[n]).mul(z3[q]).mul(fa).mul(fb).mul(inv_fact[m - n]);
                sum += t.to_complex();
            }
        }
    }
    sum
}
