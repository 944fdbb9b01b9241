#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rashba_green::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `|a − b| / max(|b|, tiny)`.
pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of the complex disc `|z| ≤ radius`.
pub fn disc(rng: &mut impl Rng, radius: f64) -> Complex64 {
    let rho = radius * rng.gen::<f64>().sqrt();
    let phi = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Complex64::from_polar(rho, phi)
}

/// `base ± δ` with `δ ∈ [0.02, spread]` of random sign.
pub fn perturbed(rng: &mut impl Rng, base: f64, spread: f64) -> f64 {
    let d = rng.gen_range(0.02..spread);
    if rng.gen::<bool>() {
        base + d
    } else {
        base - d
    }
}
