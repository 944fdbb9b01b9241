//! Globally adaptive 7/15-point Gauss–Kronrod quadrature for complex integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Scale `L` of the map `ρ = L t/(1−t)`; `None` uses `max(1, √|ζ|)`.
    pub radial_map_scale: Option<f64>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-15,
            rel_tol: 1e-12,
            max_subdivisions: 4000,
            radial_map_scale: None,
        }
    }
}

impl QuadratureConfig {
    fn check(&self) -> Result<()> {
        if self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.max_subdivisions >= 1 {
            Ok(())
        } else {
            Err(Error::InvalidInput(
                "quadrature tolerances must be positive and max_subdivisions ≥ 1".into(),
            ))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub abs_error: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let s = f(center - dx) + f(center + dx);
        k += s * w;
        if j % 2 == 1 {
            g += s * WG[j / 2];
        }
    }
    Segment {
        a,
        b,
        value: k * half,
        error: ((k - g) * half).norm(),
    }
}

/// `∫_a^b f` by repeatedly bisecting the segment with the largest error.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    cfg.check()?;
    let first = kronrod(&f, a, b);
    let mut total = first.value;
    let mut err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut subdivisions = 1;
    loop {
        if !(total.re.is_finite() && total.im.is_finite() && err.is_finite()) {
            return Err(Error::QuadFailure("non-finite integrand".into()));
        }
        if err <= cfg.abs_tol.max(cfg.rel_tol * total.norm()) {
            return Ok(QuadResult {
                value: total,
                abs_error: err,
                subdivisions,
            });
        }
        if subdivisions >= cfg.max_subdivisions {
            return Err(Error::QuadFailure(format!(
                "error estimate {err:.3e} above tolerance after {subdivisions} subdivisions"
            )));
        }
        let worst = heap.pop().expect("heap holds every segment");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod(&f, worst.a, mid);
        let right = kronrod(&f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
        // refresh the running sums to shed accumulated rounding
        if subdivisions % 64 == 0 {
            total = heap.iter().map(|s| s.value).sum();
            err = heap.iter().map(|s| s.error).sum();
        }
    }
}

/// `∫_0^∞ f(ρ) dρ` through `ρ = L t/(1−t)`.
pub fn integrate_semi_infinite<F: Fn(f64) -> Complex64>(f: F, scale: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    let g = |t: f64| {
        let s = 1.0 - t;
        let rho = scale * t / s;
        let v = f(rho);
        if v.norm() == 0.0 {
            v
        } else {
            v * (scale / (s * s))
        }
    };
    integrate(g, 0.0, 1.0, cfg)
}
