mod common;

use std::f64::consts::PI;

use common::{c, disc, re, rel_err, rng};
use rand::Rng;
use rashba_green::oracle::{
    brute_force_x, brute_force_x_prime, integrate, integrate_semi_infinite, lemma_rhs,
    macdonald_double_sum, macdonald_sum_g1, macdonald_sum_g2, quad_g1, quad_g1_detailed, quad_g2,
    MacdonaldKind, MacdonaldSumArgs, QuadratureConfig,
};
use rashba_green::series_engine::{horn_h10, hyp0f1};
use rashba_green::{g1, g2, Complex64, Error, EvalPoint, PhysicalParams, SeriesParams, TripleArg};

fn params(alpha: f64, beta: f64, zeta: Complex64) -> PhysicalParams {
    PhysicalParams::new(alpha, beta, zeta).unwrap()
}

const SAMPLES: [(f64, f64, f64, f64, f64); 3] =
    [(1.0, 2.0, -5.0, 0.0, 0.5), (1.0, 2.0, -5.0, 0.0, 1.0), (0.5, 1.0, -4.0, 2.0, 0.75)];

#[test]
fn quadrature_rules() {
    let cfg = QuadratureConfig::default();
    let v = integrate(|t| Complex64::new(t.sin(), t * t), 0.0, PI, &cfg).unwrap();
    assert!(rel_err(v.value, c(2.0, PI.powi(3) / 3.0)) < 1e-13);
    let v = integrate_semi_infinite(|t| re((-t).exp()), 1.0, &cfg).unwrap();
    assert!(rel_err(v.value, re(1.0)) < 1e-12);
    let v = integrate_semi_infinite(|t| re(1.0 / (1.0 + t * t)), 1.0, &cfg).unwrap();
    assert!(rel_err(v.value, re(PI / 2.0)) < 1e-12);
    let bad = QuadratureConfig { rel_tol: 0.0, ..cfg };
    assert!(integrate(|t| re(t), 0.0, 1.0, &bad).is_err());
}

#[test]
fn quadrature_free_and_alpha_zero() {
    let cfg = QuadratureConfig::default();
    let e = (-2.0f64).exp();
    let p = params(0.0, 0.0, re(-4.0));
    assert!(rel_err(quad_g1(1.0, &p, &cfg).unwrap(), re(e / (16.0 * PI))) < 1e-10);
    assert!(rel_err(quad_g2(1.0, &p, &cfg).unwrap(), re(e / (4.0 * PI))) < 1e-10);
    let p = params(0.0, 1.0, re(-3.0));
    let ea = (-(2.0f64).sqrt()).exp();
    assert!(rel_err(quad_g1(1.0, &p, &cfg).unwrap(), re((ea - e) / (8.0 * PI))) < 1e-10);
    assert!(rel_err(quad_g2(1.0, &p, &cfg).unwrap(), re((ea + e) / (8.0 * PI))) < 1e-10);
    assert!(matches!(quad_g2(0.0, &p, &cfg), Err(Error::OriginNotAllowed)));
}

#[test]
fn oracles_agree() {
    let cfg = QuadratureConfig::default();
    for (alpha, beta, zr, zi, r) in SAMPLES {
        let p = params(alpha, beta, c(zr, zi));
        let (q1, q2) = (quad_g1(r, &p, &cfg).unwrap(), quad_g2(r, &p, &cfg).unwrap());
        let (m1, m2) = (macdonald_sum_g1(r, &p).unwrap(), macdonald_sum_g2(r, &p).unwrap());
        let tol = 1e-7f64.max(10.0 * cfg.rel_tol);
        assert!(rel_err(q1, m1) < tol && rel_err(q2, m2) < tol);
        let x = EvalPoint::on_axis(r);
        assert!(rel_err(g1(&x, &p).unwrap(), q1) < 1e-9);
        assert!(rel_err(g2(&x, &p).unwrap(), q2) < 1e-9);
    }
}

#[test]
fn tolerance_halving() {
    let base = QuadratureConfig { rel_tol: 1e-8, abs_tol: 1e-12, ..QuadratureConfig::default() };
    let fine = QuadratureConfig { rel_tol: 5e-9, abs_tol: 5e-13, ..base };
    for (alpha, beta, zr, zi, r) in SAMPLES {
        let p = params(alpha, beta, c(zr, zi));
        let a = quad_g1_detailed(r, &p, &base).unwrap();
        let b = quad_g1_detailed(r, &p, &fine).unwrap();
        assert!((a.value - b.value).norm() <= a.abs_error.max(1e-16), "{a:?} {b:?}");
    }
}

#[test]
fn macdonald_trivial_slices() {
    // α = β = 0: a single K_{±1/2} term
    let p = params(0.0, 0.0, c(-2.0, 1.0));
    let s = (-p.zeta).sqrt();
    let r = 0.8;
    assert!(macdonald_sum_g1(r, &p).is_ok());
    assert!(rel_err(macdonald_sum_g1(r, &p).unwrap(), (-r * s).exp() / (8.0 * PI * s)) < 1e-13);
    assert!(rel_err(macdonald_sum_g2(r, &p).unwrap(), (-r * s).exp() / (4.0 * PI * r)) < 1e-13);
    // α = 0: only n = 0 survives
    let p = params(0.0, 1.0, re(-3.0));
    let e = (-2.0f64).exp();
    let ea = (-(2.0f64).sqrt()).exp();
    assert!(rel_err(macdonald_sum_g1(1.0, &p).unwrap(), re((ea - e) / (8.0 * PI))) < 1e-12);
    assert!(rel_err(macdonald_sum_g2(1.0, &p).unwrap(), re((ea + e) / (8.0 * PI))) < 1e-12);
}

#[test]
fn lemma_identity() {
    let mut g = rng(23);
    let mut n = 0;
    while n < 20 {
        let z = Complex64::from_polar(g.gen_range(0.3..3.0), g.gen_range(-1.0..1.0));
        let x = disc(&mut g, 0.2) * z * z;
        let y = disc(&mut g, 2.0) / z;
        let args = MacdonaldSumArgs { x, y, z };
        let Ok(lhs) = macdonald_double_sum(MacdonaldKind::First, &args) else { continue };
        let rhs = lemma_rhs(MacdonaldKind::First, &args).unwrap();
        assert!(rel_err(lhs, rhs) < 1e-8, "{args:?}");
        let lhs = macdonald_double_sum(MacdonaldKind::Second, &args).unwrap();
        let rhs = lemma_rhs(MacdonaldKind::Second, &args).unwrap();
        assert!(rel_err(lhs, rhs) < 1e-8, "{args:?}");
        n += 1;
    }
}

#[test]
fn brute_force_slices() {
    let p = SeriesParams::real(1.5, 0.5);
    assert_eq!(brute_force_x(&p, &TripleArg::zero(), 10), re(1.0));
    assert_eq!(brute_force_x_prime(&p, &TripleArg::zero(), 10), re(1.0));
    let z3 = c(0.4, -0.3);
    let slice = brute_force_x(&p, &TripleArg::new(re(0.0), re(0.0), z3), 40);
    assert!(rel_err(slice, hyp0f1(p.a, z3).unwrap().value) < 1e-14);
    let q = SeriesParams::real(0.5, 1.5);
    let (z1, z3) = (c(0.05, 0.02), c(-0.3, 0.1));
    let slice = brute_force_x_prime(&q, &TripleArg::new(z1, re(0.0), z3), 60);
    assert!(rel_err(slice, horn_h10(q.a, q.b, z1, z3).unwrap().value) < 1e-12);
}
