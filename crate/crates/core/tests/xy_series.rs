mod common;

use common::{c, disc, perturbed, re, rel_err, rng};
use proptest::prelude::*;
use rashba_green::oracle::{brute_force_x, brute_force_x_prime};
use rashba_green::series_engine::{gamma, horn_h10, horn_h3_confluent, hyp0f1, pochhammer};
use rashba_green::xy_series::{
    classify_xprime_region, confluence_xprime, dx_d1, dx_d2, dx_d3, dxp_d3, eval_x, eval_x_prime,
    kdf_a21_b1, Membership,
};
use rashba_green::{Complex64, Error, RepChoice, Representation, SeriesConfig, SeriesParams, TripleArg};

const H: f64 = 1e-5;

fn x(p: &SeriesParams, z: &TripleArg) -> Complex64 {
    eval_x(p, z, RepChoice::Auto).unwrap().value
}

fn xp(p: &SeriesParams, z: &TripleArg) -> Complex64 {
    eval_x_prime(p, z, RepChoice::Auto).unwrap().value
}

fn shift(z: &TripleArg, k: usize, h: f64) -> TripleArg {
    let mut out = *z;
    match k {
        1 => out.z1 += h,
        2 => out.z2 += h,
        _ => out.z3 += h,
    }
    out
}

/// Central difference of `f` in variable `k`.
fn fd(f: impl Fn(&TripleArg) -> Complex64, z: &TripleArg, k: usize) -> Complex64 {
    (f(&shift(z, k, H)) - f(&shift(z, k, -H))) / (2.0 * H)
}

#[test]
fn x_trivial_values() {
    let p = SeriesParams::real(1.5, 0.5);
    assert_eq!(x(&p, &TripleArg::zero()), re(1.0));
    let z3 = c(-2.0, 0.7);
    let slice = x(&p, &TripleArg::new(re(0.0), re(0.0), z3));
    assert!(rel_err(slice, hyp0f1(re(1.5), z3).unwrap().value) < 1e-13);
}

#[test]
fn x_matches_brute_force() {
    let p = SeriesParams::real(1.5, 1.5);
    let z = TripleArg::new(re(0.01), re(-0.02), re(0.05));
    let want = brute_force_x(&p, &z, 40);
    for rep in [RepChoice::Auto, RepChoice::X1, RepChoice::X2, RepChoice::X3] {
        assert!(rel_err(eval_x(&p, &z, rep).unwrap().value, want) < 1e-12, "{rep:?}");
    }
    let mut g = rng(7);
    for _ in 0..20 {
        let p = SeriesParams::new(c(perturbed(&mut g, 1.5, 0.4), 0.1), c(perturbed(&mut g, 0.5, 0.3), -0.2));
        let z = TripleArg::new(disc(&mut g, 0.1), disc(&mut g, 0.1), disc(&mut g, 0.1));
        assert!(rel_err(x(&p, &z), brute_force_x(&p, &z, 40)) < 1e-12);
    }
}

#[test]
fn x_prime_trivial_values() {
    let p = SeriesParams::real(0.5, 1.5);
    assert_eq!(xp(&p, &TripleArg::zero()), re(1.0));
    let (z1, z3) = (c(0.1, -0.05), c(-1.0, 2.0));
    let v = xp(&p, &TripleArg::new(z1, re(0.0), z3));
    assert!(rel_err(v, horn_h10(p.a, p.b, z1, z3).unwrap().value) < 1e-13);
}

#[test]
fn x_prime_matches_brute_force() {
    let p = SeriesParams::real(0.5, 1.5);
    let z = TripleArg::new(re(0.05), re(0.3), re(-0.2));
    let want = brute_force_x_prime(&p, &z, 60);
    let regions = classify_xprime_region(&z, &p);
    for rep in regions.admissible() {
        let choice = match rep {
            Representation::Xp1 => RepChoice::Xp1,
            Representation::Xp2 => RepChoice::Xp2,
            _ => RepChoice::Xp3,
        };
        assert!(rel_err(eval_x_prime(&p, &z, choice).unwrap().value, want) < 1e-10, "{rep}");
    }
}

#[test]
fn parameter_poles() {
    let z = TripleArg::new(re(0.1), re(0.1), re(0.1));
    assert!(matches!(eval_x(&SeriesParams::real(-1.0, 0.5), &z, RepChoice::Auto), Err(Error::ParameterPole { .. })));
    assert!(matches!(eval_x(&SeriesParams::real(0.5, 0.0), &z, RepChoice::Auto), Err(Error::ParameterPole { .. })));
    assert!(eval_x_prime(&SeriesParams::real(2.0, 0.5), &z, RepChoice::Auto).is_err());
    assert!(matches!(dxp_d3(&SeriesParams::real(1.0, 0.5), &z), Err(Error::ParameterPole { .. })));
}

#[test]
fn region_classification() {
    let p = SeriesParams::real(0.5, 1.5);
    let all = classify_xprime_region(&TripleArg::new(re(0.0), re(0.0), c(5.0, 5.0)), &p);
    assert_eq!(all.admissible().len(), 3);
    let far = classify_xprime_region(&TripleArg::new(re(0.3), re(0.1), re(0.0)), &p);
    assert!(!far.contains(Representation::Xp1));
    let mid = classify_xprime_region(&TripleArg::new(re(0.2), re(1.5), re(0.0)), &p);
    assert!(mid.contains(Representation::Xp1) && mid.contains(Representation::Xp2));
    let boundary = classify_xprime_region(&TripleArg::new(c(0.0, 0.25), re(1.0), re(0.0)), &p);
    assert_eq!(boundary.xp1, Membership::Boundary);
}

#[test]
fn out_of_region() {
    let p = SeriesParams::real(0.5, 1.5);
    let z = TripleArg::new(re(0.3), re(5.0), re(0.0));
    assert!(matches!(eval_x_prime(&p, &z, RepChoice::Auto), Err(Error::OutOfRegion(_))));
    let z = TripleArg::new(re(0.1), re(2.5), re(0.0));
    assert!(matches!(eval_x_prime(&p, &z, RepChoice::Xp1), Err(Error::OutOfRegion(_))));
}

#[test]
fn boundary_point_is_flagged() {
    // |ζ1| = 1/4 with Re(a − b − 1/2) < 0: X′ = 2F1(1/4, 3/4; 9/2; 1)
    let p = SeriesParams::real(0.5, 4.5);
    let z = TripleArg::new(re(0.25), re(0.0), re(0.0));
    let r = eval_x_prime(&p, &z, RepChoice::Xp1).unwrap();
    assert!(r.boundary);
    let g = |v: f64| gamma(re(v)).unwrap();
    let gauss = g(4.5) * g(3.5) / (g(4.25) * g(3.75));
    assert!(rel_err(r.value, gauss) < 1e-8, "{} vs {gauss}", r.value);
}

#[test]
fn derivative_trivial_values() {
    let p = SeriesParams::real(1.5, 1.5);
    let z = TripleArg::zero();
    assert!(rel_err(dx_d1(&p, &z).unwrap(), re(1.0 / (1.5 * 1.5 * 2.5))) < 1e-15);
    assert!(rel_err(dx_d3(&p, &z).unwrap(), re(2.0 / 3.0)) < 1e-15);
    assert!(rel_err(dx_d2(&p, &z).unwrap().value, re(1.0 / 2.25)) < 1e-15);
    let q = SeriesParams::real(0.5, 1.5);
    assert!(rel_err(dxp_d3(&q, &z).unwrap(), re(-2.0)) < 1e-15);
    let z = TripleArg::new(re(0.2), re(0.0), re(-0.4));
    let want = kdf_a21_b1(re(2.5), re(2.5), z.z1, z.z3, &SeriesConfig::default()).unwrap().value / 2.25;
    assert!(rel_err(dx_d2(&p, &z).unwrap().value, want) < 1e-14);
}

#[test]
fn derivatives_match_finite_differences() {
    let mut g = rng(11);
    for _ in 0..20 {
        let p = SeriesParams::real(perturbed(&mut g, 1.5, 0.4), perturbed(&mut g, 1.5, 0.4));
        let z = TripleArg::new(disc(&mut g, 0.5), disc(&mut g, 0.5), disc(&mut g, 0.5));
        let f = |w: &TripleArg| x(&p, w);
        assert!(rel_err(dx_d1(&p, &z).unwrap(), fd(f, &z, 1)) < 1e-7);
        assert!(rel_err(dx_d2(&p, &z).unwrap().value, fd(f, &z, 2)) < 1e-7);
        assert!(rel_err(dx_d3(&p, &z).unwrap(), fd(f, &z, 3)) < 1e-7);
        let q = SeriesParams::real(perturbed(&mut g, 0.5, 0.3), perturbed(&mut g, 1.5, 0.4));
        let w = TripleArg::new(disc(&mut g, 0.2), disc(&mut g, 1.0), disc(&mut g, 1.0));
        let fp = |w: &TripleArg| xp(&q, w);
        assert!(rel_err(dxp_d3(&q, &w).unwrap(), fd(fp, &w, 3)) < 1e-7);
    }
}

#[test]
fn pde_identity() {
    // (∂1 + ζ2 ∂12 − ∂23) X = 0
    let mut g = rng(13);
    for _ in 0..20 {
        let p = SeriesParams::real(perturbed(&mut g, 1.5, 0.4), perturbed(&mut g, 0.5, 0.3));
        let z = TripleArg::new(disc(&mut g, 0.5), disc(&mut g, 0.5), disc(&mut g, 0.5));
        let d1 = |w: &TripleArg| dx_d1(&p, w).unwrap();
        let d3 = |w: &TripleArg| dx_d3(&p, w).unwrap();
        let lhs = d1(&z) + z.z2 * fd(d1, &z, 2) - fd(d3, &z, 2);
        assert!(lhs.norm() <= 1e-5 * (1.0 + d1(&z).norm()), "{lhs}");
    }
}

#[test]
fn generating_identities() {
    let mut g = rng(17);
    for _ in 0..10 {
        let (a, b) = (c(perturbed(&mut g, 1.5, 0.4), 0.1), c(perturbed(&mut g, 1.5, 0.4), 0.0));
        let z = TripleArg::new(disc(&mut g, 0.5), disc(&mut g, 0.3), disc(&mut g, 0.5));
        // Σ_{n=1}^{20} ζ2^n/((a)_n(b)_n) (X(a+n,b+n) − n F(a+n,b+n))
        let mut s = re(0.0);
        for n in 1..=20 {
            let nf = n as f64;
            let coef = z.z2.powi(n) / (pochhammer(a, n as i64).unwrap() * pochhammer(b, n as i64).unwrap());
            let xn = x(&SeriesParams::new(a + nf, b + nf), &z);
            let f = kdf_a21_b1(a + nf, b + nf, z.z1, z.z3, &SeriesConfig::default()).unwrap().value;
            s += coef * (xn - nf * f);
        }
        assert!(s.norm() <= 1e-8, "{s}");

        let (a, b) = (c(perturbed(&mut g, 0.5, 0.3), 0.0), c(perturbed(&mut g, 1.5, 0.4), 0.0));
        let z1 = disc(&mut g, 0.2);
        let z2 = disc(&mut g, 0.2 / z1.norm().max(0.2));
        let z = TripleArg::new(z1, z2, disc(&mut g, 1.0));
        let w = z.z1 * z.z2;
        let mut s = re(0.0);
        for n in 1..=20 {
            let nf = n as f64;
            let coef = w.powi(n) * pochhammer(a, n as i64).unwrap() / pochhammer(b, n as i64).unwrap();
            let xn = xp(&SeriesParams::new(a + nf, b + nf), &z);
            let h = horn_h10(a + nf, b + nf, z.z1, z.z3).unwrap().value;
            s += coef * (xn - nf * h);
        }
        assert!(s.norm() <= 1e-8, "{s}");
    }
}

#[test]
fn confluence_limit() {
    let p = SeriesParams::real(0.5, 1.5);
    assert_eq!(confluence_xprime(&p, re(0.0), re(0.0)).unwrap(), re(1.0));
    let (z1, z2, z3) = (re(0.4), re(0.5), c(-0.6, 0.3));
    let limit = confluence_xprime(&p, z1 * z2, z3).unwrap();
    let direct = horn_h3_confluent(p.a, re(1.0), p.b, z1 * z2, z3).unwrap().value;
    assert_eq!(limit, direct);
    let at = |eps: f64| xp(&p, &TripleArg::new(eps * z1, z2 / eps, z3));
    let (e3, e4) = ((at(1e-3) - limit).norm(), (at(1e-4) - limit).norm());
    assert!(e3 < 1e-2 && e4 < 1e-3);
    assert!(e4 < 0.2 * e3, "deviation must shrink like ε: {e3} {e4}");
}

fn xparams() -> impl Strategy<Value = SeriesParams> {
    let base = prop_oneof![Just(0.5), Just(1.5), Just(2.5)];
    (base.clone(), base, -0.2f64..0.2, -0.2f64..0.2)
        .prop_map(|(a, b, da, db)| SeriesParams::real(a + da, b + db))
        .prop_filter("avoid integers", |p| (p.a.re.fract().abs() > 1e-3) && p.b.re.abs() > 1e-3)
}

fn small(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..radius, -3.2f64..3.2).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recurrence_x(p in xparams(), z1 in small(0.5), z2 in small(0.5), z3 in small(0.5)) {
        let z = TripleArg::new(z1, z2, z3);
        let lhs = x(&p, &z) - z2 / (p.a * p.b) * x(&SeriesParams::new(p.a + 1.0, p.b + 1.0), &z);
        let rhs = kdf_a21_b1(p.a, p.b, z1, z3, &SeriesConfig::default()).unwrap().value;
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + x(&p, &z).norm()));
    }

    #[test]
    fn recurrence_x_prime(p in xparams(), z1 in small(0.2), z2 in small(0.5), z3 in small(0.5)) {
        let z = TripleArg::new(z1, z2, z3);
        let v = xp(&p, &z);
        let lhs = v - p.a / p.b * z1 * z2 * xp(&SeriesParams::new(p.a + 1.0, p.b + 1.0), &z);
        let rhs = horn_h10(p.a, p.b, z1, z3).unwrap().value;
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + v.norm()));
    }

    #[test]
    fn x_representations_agree(p in xparams(), z1 in small(2.0), z2 in small(2.0), z3 in small(2.0)) {
        let z = TripleArg::new(z1, z2, z3);
        let v: Vec<_> = [RepChoice::X1, RepChoice::X2, RepChoice::X3]
            .iter()
            .map(|r| eval_x(&p, &z, *r).unwrap().value)
            .collect();
        prop_assert!(rel_err(v[0], v[1]) < 1e-9 && rel_err(v[1], v[2]) < 1e-9);
    }

    #[test]
    fn x_prime_representations_agree(p in xparams(), z1 in small(0.24), z2 in small(1.9), z3 in small(2.0)) {
        let z = TripleArg::new(z1, z2, z3);
        let regions = classify_xprime_region(&z, &p);
        let choices: Vec<_> = [(Representation::Xp1, RepChoice::Xp1), (Representation::Xp2, RepChoice::Xp2), (Representation::Xp3, RepChoice::Xp3)]
            .into_iter()
            .filter(|(r, _)| regions.get(*r) == Membership::Interior)
            .map(|(_, c)| c)
            .collect();
        let vals: Vec<_> = choices.iter().filter_map(|c| eval_x_prime(&p, &z, *c).ok()).map(|r| r.value).collect();
        for w in vals.windows(2) {
            prop_assert!(rel_err(w[0], w[1]) < 1e-9, "{:?}", vals);
        }
    }
}

#[test]
fn representation_choice_is_reported() {
    let mut g = rng(3);
    let p = SeriesParams::real(0.5, 1.5);
    for _ in 0..10 {
        let z = TripleArg::new(disc(&mut g, 0.2), disc(&mut g, 1.0), disc(&mut g, 3.0));
        let r = eval_x_prime(&p, &z, RepChoice::Auto).unwrap();
        assert!(matches!(r.representation, Representation::Xp1 | Representation::Xp2 | Representation::Xp3));
        assert!(r.est_error <= 1e-9 * (1.0 + r.value.norm()));
    }
}

#[test]
fn representations_agree_near_the_xp1_edge() {
    // 4|ζ1| = 0.96 and a cancelling outer sum in Xp3
    let z = TripleArg::new(re(0.24), re(1.8), re(4.5));
    for p in [SeriesParams::real(0.5, 1.5), SeriesParams::real(-0.5, 0.5), SeriesParams::real(1.5, 1.5)] {
        let v: Vec<_> = [RepChoice::Xp1, RepChoice::Xp2, RepChoice::Xp3]
            .into_iter()
            .map(|rep| eval_x_prime(&p, &z, rep).unwrap().value)
            .collect();
        assert!(rel_err(v[0], v[1]) < 1e-10 && rel_err(v[2], v[1]) < 1e-10, "{p:?} {v:?}");
    }
}
