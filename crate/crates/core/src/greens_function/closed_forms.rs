//! Elementary closed forms: free case, `α = 0`, and the origin values.

use std::f64::consts::PI;

use num_complex::Complex64;

fn c1() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// `e^z − 1` without cancellation near `z = 0`.
pub(crate) fn expm1(z: Complex64) -> Complex64 {
    let ex = z.re.exp_m1();
    let half = (0.5 * z.im).sin();
    let re = ex * z.im.cos() - 2.0 * half * half;
    let im = (ex + 1.0) * z.im.sin();
    Complex64::new(re, im)
}

/// `(e^z − 1)/z`, equal to 1 at `z = 0`.
pub(crate) fn exprel(z: Complex64) -> Complex64 {
    if z.norm() < 1e-8 {
        c1() + 0.5 * z
    } else {
        expm1(z) / z
    }
}

/// `artanh(w)/w`, equal to 1 at `w = 0`.
pub(crate) fn atanhc(w: Complex64) -> Complex64 {
    if w.norm() < 1e-3 {
        let w2 = w * w;
        c1() + w2 * (1.0 / 3.0 + w2 * (0.2 + w2 * (1.0 / 7.0 + w2 / 9.0)))
    } else {
        w.atanh() / w
    }
}

/// Square roots `a = √(−β−ζ)`, `b = √(β−ζ)`, `c = √(−ζ)` of the `α = 0` case.
#[derive(Debug, Clone, Copy)]
pub(crate) struct AlphaZeroRoots {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub beta: f64,
}

impl AlphaZeroRoots {
    pub(crate) fn new(beta: f64, zeta: Complex64) -> Self {
        Self {
            a: (-zeta - beta).sqrt(),
            b: (-zeta + beta).sqrt(),
            c: (-zeta).sqrt(),
            beta,
        }
    }

    pub(crate) fn g1(&self, r: f64) -> Complex64 {
        let b_minus_a = 2.0 * self.beta / (self.a + self.b);
        (-r * self.a).exp() * exprel(-r * b_minus_a) / (4.0 * PI * (self.a + self.b))
    }

    pub(crate) fn g2(&self, r: f64) -> Complex64 {
        if self.beta == 0.0 {
            return (-r * self.c).exp() / (4.0 * PI * r);
        }
        ((-r * self.a).exp() + (-r * self.b).exp()) / (8.0 * PI * r)
    }

    pub(crate) fn g2_ren(&self, r: f64) -> Complex64 {
        let a_c = -self.beta / (self.a + self.c);
        let b_c = self.beta / (self.b + self.c);
        -(-r * self.c).exp() * (a_c * exprel(-r * a_c) + b_c * exprel(-r * b_c)) / (8.0 * PI)
    }

    /// `D±G1` without the factor `x1 ± i x2`.
    pub(crate) fn dpm_g1_reduced(&self, r: f64) -> Complex64 {
        let s = self.a + self.b;
        let b_minus_a = 2.0 * self.beta / s;
        let bracket = (-r * self.b).exp()
            - (r * self.a + 1.0) * (-r * self.a).exp() * exprel(-r * b_minus_a);
        2.0 * bracket / (8.0 * PI * r * r * s)
    }
}

/// `G1(0)` from the inverse-hyperbolic-tangent closed form.
pub(crate) fn g1_origin(alpha: f64, beta: f64, zeta: Complex64) -> Complex64 {
    let (_, cc) = origin_roots(beta, zeta);
    cc * atanhc(alpha * cc) / (4.0 * PI)
}

/// `G2ren(0)` from the square-root plus inverse-hyperbolic-tangent form.
pub(crate) fn g2_ren_origin(alpha: f64, beta: f64, zeta: Complex64) -> Complex64 {
    let (s, cc) = origin_roots(beta, zeta);
    let t = (beta / zeta) * (beta / zeta);
    let one_minus_s = t / (c1() + s);
    let half_plus = ((c1() + s) * 0.5).sqrt();
    let sq = (-zeta).sqrt();
    let w = alpha * cc;
    sq * (0.5 * one_minus_s) / (c1() + half_plus) / (4.0 * PI) + alpha * w.atanh() / (8.0 * PI)
}

/// `s = √(1 − (β/ζ)²)` and `c = √(−1/(2ζ(1+s)))`.
fn origin_roots(beta: f64, zeta: Complex64) -> (Complex64, Complex64) {
    let t = (beta / zeta) * (beta / zeta);
    let s = (c1() - t).sqrt();
    let cc = (-(2.0 * zeta * (c1() + s)).inv()).sqrt();
    (s, cc)
}
