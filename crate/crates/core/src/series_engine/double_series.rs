//! Signed-weight Srivastava–Daoust double series
//!
//! ```text
//!   Σ_{r,s ≥ 0}  Π_num (a_j)_{θ_j r + φ_j s} / Π_den (c_j)_{ψ_j r + δ_j s} · z1^r z2^s / (r! s!)
//! ```
//!
//! Kampé de Fériet functions are the instances whose weights are 0 or 1.
//! Weights may be negative, so that `(a)_{2m−n}` (Horn `Ｈ10`) and `(a)_{m−n}`
//! (Horn `Ｈ3`) fit the same evaluator.

use num_complex::Complex64;

use super::scaled::Scaled;
use super::{ensure_finite, QuietCounter, Representation, SeriesConfig, SeriesResult, REGION_MARGIN};
use crate::{Error, Result};

/// One Pochhammer factor `(param)_{w1·r + w2·s}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Factor {
    pub param: Complex64,
    pub w1: i32,
    pub w2: i32,
}

impl Factor {
    pub fn joint(param: Complex64, w1: i32, w2: i32) -> Self {
        Self { param, w1, w2 }
    }

    /// Factor depending on the first summation index only.
    pub fn first(param: Complex64) -> Self {
        Self::joint(param, 1, 0)
    }

    /// Factor depending on the second summation index only.
    pub fn second(param: Complex64) -> Self {
        Self::joint(param, 0, 1)
    }

    fn index(&self, r: usize, s: usize) -> i64 {
        self.w1 as i64 * r as i64 + self.w2 as i64 * s as i64
    }
}

/// Polydisc `|z1| < r1, |z2| < r2` on which a non-entire series is known to
/// converge. Radii may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polydisc {
    pub r1: f64,
    pub r2: f64,
}

impl Polydisc {
    pub fn contains(&self, z1: Complex64, z2: Complex64) -> bool {
        inside(z1.norm(), self.r1) && inside(z2.norm(), self.r2)
    }
}

fn inside(x: f64, radius: f64) -> bool {
    radius.is_infinite() || x < radius * (1.0 - REGION_MARGIN)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SdSpec {
    pub num: Vec<Factor>,
    pub den: Vec<Factor>,
    /// Required unless [`SdSpec::is_entire`] holds.
    pub region: Option<Polydisc>,
}

impl SdSpec {
    pub fn new(num: Vec<Factor>, den: Vec<Factor>) -> Self {
        Self { num, den, region: None }
    }

    pub fn with_region(mut self, region: Polydisc) -> Self {
        self.region = Some(region);
        self
    }

    /// Entire-function criterion: all weights nonnegative and, for each
    /// variable, `1 + Σ_den w − Σ_num w > 0`.
    pub fn is_entire(&self) -> bool {
        let all = self.num.iter().chain(self.den.iter());
        if all.clone().any(|f| f.w1 < 0 || f.w2 < 0) {
            return false;
        }
        let excess = |pick: fn(&Factor) -> i32| {
            1 + self.den.iter().map(pick).sum::<i32>() - self.num.iter().map(pick).sum::<i32>()
        };
        excess(|f| f.w1) > 0 && excess(|f| f.w2) > 0
    }

    fn check_region(&self, z1: Complex64, z2: Complex64) -> Result<()> {
        if self.is_entire() {
            return Ok(());
        }
        match self.region {
            None => Err(Error::OutOfRegion(
                "series is not entire and no convergence region was supplied".into(),
            )),
            Some(pd) if pd.contains(z1, z2) => Ok(()),
            Some(pd) => Err(Error::OutOfRegion(format!(
                "(|z1|, |z2|) = ({:.6e}, {:.6e}) outside the polydisc ({:.6e}, {:.6e})",
                z1.norm(),
                z2.norm(),
                pd.r1,
                pd.r2
            ))),
        }
    }
}

/// Lazily grown table of `(a)_k` (numerator) or `1/(a)_k` (denominator),
/// for `k` of either sign. `None` marks a pole.
struct PochTable {
    param: Complex64,
    reciprocal: bool,
    pos: Vec<Option<Scaled>>,
    neg: Vec<Option<Scaled>>,
}

impl PochTable {
    fn new(param: Complex64, reciprocal: bool) -> Self {
        Self {
            param,
            reciprocal,
            pos: vec![Some(Scaled::ONE)],
            neg: vec![Some(Scaled::ONE)],
        }
    }

    fn step(prev: Option<Scaled>, f: Complex64, multiply: bool) -> Option<Scaled> {
        let prev = prev?;
        if multiply {
            Some(prev.mul_c(f))
        } else if f == Complex64::new(0.0, 0.0) {
            None
        } else {
            Some(prev.div_c(f))
        }
    }

    fn get(&mut self, k: i64) -> Option<Scaled> {
        if k >= 0 {
            let k = k as usize;
            while self.pos.len() <= k {
                let j = self.pos.len() - 1;
                let f = self.param + j as f64;
                let next = Self::step(self.pos[j], f, !self.reciprocal);
                self.pos.push(next);
            }
            self.pos[k]
        } else {
            let k = (-k) as usize;
            while self.neg.len() <= k {
                let j = self.neg.len();
                let f = self.param - j as f64;
                let next = Self::step(self.neg[j - 1], f, self.reciprocal);
                self.neg.push(next);
            }
            self.neg[k]
        }
    }
}

/// Table of `z^k/k!`.
struct PowerTable {
    z: Complex64,
    vals: Vec<Scaled>,
}

impl PowerTable {
    fn new(z: Complex64) -> Self {
        Self { z, vals: vec![Scaled::ONE] }
    }

    fn get(&mut self, k: usize) -> Scaled {
        while self.vals.len() <= k {
            let j = self.vals.len();
            let next = self.vals[j - 1].mul_c(self.z / j as f64);
            self.vals.push(next);
        }
        self.vals[k]
    }
}

pub fn srivastava_daoust(spec: &SdSpec, z1: Complex64, z2: Complex64) -> Result<SeriesResult> {
    srivastava_daoust_with(spec, z1, z2, &SeriesConfig::default())
}

/// Sums the series over triangular shells `r + s = n` in ascending `n`.
///
/// When the region hint is unbounded in exactly one variable, rows along that
/// variable are summed to convergence instead, one row per index of the
/// other variable.
pub fn srivastava_daoust_with(
    spec: &SdSpec,
    z1: Complex64,
    z2: Complex64,
    cfg: &SeriesConfig,
) -> Result<SeriesResult> {
    let zero = Complex64::new(0.0, 0.0);
    if z1 == zero && z2 == zero {
        return Ok(SeriesResult::exact(Complex64::new(1.0, 0.0), Representation::SrivastavaDaoust));
    }
    spec.check_region(z1, z2)?;
    let mut terms = Terms::new(spec, z1, z2);
    match spec.region {
        Some(pd) if z1 != zero && z2 != zero && pd.r1.is_finite() && pd.r2.is_infinite() => {
            by_rows(&mut terms, false, cfg)
        }
        Some(pd) if z1 != zero && z2 != zero && pd.r1.is_infinite() && pd.r2.is_finite() => {
            by_rows(&mut terms, true, cfg)
        }
        _ => by_shells(&mut terms, z1 == zero, z2 == zero, cfg),
    }
}

/// Term generator backed by lazily grown Pochhammer and power tables.
struct Terms {
    num: Vec<(PochTable, Factor)>,
    den: Vec<(PochTable, Factor)>,
    p1: PowerTable,
    p2: PowerTable,
}

impl Terms {
    fn new(spec: &SdSpec, z1: Complex64, z2: Complex64) -> Self {
        Self {
            num: spec.num.iter().map(|f| (PochTable::new(f.param, false), *f)).collect(),
            den: spec.den.iter().map(|f| (PochTable::new(f.param, true), *f)).collect(),
            p1: PowerTable::new(z1),
            p2: PowerTable::new(z2),
        }
    }

    fn get(&mut self, r: usize, s: usize) -> Result<Complex64> {
        let mut t = self.p1.get(r).mul(self.p2.get(s));
        for (table, f) in self.num.iter_mut() {
            if t.is_zero() {
                return Ok(Complex64::new(0.0, 0.0));
            }
            match table.get(f.index(r, s)) {
                Some(v) => t = t.mul(v),
                None => {
                    return Err(Error::Domain(format!(
                        "numerator Pochhammer ({})_{} is a pole",
                        f.param,
                        f.index(r, s)
                    )))
                }
            }
        }
        if t.is_zero() {
            return Ok(Complex64::new(0.0, 0.0));
        }
        for (table, f) in self.den.iter_mut() {
            match table.get(f.index(r, s)) {
                Some(v) => t = t.mul(v),
                None => return Err(Error::ParameterPole { param: f.param }),
            }
        }
        Ok(t.to_complex())
    }
}

fn finish(sum: Complex64, terms_used: usize, est_error: f64) -> Result<SeriesResult> {
    Ok(SeriesResult {
        value: ensure_finite(sum, "double series")?,
        terms_used,
        est_error,
        representation: Representation::SrivastavaDaoust,
        boundary: false,
    })
}

fn by_shells(terms: &mut Terms, z1_zero: bool, z2_zero: bool, cfg: &SeriesConfig) -> Result<SeriesResult> {
    let zero = Complex64::new(0.0, 0.0);
    let mut sum = zero;
    let mut quiet = QuietCounter::default();
    let mut last = 0.0;
    for n in 0..=cfg.max_shells {
        let (lo, hi) = if z1_zero {
            (0, 0)
        } else if z2_zero {
            (n, n)
        } else {
            (0, n)
        };
        let mut shell = zero;
        let mut shell_abs = 0.0;
        for r in lo..=hi {
            let v = terms.get(r, n - r)?;
            shell += v;
            shell_abs += v.norm();
        }
        sum += shell;
        last = shell_abs;
        if !(shell_abs.is_finite() && sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::Domain("double series overflowed".into()));
        }
        if quiet.feed(shell_abs, sum, cfg.tol_rel) {
            return finish(sum, n + 1, shell_abs);
        }
    }
    Err(Error::NoConvergence {
        terms: cfg.max_shells,
        est_error: last,
    })
}

/// Outer index over the bounded variable, inner rows over the unbounded one.
/// A row stops after three consecutive non-increasing nonzero terms below a
/// hundredth of the tolerance.
fn by_rows(terms: &mut Terms, outer_second: bool, cfg: &SeriesConfig) -> Result<SeriesResult> {
    let zero = Complex64::new(0.0, 0.0);
    let mut sum = zero;
    let mut quiet = QuietCounter::default();
    let mut last = 0.0;
    for m in 0..=cfg.max_shells {
        let mut row = zero;
        let mut row_abs = 0.0;
        let mut small = 0;
        let mut prev = f64::INFINITY;
        let mut k = 0;
        loop {
            if k > cfg.max_terms {
                return Err(Error::NoConvergence { terms: cfg.max_terms, est_error: prev });
            }
            let v = if outer_second { terms.get(k, m)? } else { terms.get(m, k)? };
            let a = v.norm();
            row += v;
            row_abs += a;
            if a > 0.0 {
                let scale = 1.0 + (sum + row).norm();
                if a <= 1e-2 * cfg.tol_rel * scale && a <= prev {
                    small += 1;
                } else {
                    small = 0;
                }
                prev = a;
            }
            k += 1;
            if small >= QuietCounter::NEEDED {
                break;
            }
        }
        sum += row;
        last = row_abs;
        if !(row_abs.is_finite() && sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::Domain("double series overflowed".into()));
        }
        if quiet.feed(row_abs, sum, cfg.tol_rel) {
            return finish(sum, m + 1, row_abs);
        }
    }
    Err(Error::NoConvergence {
        terms: cfg.max_shells,
        est_error: last,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series_engine::hyp0f1;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn origin_is_one() {
        let spec = SdSpec::new(vec![], vec![Factor::joint(c(1.5, 0.0), 2, 1)]);
        let v = srivastava_daoust(&spec, c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(v.value, c(1.0, 0.0));
    }

    #[test]
    fn slice_reduces_to_0f1() {
        let a = c(1.5, 0.2);
        let b = c(0.5, 0.0);
        let spec = SdSpec::new(vec![], vec![Factor::joint(a, 2, 1), Factor::first(b)]);
        let z3 = c(-2.3, 0.7);
        let v = srivastava_daoust(&spec, c(0.0, 0.0), z3).unwrap().value;
        let w = hyp0f1(a, z3).unwrap().value;
        assert!((v - w).norm() < 1e-13 * w.norm());
    }

    #[test]
    fn entire_bookkeeping() {
        let kdf = SdSpec::new(vec![], vec![Factor::joint(c(1.0, 0.0), 2, 1), Factor::first(c(1.0, 0.0))]);
        assert!(kdf.is_entire());
        let h10 = SdSpec::new(vec![Factor::joint(c(0.5, 0.0), 2, -1)], vec![Factor::first(c(1.5, 0.0))]);
        assert!(!h10.is_entire());
        assert!(matches!(
            srivastava_daoust(&h10, c(0.1, 0.0), c(0.1, 0.0)),
            Err(Error::OutOfRegion(_))
        ));
        let hinted = h10.with_region(Polydisc { r1: 0.25, r2: f64::INFINITY });
        assert!(srivastava_daoust(&hinted, c(0.1, 0.0), c(3.0, 0.0)).is_ok());
        assert!(srivastava_daoust(&hinted, c(0.26, 0.0), c(3.0, 0.0)).is_err());
    }

    #[test]
    fn rows_match_shells() {
        let h10 = SdSpec::new(vec![Factor::joint(c(0.5, 0.1), 2, -1)], vec![Factor::first(c(1.5, 0.0))]);
        let rows = h10.clone().with_region(Polydisc { r1: 0.25, r2: f64::INFINITY });
        let shells = h10.with_region(Polydisc { r1: 0.25, r2: 1e6 });
        for (z1, z2) in [(c(0.2, 0.03), c(3.0, -1.0)), (c(-0.1, 0.2), c(-6.0, 0.5)), (c(0.235, 0.0), c(0.4, 0.0))] {
            let a = srivastava_daoust(&rows, z1, z2).unwrap();
            let b = srivastava_daoust(&shells, z1, z2).unwrap();
            assert!((a.value - b.value).norm() < 1e-11 * b.value.norm(), "{a:?} {b:?}");
        }
    }

    #[test]
    fn denominator_pole() {
        let spec = SdSpec::new(vec![], vec![Factor::joint(c(-1.0, 0.0), 1, 1)]);
        assert!(matches!(
            srivastava_daoust(&spec, c(0.1, 0.0), c(0.2, 0.0)),
            Err(Error::ParameterPole { .. })
        ));
    }

    #[test]
    fn large_arguments_do_not_overflow_intermediates() {
        // Σ z1^r z2^s/(r! s! (1)_{r+s}) at moderately large arguments
        let spec = SdSpec::new(vec![], vec![Factor::joint(c(1.0, 0.0), 1, 1)]);
        let v = srivastava_daoust(&spec, c(30.0, 0.0), c(20.0, 0.0)).unwrap();
        assert!(v.value.re.is_finite() && v.value.re > 0.0);
    }
}
