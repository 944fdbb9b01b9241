use num_complex::Complex64;

use super::{SeriesParams, TripleArg};
use crate::series_engine::horn::{h3_gauge, h3_region_contains};
use crate::series_engine::{Representation, REGION_MARGIN};

/// How a point relates to the convergence region of one representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Outside,
    Interior,
    /// On the boundary, admitted by a parameter side condition.
    Boundary,
}

impl Membership {
    pub fn admits(self) -> bool {
        self != Membership::Outside
    }
}

/// Region flags of the three `X′` representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XpRegions {
    pub xp1: Membership,
    pub xp2: Membership,
    pub xp3: Membership,
}

impl XpRegions {
    pub fn get(&self, rep: Representation) -> Membership {
        match rep {
            Representation::Xp1 => self.xp1,
            Representation::Xp2 => self.xp2,
            Representation::Xp3 => self.xp3,
            _ => Membership::Outside,
        }
    }

    pub fn contains(&self, rep: Representation) -> bool {
        self.get(rep).admits()
    }

    pub fn is_empty(&self) -> bool {
        !(self.xp1.admits() || self.xp2.admits() || self.xp3.admits())
    }

    /// Admissible representations in tie-break order.
    pub fn admissible(&self) -> Vec<Representation> {
        [Representation::Xp2, Representation::Xp1, Representation::Xp3]
            .into_iter()
            .filter(|r| self.contains(*r))
            .collect()
    }
}

fn xp2_bound(x1: f64) -> f64 {
    if x1 == 0.0 {
        f64::INFINITY
    } else {
        (1.0 + (1.0 - 4.0 * x1).max(0.0).sqrt()) / (2.0 * x1)
    }
}

/// Which of the `X′` representations converge at `z`. `ζ3` is unrestricted.
pub fn classify_xprime_region(z: &TripleArg, p: &SeriesParams) -> XpRegions {
    let x1 = z.z1.norm();
    let x2 = z.z2.norm();
    let tol = REGION_MARGIN;

    let xp1 = if x2 >= 2.0 - tol {
        Membership::Outside
    } else if x1 < 0.25 - tol {
        Membership::Interior
    } else if (x1 - 0.25).abs() <= tol && (p.a - p.b - 0.5).re < 0.0 {
        Membership::Boundary
    } else {
        Membership::Outside
    };

    let xp2 = if x1 >= 0.25 - tol {
        Membership::Outside
    } else {
        let bound = xp2_bound(x1);
        if x2 < bound * (1.0 - tol) {
            Membership::Interior
        } else if (x2 - bound).abs() <= tol * bound && (p.a - p.b).re < 0.0 {
            Membership::Boundary
        } else {
            Membership::Outside
        }
    };

    let xp3 = if h3_region_contains(x1, x1 * x2) {
        Membership::Interior
    } else {
        Membership::Outside
    };

    XpRegions { xp1, xp2, xp3 }
}

/// Rough geometric decay rate of the outer series of `rep` at `z`;
/// below 1 inside the region.
pub fn xprime_gauge(rep: Representation, z: &TripleArg) -> f64 {
    let x1 = z.z1.norm();
    let x2 = z.z2.norm();
    match rep {
        Representation::Xp1 => (4.0 * x1).max(x2 / 2.0),
        Representation::Xp2 => (4.0 * x1).max(x2 / xp2_bound(x1)),
        Representation::Xp3 => h3_gauge(x1, x1 * x2),
        _ => f64::INFINITY,
    }
}

pub(crate) fn x_gauge(rep: Representation, p: &SeriesParams, z: &TripleArg) -> f64 {
    let a = p.a;
    let b = p.b;
    let one = Complex64::new(1.0, 0.0);
    match rep {
        Representation::X1 => z.z1.norm() / (a * (a + one) * b).norm(),
        Representation::X2 => z.z2.norm() / (a * b).norm(),
        Representation::X3 => z.z3.norm() / a.norm(),
        _ => f64::INFINITY,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arg(z1: f64, z2: f64) -> TripleArg {
        TripleArg::new(Complex64::new(z1, 0.0), Complex64::new(z2, 0.0), Complex64::new(-3.0, 1.0))
    }

    #[test]
    fn origin_in_all() {
        let r = classify_xprime_region(&TripleArg::zero(), &SeriesParams::real(0.5, 1.5));
        assert_eq!(r.admissible().len(), 3);
    }

    #[test]
    fn reference_points() {
        let p = SeriesParams::real(0.5, 1.5);
        let r = classify_xprime_region(&arg(0.3, 0.1), &p);
        assert!(!r.contains(Representation::Xp1));
        let r = classify_xprime_region(&arg(0.2, 1.5), &p);
        assert!(r.contains(Representation::Xp1) && r.contains(Representation::Xp2));
        let r = classify_xprime_region(&arg(0.2, 3.0), &p);
        assert!(!r.contains(Representation::Xp1) && r.contains(Representation::Xp2));
        let r = classify_xprime_region(&arg(0.2, 4.0), &p);
        assert!(r.is_empty());
    }

    #[test]
    fn boundary_side_conditions() {
        let r = classify_xprime_region(&arg(0.25, 1.0), &SeriesParams::real(0.5, 1.5));
        assert_eq!(r.xp1, Membership::Boundary);
        let r = classify_xprime_region(&arg(0.25, 1.0), &SeriesParams::real(2.5, 1.5));
        assert_eq!(r.xp1, Membership::Outside);
        let x1: f64 = 0.2;
        let bound = (1.0 + (1.0 - 4.0 * x1).sqrt()) / (2.0 * x1);
        let r = classify_xprime_region(&arg(x1, bound), &SeriesParams::real(0.5, 1.5));
        assert_eq!(r.xp2, Membership::Boundary);
        let r = classify_xprime_region(&arg(x1, bound), &SeriesParams::real(1.5, 0.5));
        assert_eq!(r.xp2, Membership::Outside);
    }
}
