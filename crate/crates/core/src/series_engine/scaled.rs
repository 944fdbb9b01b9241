use num_complex::Complex64;

const HI: f64 = 1.0e120;
const LO: f64 = 1.0e-120;

/// Complex number stored as `mant * 2^exp`, for products whose intermediate
/// factors overflow `f64` while the final term does not.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Scaled {
    mant: Complex64,
    exp: i32,
}

impl Scaled {
    pub(crate) const ONE: Scaled = Scaled {
        mant: Complex64::new(1.0, 0.0),
        exp: 0,
    };
    pub(crate) const ZERO: Scaled = Scaled {
        mant: Complex64::new(0.0, 0.0),
        exp: 0,
    };

    #[cfg(test)]
    pub(crate) fn from_complex(c: Complex64) -> Self {
        Scaled { mant: c, exp: 0 }.renorm()
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.mant.re == 0.0 && self.mant.im == 0.0
    }

    fn renorm(mut self) -> Self {
        let n = self.mant.re.abs().max(self.mant.im.abs());
        if n == 0.0 {
            return Self::ZERO;
        }
        if !(LO..=HI).contains(&n) {
            let k = n.log2().floor() as i32;
            self.mant = self.mant * 2f64.powi(-k);
            self.exp += k;
        }
        self
    }

    pub(crate) fn mul(self, other: Scaled) -> Scaled {
        Scaled {
            mant: self.mant * other.mant,
            exp: self.exp + other.exp,
        }
        .renorm()
    }

    pub(crate) fn mul_c(self, c: Complex64) -> Scaled {
        Scaled {
            mant: self.mant * c,
            exp: self.exp,
        }
        .renorm()
    }

    pub(crate) fn div_c(self, c: Complex64) -> Scaled {
        Scaled {
            mant: self.mant / c,
            exp: self.exp,
        }
        .renorm()
    }

    /// Converts back to `f64` range; may produce `inf` or flush to zero.
    pub(crate) fn to_complex(self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        // split the exponent to avoid overflow of 2^exp before the product
        let half = self.exp / 2;
        self.mant * 2f64.powi(half) * 2f64.powi(self.exp - half)
    }
}
