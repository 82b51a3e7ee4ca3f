use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

/// A point in the complex plane, used both for the parameter `c` and the
/// dynamic variable `z`.
///
/// Values built through [`ComplexValue::new`] are finite. Iterates produced
/// by [`quadratic_step`](crate::quadratic_step) may overflow once an orbit has
/// long since escaped; the escape test treats such values as escaped.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexValue {
    pub(crate) re: f64,
    pub(crate) im: f64,
}

impl ComplexValue {
    pub const ZERO: ComplexValue = ComplexValue { re: 0.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(ComplexValue { re, im })
        } else {
            Err(Error::NonFinite { re, im })
        }
    }

    /// Real-axis point.
    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    pub(crate) const fn raw(re: f64, im: f64) -> Self {
        ComplexValue { re, im }
    }

    #[inline]
    pub fn re(self) -> f64 {
        self.re
    }

    #[inline]
    pub fn im(self) -> f64 {
        self.im
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn norm(self) -> f64 {
        self.re.hypot(self.im)
    }

    #[inline]
    pub fn conj(self) -> Self {
        ComplexValue {
            re: self.re,
            im: -self.im,
        }
    }
}

impl Neg for ComplexValue {
    type Output = ComplexValue;

    fn neg(self) -> Self {
        ComplexValue {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prec = f.precision().unwrap_or(6);
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{:.*}{}{:.*}i", prec, self.re, sign, prec, self.im.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        assert!(ComplexValue::new(f64::NAN, 0.0).is_err());
        assert!(ComplexValue::new(0.0, f64::INFINITY).is_err());
        assert!(ComplexValue::new(-1.0, 0.5).is_ok());
    }

    #[test]
    fn conj_and_neg() {
        let z = ComplexValue::new(0.3, -0.7).unwrap();
        assert_eq!(z.conj(), ComplexValue::new(0.3, 0.7).unwrap());
        assert_eq!(-z, ComplexValue::new(-0.3, 0.7).unwrap());
        assert_eq!(z.norm_sqr(), 0.3 * 0.3 + 0.7 * 0.7);
    }

    #[test]
    fn display() {
        let z = ComplexValue::new(-0.33, 0.57).unwrap();
        assert_eq!(format!("{z:.2}"), "-0.33+0.57i");
        assert_eq!(format!("{:.1}", z.conj()), "-0.3-0.6i");
    }
}
