//! Complex electrical power `S = P + jQ` and its placement on the parameter
//! plane.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complex::ComplexValue;
use crate::error::{Error, Result};

/// Signed real power `p` (W) and reactive power `q` (var).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerPhasor {
    p: f64,
    q: f64,
}

impl PowerPhasor {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(Error::InvalidPower(format!("non-finite power ({p}, {q})")));
        }
        Ok(PowerPhasor { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `|S| = sqrt(p^2 + q^2)`.
    pub fn apparent(&self) -> f64 {
        self.p.hypot(self.q)
    }
}

/// Location of `S` on the complex power plane. Zero components get their own
/// axis and origin cases instead of being folded into a quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Quadrant {
    I,
    II,
    III,
    IV,
    PositiveRealAxis,
    NegativeRealAxis,
    PositiveImagAxis,
    NegativeImagAxis,
    Origin,
}

impl Quadrant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Quadrant::I => "I",
            Quadrant::II => "II",
            Quadrant::III => "III",
            Quadrant::IV => "IV",
            Quadrant::PositiveRealAxis => "PositiveRealAxis",
            Quadrant::NegativeRealAxis => "NegativeRealAxis",
            Quadrant::PositiveImagAxis => "PositiveImagAxis",
            Quadrant::NegativeImagAxis => "NegativeImagAxis",
            Quadrant::Origin => "Origin",
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify_quadrant(s: &PowerPhasor) -> Quadrant {
    use std::cmp::Ordering::*;
    let sign = |x: f64| x.partial_cmp(&0.0).unwrap_or(Equal);
    match (sign(s.p), sign(s.q)) {
        (Greater, Greater) => Quadrant::I,
        (Less, Greater) => Quadrant::II,
        (Less, Less) => Quadrant::III,
        (Greater, Less) => Quadrant::IV,
        (Greater, Equal) => Quadrant::PositiveRealAxis,
        (Less, Equal) => Quadrant::NegativeRealAxis,
        (Equal, Greater) => Quadrant::PositiveImagAxis,
        (Equal, Less) => Quadrant::NegativeImagAxis,
        (Equal, Equal) => Quadrant::Origin,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PowerFactorCharacter {
    Lagging,
    Leading,
    Unity,
    PurelyReactive,
}

impl fmt::Display for PowerFactorCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PowerFactorCharacter::Lagging => "lagging",
            PowerFactorCharacter::Leading => "leading",
            PowerFactorCharacter::Unity => "unity",
            PowerFactorCharacter::PurelyReactive => "purely-reactive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerFactor {
    /// `p / |S|`, carrying the sign of `p` (negative when supplying power).
    pub value: f64,
    pub character: PowerFactorCharacter,
}

/// Power factor and lead/lag character. Undefined when `p = q = 0`.
pub fn power_factor(s: &PowerPhasor) -> Result<PowerFactor> {
    let apparent = s.apparent();
    if apparent == 0.0 {
        return Err(Error::PowerFactorUndefined);
    }
    let character = if s.p == 0.0 {
        PowerFactorCharacter::PurelyReactive
    } else if s.q > 0.0 {
        PowerFactorCharacter::Lagging
    } else if s.q < 0.0 {
        PowerFactorCharacter::Leading
    } else {
        PowerFactorCharacter::Unity
    };
    Ok(PowerFactor {
        value: (s.p / apparent).clamp(-1.0, 1.0),
        character,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScalingMode {
    /// `c = p + qi` unchanged.
    #[default]
    Direct,
    /// `c = (p / p_base) * c_x + (q / q_base) * c_y i`.
    Normalized,
}

impl FromStr for ScalingMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "direct" => Ok(ScalingMode::Direct),
            "normalized" => Ok(ScalingMode::Normalized),
            other => Err(format!(
                "unknown scaling mode '{other}' (expected direct or normalized)"
            )),
        }
    }
}

/// How power values are placed on the parameter plane.
///
/// `c_x = 0.25` and `c_y = 0.63` are the extents of the Mandelbrot set along
/// the positive real and imaginary axes; they also serve as the sweep limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingConfig {
    mode: ScalingMode,
    c_x: f64,
    c_y: f64,
    p_base: f64,
    q_base: f64,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        ScalingConfig {
            mode: ScalingMode::Direct,
            c_x: Self::C_X,
            c_y: Self::C_Y,
            p_base: 1.0,
            q_base: 1.0,
        }
    }
}

impl ScalingConfig {
    pub const C_X: f64 = 0.25;
    pub const C_Y: f64 = 0.63;

    pub fn new(mode: ScalingMode, c_x: f64, c_y: f64, p_base: f64, q_base: f64) -> Result<Self> {
        for (name, v) in [("c_x", c_x), ("c_y", c_y), ("p_base", p_base), ("q_base", q_base)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidScaling(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(ScalingConfig {
            mode,
            c_x,
            c_y,
            p_base,
            q_base,
        })
    }

    pub fn direct() -> Self {
        Self::default()
    }

    pub fn normalized() -> Self {
        ScalingConfig {
            mode: ScalingMode::Normalized,
            ..Self::default()
        }
    }

    pub fn mode(&self) -> ScalingMode {
        self.mode
    }

    pub fn c_x(&self) -> f64 {
        self.c_x
    }

    pub fn c_y(&self) -> f64 {
        self.c_y
    }

    /// Normalized-mode multipliers `(c_x / p_base, c_y / q_base)`. Both
    /// directions of the mapping use the same rounded factors, which keeps
    /// the round trip within one ulp.
    fn gains(&self) -> (f64, f64) {
        (self.c_x / self.p_base, self.c_y / self.q_base)
    }

}

pub fn to_parameter(s: &PowerPhasor, sc: &ScalingConfig) -> Result<ComplexValue> {
    match sc.mode {
        ScalingMode::Direct => ComplexValue::new(s.p, s.q),
        ScalingMode::Normalized => {
            let (kp, kq) = sc.gains();
            ComplexValue::new(s.p * kp, s.q * kq)
        }
    }
}

/// Inverse of [`to_parameter`] for the same scaling.
pub fn from_parameter(c: ComplexValue, sc: &ScalingConfig) -> Result<PowerPhasor> {
    match sc.mode {
        ScalingMode::Direct => PowerPhasor::new(c.re, c.im),
        ScalingMode::Normalized => {
            let (kp, kq) = sc.gains();
            PowerPhasor::new(c.re / kp, c.im / kq)
        }
    }
}
