//! The quadratic map `z -> z^2 + c` and escape-time evaluation.

use crate::complex::ComplexValue;
use crate::error::{Error, Result};

/// Largest accepted iteration budget. Escape fields store counts as `u32`
/// with `u32::MAX` reserved for interior cells.
pub const MAX_BUDGET: u32 = (1 << 31) - 2;

/// Bailout radius and iteration budget for escape-time evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationConfig {
    bailout_radius: f64,
    max_iterations: u32,
}

impl IterationConfig {
    pub const DEFAULT_BAILOUT: f64 = 2.0;
    pub const RENDER_BUDGET: u32 = 500;
    pub const CLASSIFY_BUDGET: u32 = 1000;

    /// Radius 2 is the smallest radius guaranteeing divergence for this
    /// family, so anything below it is rejected.
    pub fn new(bailout_radius: f64, max_iterations: u32) -> Result<Self> {
        if !bailout_radius.is_finite() || bailout_radius < 2.0 {
            return Err(Error::InvalidConfig(format!(
                "bailout radius must be a finite value >= 2, got {bailout_radius}"
            )));
        }
        if max_iterations == 0 || max_iterations > MAX_BUDGET {
            return Err(Error::InvalidConfig(format!(
                "max iterations must be in 1..={MAX_BUDGET}, got {max_iterations}"
            )));
        }
        Ok(IterationConfig {
            bailout_radius,
            max_iterations,
        })
    }

    /// Bailout 2 with the given budget.
    pub fn with_budget(max_iterations: u32) -> Result<Self> {
        Self::new(Self::DEFAULT_BAILOUT, max_iterations)
    }

    /// Bailout 2, 500 iterations.
    pub fn render() -> Self {
        IterationConfig {
            bailout_radius: Self::DEFAULT_BAILOUT,
            max_iterations: Self::RENDER_BUDGET,
        }
    }

    /// Bailout 2, 1000 iterations.
    pub fn classification() -> Self {
        IterationConfig {
            bailout_radius: Self::DEFAULT_BAILOUT,
            max_iterations: Self::CLASSIFY_BUDGET,
        }
    }

    pub fn bailout_radius(&self) -> f64 {
        self.bailout_radius
    }

    pub fn max_iterations(&self) -> u32 {
        self.max_iterations
    }
}

/// How an orbit terminated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitOutcome {
    /// Iteration `t >= 1` at which `|z_t|` first exceeded the bailout radius.
    pub escape_index: Option<u32>,
    /// `z` at termination.
    pub final_value: ComplexValue,
}

impl OrbitOutcome {
    pub fn escaped(&self) -> bool {
        self.escape_index.is_some()
    }

    /// Compares the escaped flag and index, ignoring the final value.
    pub fn same_escape(&self, other: &OrbitOutcome) -> bool {
        self.escape_index == other.escape_index
    }
}

/// One application of the map: `z^2 + c`.
#[inline]
pub fn quadratic_step(z: ComplexValue, c: ComplexValue) -> ComplexValue {
    ComplexValue::raw(
        z.re * z.re - z.im * z.im + c.re,
        2.0 * z.re * z.im + c.im,
    )
}

/// Iterates from `z0` under parameter `c`, testing `|z_t| > bailout` after
/// every update for `t = 1..=max_iterations`.
///
/// `z0` itself is never tested. A seed outside the bailout radius escapes at
/// index 1 because its first iterate is larger still.
pub fn escape_time(z0: ComplexValue, c: ComplexValue, cfg: &IterationConfig) -> OrbitOutcome {
    let limit = cfg.bailout_radius * cfg.bailout_radius;
    let mut z = z0;
    for t in 1..=cfg.max_iterations {
        z = quadratic_step(z, c);
        let r2 = z.norm_sqr();
        // an overflowed iterate becomes NaN and counts as escaped
        if r2 > limit || r2.is_nan() {
            return OrbitOutcome {
                escape_index: Some(t),
                final_value: z,
            };
        }
    }
    OrbitOutcome {
        escape_index: None,
        final_value: z,
    }
}

/// Orbit of the critical point `0`, which decides membership of `c` in the
/// Mandelbrot set.
pub fn critical_orbit(c: ComplexValue, cfg: &IterationConfig) -> OrbitOutcome {
    escape_time(ComplexValue::ZERO, c, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im).unwrap()
    }

    #[test]
    fn step_examples() {
        assert_eq!(quadratic_step(cv(0.0, 0.0), cv(0.0, 0.0)), cv(0.0, 0.0));
        let m1 = cv(-1.0, 0.0);
        let z1 = quadratic_step(cv(0.0, 0.0), m1);
        assert_eq!(z1, m1);
        assert_eq!(quadratic_step(z1, m1), cv(0.0, 0.0));
        assert_eq!(quadratic_step(cv(1.0, 1.0), cv(0.0, 0.0)), cv(0.0, 2.0));
    }

    #[test]
    fn config_validation() {
        assert!(IterationConfig::new(1.9, 10).is_err());
        assert!(IterationConfig::new(f64::NAN, 10).is_err());
        assert!(IterationConfig::new(2.0, 0).is_err());
        assert!(IterationConfig::new(2.0, MAX_BUDGET + 1).is_err());
        assert!(IterationConfig::new(2.0, MAX_BUDGET).is_ok());
        assert_eq!(IterationConfig::render().max_iterations(), 500);
        assert_eq!(IterationConfig::classification().max_iterations(), 1000);
    }

    #[test]
    fn escape_examples() {
        for budget in [1, 7, 500] {
            let cfg = IterationConfig::with_budget(budget).unwrap();
            let out = escape_time(cv(0.0, 0.0), cv(0.0, 0.0), &cfg);
            assert_eq!(out.escape_index, None);
            assert_eq!(out.final_value, cv(0.0, 0.0));
        }
        let cfg = IterationConfig::render();
        // 0 -> 1 -> 2 -> 5: |2| does not exceed the radius.
        let out = escape_time(cv(0.0, 0.0), cv(1.0, 0.0), &cfg);
        assert_eq!(out.escape_index, Some(3));
        assert_eq!(out.final_value, cv(5.0, 0.0));
        assert_eq!(
            escape_time(cv(0.0, 0.0), cv(3.0, 0.0), &cfg).escape_index,
            Some(1)
        );
    }

    #[test]
    fn budget_one_reports_bounded() {
        let cfg = IterationConfig::with_budget(2).unwrap();
        let out = critical_orbit(cv(1.0, 0.0), &cfg);
        assert_eq!(out.escape_index, None);
        assert_eq!(out.final_value, cv(2.0, 0.0));
    }

    #[test]
    fn critical_orbit_examples() {
        let cfg = IterationConfig::classification();
        assert!(!critical_orbit(cv(-1.0, 0.0), &cfg).escaped());
        assert_eq!(critical_orbit(cv(0.44, 0.15), &cfg).escape_index, Some(7));
        assert!(!critical_orbit(cv(0.0, 1.0), &cfg).escaped());
    }

    #[test]
    fn large_seed_escapes_at_first_step() {
        let cfg = IterationConfig::render();
        let out = escape_time(cv(3.0, 0.0), cv(0.0, 0.0), &cfg);
        assert_eq!(out.escape_index, Some(1));
        // Overflow to inf/NaN still counts as escape.
        let out = escape_time(cv(1e200, 1e200), cv(0.0, 0.0), &cfg);
        assert_eq!(out.escape_index, Some(1));
    }
}
