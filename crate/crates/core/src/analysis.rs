//! Mandelbrot membership and Julia-set connectivity.
//!
//! A filled Julia set `K_c` is connected exactly when the critical orbit of
//! `c` stays bounded, so both questions reduce to the same test. Parameters
//! in the main cardioid or the period-2 bulb are settled by closed forms
//! without iterating; everything else falls back to escape time, where a
//! bounded orbit at the end of the budget is reported as connected with
//! [`Evidence::BoundedAtBudget`].

use std::fmt;

use serde::Serialize;

use crate::complex::ComplexValue;
use crate::iteration::{critical_orbit, IterationConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Decision {
    Connected,
    Disconnected,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Connected => "Connected",
            Decision::Disconnected => "Disconnected",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Evidence {
    /// Closed-form cardioid or bulb test; a proof of membership.
    OracleInterior,
    /// Critical orbit did not escape within the budget.
    BoundedAtBudget,
    /// Critical orbit escaped at this iteration.
    EscapedAt(u32),
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::OracleInterior => f.write_str("OracleInterior"),
            Evidence::BoundedAtBudget => f.write_str("BoundedAtBudget"),
            Evidence::EscapedAt(t) => write!(f, "EscapedAt({t})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConnectivityVerdict {
    pub decision: Decision,
    pub evidence: Evidence,
    /// Iteration budget in force when the verdict was reached.
    pub budget_used: u32,
}

impl ConnectivityVerdict {
    pub fn escape_index(&self) -> Option<u32> {
        match self.evidence {
            Evidence::EscapedAt(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.decision == Decision::Connected
    }
}

impl fmt::Display for ConnectivityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/{} (budget {})",
            self.decision, self.evidence, self.budget_used
        )
    }
}

/// True when `c` lies strictly inside the main cardioid or the period-2
/// bulb, both of which are contained in the Mandelbrot set.
pub fn cardioid_or_bulb_interior(c: ComplexValue) -> bool {
    let (x, y) = (c.re(), c.im());
    let y2 = y * y;
    let xm = x - 0.25;
    let q = xm * xm + y2;
    if q * (q + xm) < 0.25 * y2 {
        return true;
    }
    let xp = x + 1.0;
    xp * xp + y2 < 1.0 / 16.0
}

pub fn mandelbrot_membership(c: ComplexValue, cfg: &IterationConfig) -> ConnectivityVerdict {
    let budget_used = cfg.max_iterations();
    if cardioid_or_bulb_interior(c) {
        return ConnectivityVerdict {
            decision: Decision::Connected,
            evidence: Evidence::OracleInterior,
            budget_used,
        };
    }
    match critical_orbit(c, cfg).escape_index {
        Some(t) => ConnectivityVerdict {
            decision: Decision::Disconnected,
            evidence: Evidence::EscapedAt(t),
            budget_used,
        },
        None => ConnectivityVerdict {
            decision: Decision::Connected,
            evidence: Evidence::BoundedAtBudget,
            budget_used,
        },
    }
}

/// Connectivity of the Julia set of `z^2 + c`. Same procedure as
/// [`mandelbrot_membership`]; the verdict is read as a property of `J_c`.
pub fn julia_connectivity(c: ComplexValue, cfg: &IterationConfig) -> ConnectivityVerdict {
    mandelbrot_membership(c, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert!(cardioid_or_bulb_interior(cv(0.0, 0.0)));
        assert!(cardioid_or_bulb_interior(cv(-1.0, 0.0)));
        assert!(cardioid_or_bulb_interior(cv(0.22, 0.22)));
        assert!(cardioid_or_bulb_interior(cv(0.0, 0.63)));
        // cusp and the bulb boundary are not strictly interior
        assert!(!cardioid_or_bulb_interior(cv(0.25, 0.0)));
        assert!(!cardioid_or_bulb_interior(cv(-1.25, 0.0)));
        assert!(!cardioid_or_bulb_interior(cv(0.44, 0.15)));
        assert!(!cardioid_or_bulb_interior(cv(0.0, 0.70)));
    }

    #[test]
    fn membership_examples() {
        let cfg = IterationConfig::classification();
        let v = mandelbrot_membership(cv(1.0, 0.0), &cfg);
        assert_eq!(v.decision, Decision::Disconnected);
        assert_eq!(v.evidence, Evidence::EscapedAt(3));
        assert!(mandelbrot_membership(cv(-0.33, 0.57), &cfg).is_connected());
        assert_eq!(
            mandelbrot_membership(cv(3.0, 0.0), &cfg).evidence,
            Evidence::EscapedAt(1)
        );
    }

    #[test]
    fn connectivity_examples() {
        let cfg = IterationConfig::classification();
        let v = julia_connectivity(cv(0.44, 0.15), &cfg);
        assert_eq!(v.decision, Decision::Disconnected);
        assert_eq!(v.escape_index(), Some(7));
        let v = julia_connectivity(cv(0.22, -0.22), &cfg);
        assert_eq!(v.evidence, Evidence::OracleInterior);
        let v = julia_connectivity(cv(0.26, 0.0), &cfg);
        assert_eq!(v.escape_index(), Some(30));
        // cusp: bounded, never proved
        let v = julia_connectivity(cv(0.25, 0.0), &cfg);
        assert_eq!(v.decision, Decision::Connected);
        assert_eq!(v.evidence, Evidence::BoundedAtBudget);
    }

    #[test]
    fn formatting() {
        assert_eq!(Evidence::EscapedAt(7).to_string(), "EscapedAt(7)");
        let v = mandelbrot_membership(cv(0.0, 0.0), &IterationConfig::classification());
        assert_eq!(v.to_string(), "Connected/OracleInterior (budget 1000)");
    }
}
