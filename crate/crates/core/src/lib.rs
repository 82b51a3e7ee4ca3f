//! Complex electrical power on the parameter plane of `z -> z^2 + c`.
//!
//! A power value `S = P + jQ` is placed at a parameter `c` (directly, or
//! scaled by the extents of the Mandelbrot set). From there the crate can
//!
//! * iterate the quadratic map and measure escape time ([`escape_time`]),
//! * decide whether the Julia set of `c` is connected
//!   ([`julia_connectivity`]), using closed-form interior tests where they
//!   apply,
//! * render Mandelbrot and Julia escape fields in parallel with output that
//!   does not depend on the worker count ([`compute_escape_field`]),
//! * write the fields as binary PPM images ([`imaging`]),
//! * check the negation and conjugation symmetries of escape time over
//!   seeded samples ([`check_negation_symmetry`],
//!   [`check_conjugation_relation`]).
//!
//! ```
//! use phasor_julia::{julia_connectivity, to_parameter, IterationConfig, PowerPhasor, ScalingConfig};
//!
//! let s = PowerPhasor::new(0.44, 0.15)?;
//! let c = to_parameter(&s, &ScalingConfig::direct())?;
//! let verdict = julia_connectivity(c, &IterationConfig::classification());
//! assert!(!verdict.is_connected());
//! assert_eq!(verdict.escape_index(), Some(7));
//! # Ok::<(), phasor_julia::Error>(())
//! ```
//!
//! The guide in `book/` walks through each piece; its code listings are
//! compiled and run as doc-tests of this crate.

pub mod analysis;
mod complex;
mod error;
pub mod field;
pub mod imaging;
pub mod iteration;
pub mod power;
pub mod report;
pub mod study;
pub mod symmetry;

pub use analysis::{
    cardioid_or_bulb_interior, julia_connectivity, mandelbrot_membership, ConnectivityVerdict,
    Decision, Evidence,
};
pub use complex::ComplexValue;
pub use error::{Error, Result};
pub use field::{
    compute_escape_field, compute_escape_field_with_workers, pixel_to_complex, Cell, EscapeField,
    FieldMode, GridSpec,
};
pub use iteration::{critical_orbit, escape_time, quadratic_step, IterationConfig, OrbitOutcome};
pub use power::{
    classify_quadrant, from_parameter, power_factor, to_parameter, PowerFactor,
    PowerFactorCharacter, PowerPhasor, Quadrant, ScalingConfig, ScalingMode,
};
pub use report::{classify, ClassificationRecord};
pub use symmetry::{check_conjugation_relation, check_negation_symmetry, SymmetryReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/iteration.md")]
    mod iteration {}
    #[doc = include_str!("../../../book/src/power.md")]
    mod power {}
    #[doc = include_str!("../../../book/src/connectivity.md")]
    mod connectivity {}
    #[doc = include_str!("../../../book/src/symmetry.md")]
    mod symmetry {}
    #[doc = include_str!("../../../book/src/rendering.md")]
    mod rendering {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
