//! Seeded checks of the exact symmetries of escape time.
//!
//! Two identities hold bit-for-bit in floating point:
//!
//! * negation: `z` and `-z` have the same first iterate, so their escape
//!   indices agree for every `c`;
//! * conjugation: `(conj z, conj c)` produces the conjugate orbit of
//!   `(z, c)`, so escape indices agree. For real `c` this is the mirror in the
//!   real axis.
//!
//! Samples are drawn from a ChaCha8 stream seeded with a `u64`, so a report
//! depends only on its inputs, never on the number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::ComplexValue;
use crate::field::GridSpec;
use crate::iteration::{escape_time, IterationConfig, OrbitOutcome};

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryMismatch {
    pub sample_index: usize,
    pub input: ComplexValue,
    pub expected: OrbitOutcome,
    pub actual: OrbitOutcome,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryReport {
    pub relation_name: String,
    pub parameter: ComplexValue,
    pub samples_tested: usize,
    pub mismatches: usize,
    /// Mismatch with the lowest sample index.
    pub first_mismatch: Option<SymmetryMismatch>,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

impl std::fmt::Display for SymmetryReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} at c = {}: {} samples, {} mismatches",
            self.relation_name, self.parameter, self.samples_tested, self.mismatches
        )?;
        if let Some(m) = &self.first_mismatch {
            write!(
                f,
                " (first: sample {} z = {}, expected {:?}, got {:?})",
                m.sample_index, m.input, m.expected.escape_index, m.actual.escape_index
            )?;
        }
        Ok(())
    }
}

/// `count` points drawn uniformly from the window of `spec`.
pub fn sample_points(spec: &GridSpec, count: usize, seed: u64) -> Vec<ComplexValue> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half_w = spec.width() / 2.0;
    let half_h = spec.height() / 2.0;
    let center = spec.center();
    (0..count)
        .map(|_| {
            let u: f64 = rng.gen_range(-1.0..1.0);
            let v: f64 = rng.gen_range(-1.0..1.0);
            ComplexValue::raw(center.re() + u * half_w, center.im() + v * half_h)
        })
        .collect()
}

fn run_check<F>(
    relation_name: String,
    parameter: ComplexValue,
    points: &[ComplexValue],
    evaluate: F,
) -> SymmetryReport
where
    F: Fn(ComplexValue) -> (OrbitOutcome, OrbitOutcome) + Sync,
{
    let mismatches: Vec<SymmetryMismatch> = points
        .par_iter()
        .enumerate()
        .filter_map(|(i, &z)| {
            let (expected, actual) = evaluate(z);
            (!expected.same_escape(&actual)).then_some(SymmetryMismatch {
                sample_index: i,
                input: z,
                expected,
                actual,
            })
        })
        .collect();
    SymmetryReport {
        relation_name,
        parameter,
        samples_tested: points.len(),
        mismatches: mismatches.len(),
        // collect() on an indexed parallel iterator keeps sample order
        first_mismatch: mismatches.into_iter().next(),
    }
}

/// Compares `escape_time(z, c)` with `escape_time(-z, c)` over seeded
/// samples from the default Julia window.
pub fn check_negation_symmetry(
    c: ComplexValue,
    sample_count: usize,
    seed: u64,
    cfg: &IterationConfig,
) -> SymmetryReport {
    check_negation_symmetry_in(&GridSpec::julia_default(), c, sample_count, seed, cfg)
}

pub fn check_negation_symmetry_in(
    window: &GridSpec,
    c: ComplexValue,
    sample_count: usize,
    seed: u64,
    cfg: &IterationConfig,
) -> SymmetryReport {
    let points = sample_points(window, sample_count.max(1), seed);
    run_check("negation z -> -z".into(), c, &points, |z| {
        (escape_time(z, c, cfg), escape_time(-z, c, cfg))
    })
}

/// Compares `escape_time(z, c)` with `escape_time(conj z, conj c)` over
/// seeded samples from the default Julia window.
pub fn check_conjugation_relation(
    c: ComplexValue,
    sample_count: usize,
    seed: u64,
    cfg: &IterationConfig,
) -> SymmetryReport {
    check_conjugation_relation_in(&GridSpec::julia_default(), c, sample_count, seed, cfg)
}

pub fn check_conjugation_relation_in(
    window: &GridSpec,
    c: ComplexValue,
    sample_count: usize,
    seed: u64,
    cfg: &IterationConfig,
) -> SymmetryReport {
    let points = sample_points(window, sample_count.max(1), seed);
    let name = if c.im() == 0.0 {
        "real-axis mirror z -> conj z"
    } else {
        "conjugation (z, c) -> (conj z, conj c)"
    };
    run_check(name.into(), c, &points, |z| {
        (escape_time(z, c, cfg), escape_time(z.conj(), c.conj(), cfg))
    })
}
