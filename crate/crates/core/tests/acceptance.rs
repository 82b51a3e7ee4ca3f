//! Exit criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see them.

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use phasor_julia::imaging::{colorize, encode_ppm, PaletteSpec};
use phasor_julia::study::{run_sweep, StudyOptions, SweepPreset};
use phasor_julia::{
    cardioid_or_bulb_interior, check_conjugation_relation, check_negation_symmetry, classify,
    compute_escape_field_with_workers, critical_orbit, julia_connectivity, mandelbrot_membership,
    pixel_to_complex, Cell, ComplexValue, Decision, Evidence, FieldMode, GridSpec,
    IterationConfig, PowerPhasor, ScalingConfig,
};

type Outcome = Result<String, String>;

fn report(id: u32, name: &str, outcome: Outcome) {
    match outcome {
        Ok(detail) => println!("[PASS] AC{id} {name}: {detail}"),
        Err(why) => {
            println!("[FAIL] AC{id} {name}: {why}");
            panic!("AC{id} failed: {why}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn cv(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im).unwrap()
}

/// Plain tuple arithmetic with a `hypot` magnitude test; shares no code with
/// the library kernel.
fn oracle_escape(z0: (f64, f64), c: (f64, f64), budget: u32) -> Option<u32> {
    let (mut x, mut y) = z0;
    for t in 1..=budget {
        let nx = x * x - y * y + c.0;
        let ny = 2.0 * x * y + c.1;
        x = nx;
        y = ny;
        if x.hypot(y) > 2.0 {
            return Some(t);
        }
    }
    None
}

#[test]
fn ac1_known_membership_facts() {
    let run = || -> Outcome {
        let cfg = IterationConfig::classification();
        let v = mandelbrot_membership(cv(-1.0, 0.0), &cfg);
        ensure!(v.decision == Decision::Connected, "c=-1 gave {v}");
        let v = mandelbrot_membership(cv(1.0, 0.0), &cfg);
        ensure!(
            v.decision == Decision::Disconnected && v.evidence == Evidence::EscapedAt(3),
            "c=1 gave {v}"
        );
        ensure!(oracle_escape((0.0, 0.0), (1.0, 0.0), 1000) == Some(3), "oracle disagrees at c=1");
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let r = rng.gen_range(2.0000001..50.0);
            let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let c = cv(r * th.cos(), r * th.sin());
            if c.norm() <= 2.0 {
                continue;
            }
            let v = mandelbrot_membership(c, &cfg);
            ensure!(v.evidence == Evidence::EscapedAt(1), "|c|>2 at {c} gave {v}");
        }
        Ok("-1 connected, 1 escapes at 3, |c|>2 escapes at 1".into())
    };
    report(1, "known membership facts", run());
}

#[test]
fn ac2_julia_pair() {
    let run = || -> Outcome {
        let cfg = IterationConfig::classification();
        let v1 = julia_connectivity(cv(-0.33, 0.57), &cfg);
        ensure!(v1.decision == Decision::Connected, "c1 gave {v1}");
        let expected = oracle_escape((0.0, 0.0), (0.44, 0.15), 1000);
        ensure!(expected == Some(7), "oracle gave {expected:?}");
        let v2 = julia_connectivity(cv(0.44, 0.15), &cfg);
        ensure!(
            v2.decision == Decision::Disconnected && v2.escape_index() == expected,
            "c2 gave {v2}, oracle {expected:?}"
        );
        Ok(format!("c1 {v1}; c2 {v2}"))
    };
    report(2, "connected and dust Julia examples", run());
}

#[test]
fn ac3_unit_disk() {
    let run = || -> Outcome {
        let spec = GridSpec::new(ComplexValue::ZERO, 4.0, 512, 512).unwrap();
        let start = Instant::now();
        let field = compute_escape_field_with_workers(
            &spec,
            FieldMode::Julia(ComplexValue::ZERO),
            &IterationConfig::render(),
            1,
        );
        let elapsed = start.elapsed();
        let mut exempt = 0usize;
        for row in 0..512 {
            for col in 0..512 {
                let r = pixel_to_complex(&spec, col, row).unwrap().norm();
                if (r - 1.0).abs() <= 1e-6 {
                    exempt += 1;
                    continue;
                }
                let bounded = field.cell(col, row) == Cell::Interior;
                ensure!(bounded == (r < 1.0), "pixel ({col},{row}) |z|={r} bounded={bounded}");
            }
        }
        let frac = exempt as f64 / (512.0 * 512.0);
        ensure!(frac < 0.005, "exempt band holds {:.4}% of pixels", frac * 100.0);
        ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
        Ok(format!("{exempt} exempt pixels, {elapsed:?} single worker"))
    };
    report(3, "unit-disk Julia set for c = 0", run());
}

fn sweep_check(preset: &SweepPreset, expected: &[(Decision, Option<Evidence>)]) -> Outcome {
    let cfg = IterationConfig::classification();
    let mut seen = Vec::new();
    for s in preset.phasors().unwrap() {
        let r = classify(s, &ScalingConfig::direct(), &cfg).unwrap();
        seen.push(r.verdict);
    }
    ensure!(seen.len() == expected.len(), "length {}", seen.len());
    for (i, (v, (d, ev))) in seen.iter().zip(expected).enumerate() {
        ensure!(v.decision == *d, "value {i}: {v}");
        if let Some(ev) = ev {
            ensure!(v.evidence == *ev, "value {i}: {v}, wanted {ev}");
        }
        if let Some(t) = v.escape_index() {
            ensure!(t <= 1000, "escape {t} beyond budget");
        }
    }
    Ok(seen.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))
}

#[test]
fn ac4_sweep_presets() {
    use Decision::*;
    let run = || -> Outcome {
        let t26 = oracle_escape((0.0, 0.0), (0.26, 0.0), 1000);
        let t70 = oracle_escape((0.0, 0.0), (0.0, 0.70), 1000);
        ensure!(t26 == Some(30) && t70 == Some(13), "oracle {t26:?} {t70:?}");
        let f3 = sweep_check(
            &SweepPreset::fig3(),
            &[
                (Connected, None),
                (Connected, None),
                (Connected, Some(Evidence::BoundedAtBudget)),
                (Disconnected, Some(Evidence::EscapedAt(30))),
            ],
        )?;
        let f4 = sweep_check(
            &SweepPreset::fig4(),
            &[
                (Connected, None),
                (Connected, None),
                (Connected, None),
                (Disconnected, Some(Evidence::EscapedAt(13))),
            ],
        )?;
        // and through the full sweep path
        let dir = tempfile::tempdir().unwrap();
        let opts = StudyOptions {
            julia_window: GridSpec::julia_default().with_size(24, 24).unwrap(),
            ..StudyOptions::default()
        };
        let out = run_sweep(&SweepPreset::fig3(), &opts, dir.path()).map_err(|e| e.to_string())?;
        let last = &out.entries.last().unwrap().record.verdict;
        ensure!(last.decision == Disconnected, "sweep run last row {last}");
        Ok(format!("fig3 [{f3}]; fig4 [{f4}]"))
    };
    report(4, "sweep presets", run());
}

#[test]
fn ac5_quadrant_study() {
    let run = || -> Outcome {
        let cfg = IterationConfig::classification();
        let mut lines = Vec::new();
        for (p, q) in [(0.22, 0.22), (-0.22, 0.22), (-0.22, -0.22), (0.22, -0.22)] {
            let r = classify(PowerPhasor::new(p, q).unwrap(), &ScalingConfig::direct(), &cfg)
                .unwrap();
            ensure!(
                r.verdict.decision == Decision::Connected
                    && r.verdict.evidence == Evidence::OracleInterior,
                "({p},{q}) gave {}",
                r.verdict
            );
            lines.push(format!("{} {}", r.quadrant, r.verdict.evidence));
        }
        Ok(lines.join(", "))
    };
    report(5, "four-quadrant study", run());
}

#[test]
fn ac6_symmetry_identities() {
    let run = || -> Outcome {
        let cfg = IterationConfig::render();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let params = 24;
        let samples = 10_000;
        let mut total = 0;
        for k in 0..params {
            let c = cv(rng.gen_range(-2.0..0.6), rng.gen_range(-1.2..1.2));
            for r in [
                check_negation_symmetry(c, samples, k, &cfg),
                check_conjugation_relation(c, samples, k, &cfg),
            ] {
                ensure!(r.mismatches == 0, "{r}");
                total += r.samples_tested;
            }
        }
        Ok(format!("{params} parameters, {total} sample comparisons, 0 mismatches"))
    };
    report(6, "negation and conjugation identities", run());
}

#[test]
fn ac7_oracle_soundness() {
    let run = || -> Outcome {
        let cfg = IterationConfig::classification();
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let start = Instant::now();
        let mut tested = 0;
        while tested < 10_000 {
            let c = cv(rng.gen_range(-1.3..0.4), rng.gen_range(-0.7..0.7));
            if !cardioid_or_bulb_interior(c) {
                continue;
            }
            tested += 1;
            let out = critical_orbit(c, &cfg);
            ensure!(!out.escaped(), "{c} escaped at {:?}", out.escape_index);
        }
        let elapsed = start.elapsed();
        ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
        Ok(format!("{tested} interior parameters bounded, {elapsed:?}"))
    };
    report(7, "interior oracle soundness", run());
}

fn golden_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden"))
}

#[test]
fn ac8_determinism() {
    let run = || -> Outcome {
        let cfg = IterationConfig::render();
        let spec = GridSpec::mandelbrot_default();
        let base = compute_escape_field_with_workers(&spec, FieldMode::Mandelbrot, &cfg, 1);
        for w in [2, 8] {
            let f = compute_escape_field_with_workers(&spec, FieldMode::Mandelbrot, &cfg, w);
            ensure!(f.counts() == base.counts(), "{w} workers differ from 1");
        }

        // golden files
        let small = GridSpec::mandelbrot_default().with_size(64, 48).unwrap();
        let img = |w| {
            encode_ppm(&colorize(
                &compute_escape_field_with_workers(&small, FieldMode::Mandelbrot, &cfg, w),
                &PaletteSpec::default(),
            ))
        };
        let golden_ppm = fs::read(golden_dir().join("mandelbrot_64x48.ppm")).unwrap();
        ensure!(img(1) == golden_ppm && img(3) == golden_ppm, "PPM differs from golden");

        let opts = StudyOptions {
            julia_window: GridSpec::julia_default().with_size(16, 16).unwrap(),
            workers: Some(4),
            ..StudyOptions::default()
        };
        let golden_csv = fs::read(golden_dir().join("fig3_report.csv")).unwrap();
        for _ in 0..2 {
            let dir = tempfile::tempdir().unwrap();
            let out = run_sweep(&SweepPreset::fig3(), &opts, dir.path()).map_err(|e| e.to_string())?;
            ensure!(fs::read(&out.report).unwrap() == golden_csv, "CSV differs from golden");
        }
        Ok("512x512 identical for 1/2/8 workers; golden PPM and CSV match".into())
    };
    report(8, "determinism", run());
}
