//! Sweeps along the power axes and the four-quadrant study, writing images
//! and a `report.csv` into an output directory.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::field::{compute_escape_field, compute_escape_field_with_workers, FieldMode, GridSpec};
use crate::imaging::{colorize, overlay_marker, write_ppm, PaletteSpec};
use crate::iteration::IterationConfig;
use crate::power::{PowerPhasor, ScalingConfig};
use crate::report::{classify, csv_document, ClassificationRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// Vary `P`, hold `Q`.
    Real,
    /// Vary `Q`, hold `P`.
    Reactive,
}

impl FromStr for SweepAxis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "real" => Ok(SweepAxis::Real),
            "reactive" => Ok(SweepAxis::Reactive),
            other => Err(format!("unknown axis '{other}' (expected real or reactive)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPreset {
    pub axis: SweepAxis,
    pub values: Vec<f64>,
    pub fixed_other: f64,
    /// Values past the set's extent picked by this tool rather than given
    /// numerically; listed so reports can flag them.
    pub chosen_beyond_limit: Vec<f64>,
}

impl SweepPreset {
    pub fn new(axis: SweepAxis, values: Vec<f64>, fixed_other: f64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidPower("sweep needs at least one value".into()));
        }
        if let Some(v) = values.iter().chain([&fixed_other]).find(|v| !v.is_finite()) {
            return Err(Error::InvalidPower(format!("non-finite sweep value {v}")));
        }
        Ok(SweepPreset {
            axis,
            values,
            fixed_other,
            chosen_beyond_limit: Vec::new(),
        })
    }

    /// Real-power sweep `P = 0, C_x/2, C_x, 0.26` with `Q = 0`.
    pub fn fig3() -> Self {
        let dx = ScalingConfig::C_X;
        SweepPreset {
            axis: SweepAxis::Real,
            values: vec![0.0, dx / 2.0, dx, 0.26],
            fixed_other: 0.0,
            chosen_beyond_limit: vec![0.26],
        }
    }

    /// Reactive-power sweep `Q = 0, C_y/2, C_y, 0.70` with `P = 0`.
    pub fn fig4() -> Self {
        let dy = ScalingConfig::C_Y;
        SweepPreset {
            axis: SweepAxis::Reactive,
            values: vec![0.0, dy / 2.0, dy, 0.70],
            fixed_other: 0.0,
            chosen_beyond_limit: vec![0.70],
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "fig3" => Some(Self::fig3()),
            "fig4" => Some(Self::fig4()),
            _ => None,
        }
    }

    pub fn phasors(&self) -> Result<Vec<PowerPhasor>> {
        self.values
            .iter()
            .map(|&v| match self.axis {
                SweepAxis::Real => PowerPhasor::new(v, self.fixed_other),
                SweepAxis::Reactive => PowerPhasor::new(self.fixed_other, v),
            })
            .collect()
    }
}

/// Windows, budgets and palette shared by the studies.
#[derive(Debug, Clone)]
pub struct StudyOptions {
    pub julia_window: GridSpec,
    pub mandelbrot_window: GridSpec,
    pub render: IterationConfig,
    pub classify: IterationConfig,
    pub scaling: ScalingConfig,
    pub palette: PaletteSpec,
    /// Worker threads for rendering; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for StudyOptions {
    fn default() -> Self {
        StudyOptions {
            julia_window: GridSpec::julia_default(),
            mandelbrot_window: GridSpec::mandelbrot_default(),
            render: IterationConfig::render(),
            classify: IterationConfig::classification(),
            scaling: ScalingConfig::default(),
            palette: PaletteSpec::default(),
            workers: None,
        }
    }
}

impl StudyOptions {
    pub fn field(&self, spec: &GridSpec, mode: FieldMode) -> crate::field::EscapeField {
        match self.workers {
            Some(w) => compute_escape_field_with_workers(spec, mode, &self.render, w),
            None => compute_escape_field(spec, mode, &self.render),
        }
    }
}

#[derive(Debug, Clone)]
pub struct StudyEntry {
    pub label: String,
    pub record: ClassificationRecord,
    pub images: Vec<PathBuf>,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct StudyOutcome {
    pub entries: Vec<StudyEntry>,
    pub report: PathBuf,
    pub warnings: Vec<String>,
}

impl StudyOutcome {
    pub fn records(&self) -> Vec<ClassificationRecord> {
        self.entries.iter().map(|e| e.record.clone()).collect()
    }
}

fn prepare_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn write_report(dir: &Path, records: &[ClassificationRecord]) -> Result<PathBuf> {
    let path = dir.join("report.csv");
    fs::write(&path, csv_document(records)).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

fn render_julia(opts: &StudyOptions, c: ComplexValue, path: &Path) -> Result<()> {
    let field = opts.field(&opts.julia_window, FieldMode::Julia(c));
    write_ppm(&colorize(&field, &opts.palette), path)
}

/// Renders one Julia image per sweep value and writes `report.csv`.
pub fn run_sweep(preset: &SweepPreset, opts: &StudyOptions, out_dir: &Path) -> Result<StudyOutcome> {
    prepare_dir(out_dir)?;
    let axis = match preset.axis {
        SweepAxis::Real => "p",
        SweepAxis::Reactive => "q",
    };
    let mut entries = Vec::with_capacity(preset.values.len());
    for (i, (s, &v)) in preset.phasors()?.into_iter().zip(&preset.values).enumerate() {
        let record = classify(s, &opts.scaling, &opts.classify)?;
        let image = out_dir.join(format!("julia_{i:02}.ppm"));
        render_julia(opts, record.parameter, &image)?;
        let note = preset
            .chosen_beyond_limit
            .contains(&v)
            .then(|| format!("{axis} = {v} is a beyond-limit value chosen by this tool"));
        entries.push(StudyEntry {
            label: format!("{axis}={}", crate::report::fmt6(v)),
            record,
            images: vec![image],
            note,
        });
    }
    let records: Vec<_> = entries.iter().map(|e| e.record.clone()).collect();
    let report = write_report(out_dir, &records)?;
    Ok(StudyOutcome {
        entries,
        report,
        warnings: Vec::new(),
    })
}

/// The four sign combinations `(+-m, +-m)` in quadrant order I, II, III, IV.
pub fn quadrant_phasors(magnitude: f64) -> Result<Vec<(&'static str, PowerPhasor)>> {
    if !(magnitude.is_finite() && magnitude >= 0.0) {
        return Err(Error::InvalidPower(format!(
            "magnitude must be finite and non-negative, got {magnitude}"
        )));
    }
    let m = magnitude;
    Ok(vec![
        ("I", PowerPhasor::new(m, m)?),
        ("II", PowerPhasor::new(-m, m)?),
        ("III", PowerPhasor::new(-m, -m)?),
        ("IV", PowerPhasor::new(m, -m)?),
    ])
}

/// For each quadrant: a Mandelbrot image marked at the parameter, a Julia
/// image, and a report row. Magnitude 0 collapses to one origin record.
pub fn run_quadrants(magnitude: f64, opts: &StudyOptions, out_dir: &Path) -> Result<StudyOutcome> {
    let mut studies = quadrant_phasors(magnitude)?;
    let mut warnings = Vec::new();
    if magnitude == 0.0 {
        warnings.push("magnitude 0: all four quadrants collapse to the origin".to_string());
        studies = vec![("origin", PowerPhasor::new(0.0, 0.0)?)];
    }
    prepare_dir(out_dir)?;

    let mandelbrot = colorize(
        &opts.field(&opts.mandelbrot_window, FieldMode::Mandelbrot),
        &opts.palette,
    );
    let mut entries = Vec::with_capacity(studies.len());
    for (label, s) in studies {
        let record = classify(s, &opts.scaling, &opts.classify)?;
        let marked = overlay_marker(&mandelbrot, &opts.mandelbrot_window, record.parameter)?;
        let m_path = out_dir.join(format!("mandelbrot_{label}.ppm"));
        write_ppm(&marked, &m_path)?;
        let j_path = out_dir.join(format!("julia_{label}.ppm"));
        render_julia(opts, record.parameter, &j_path)?;
        entries.push(StudyEntry {
            label: label.to_string(),
            record,
            images: vec![m_path, j_path],
            note: None,
        });
    }
    let records: Vec<_> = entries.iter().map(|e| e.record.clone()).collect();
    let report = write_report(out_dir, &records)?;
    Ok(StudyOutcome {
        entries,
        report,
        warnings,
    })
}
