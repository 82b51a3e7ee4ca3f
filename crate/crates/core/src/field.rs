//! Escape-time fields over pixel grids.
//!
//! Each pixel is evaluated independently from its own center coordinate, so
//! the output does not depend on how rows are split across workers.

use rayon::prelude::*;

use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::iteration::{critical_orbit, escape_time, IterationConfig};

/// A window of the complex plane sampled by a `cols` x `rows` pixel grid with
/// square pixels. Row 0 is the top of the window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    center: ComplexValue,
    width: f64,
    cols: usize,
    rows: usize,
}

impl GridSpec {
    pub fn new(center: ComplexValue, width: f64, cols: usize, rows: usize) -> Result<Self> {
        if !(width.is_finite() && width > 0.0) {
            return Err(Error::InvalidGrid(format!("width must be positive, got {width}")));
        }
        if cols == 0 || rows == 0 {
            return Err(Error::InvalidGrid(format!(
                "dimensions must be at least 1x1, got {cols}x{rows}"
            )));
        }
        Ok(GridSpec {
            center,
            width,
            cols,
            rows,
        })
    }

    /// Center -0.5, width 3, 512x512.
    pub fn mandelbrot_default() -> Self {
        GridSpec {
            center: ComplexValue::raw(-0.5, 0.0),
            width: 3.0,
            cols: 512,
            rows: 512,
        }
    }

    /// Center 0, width 4, 512x512.
    pub fn julia_default() -> Self {
        GridSpec {
            center: ComplexValue::ZERO,
            width: 4.0,
            cols: 512,
            rows: 512,
        }
    }

    /// Same window, different resolution.
    pub fn with_size(self, cols: usize, rows: usize) -> Result<Self> {
        Self::new(self.center, self.width, cols, rows)
    }

    pub fn center(&self) -> ComplexValue {
        self.center
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.width * self.rows as f64 / self.cols as f64
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn pixel_size(&self) -> f64 {
        self.width / self.cols as f64
    }

    /// `(re_min, re_max, im_min, im_max)`.
    pub fn bounds(&self) -> (f64, f64, f64, f64) {
        let hw = self.width / 2.0;
        let hh = self.height() / 2.0;
        (
            self.center.re - hw,
            self.center.re + hw,
            self.center.im - hh,
            self.center.im + hh,
        )
    }

    /// Pixel whose square contains `point`, or `None` outside the window.
    /// Points on the right or bottom edge belong to the last column or row.
    pub fn pixel_containing(&self, point: ComplexValue) -> Option<(usize, usize)> {
        let (re_min, re_max, im_min, im_max) = self.bounds();
        if !(re_min..=re_max).contains(&point.re) || !(im_min..=im_max).contains(&point.im) {
            return None;
        }
        let pw = self.pixel_size();
        let col = ((point.re - self.center.re) / pw + self.cols as f64 / 2.0).floor();
        let row = ((self.center.im - point.im) / pw + self.rows as f64 / 2.0).floor();
        let clamp = |v: f64, n: usize| (v.max(0.0) as usize).min(n - 1);
        Some((clamp(col, self.cols), clamp(row, self.rows)))
    }

    #[inline]
    fn center_of(&self, col: usize, row: usize) -> ComplexValue {
        let pw = self.width / self.cols as f64;
        ComplexValue::raw(
            self.center.re + (col as f64 + 0.5 - self.cols as f64 / 2.0) * pw,
            self.center.im + (self.rows as f64 / 2.0 - row as f64 - 0.5) * pw,
        )
    }
}

/// Complex coordinate at the center of pixel `(col, row)`.
pub fn pixel_to_complex(spec: &GridSpec, col: usize, row: usize) -> Result<ComplexValue> {
    if col >= spec.cols || row >= spec.rows {
        return Err(Error::PixelOutOfRange {
            col,
            row,
            cols: spec.cols,
            rows: spec.rows,
        });
    }
    Ok(spec.center_of(col, row))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldMode {
    /// `c` varies per pixel, orbit starts at 0.
    Mandelbrot,
    /// `c` fixed, orbit starts at the pixel.
    Julia(ComplexValue),
}

/// Per-pixel result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Interior,
    Escaped(u32),
}

/// Stored count for cells that never escaped.
pub const INTERIOR: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq)]
pub struct EscapeField {
    spec: GridSpec,
    mode: FieldMode,
    budget: u32,
    /// Row-major escape indices, top row first; [`INTERIOR`] for bounded.
    counts: Vec<u32>,
}

impl EscapeField {
    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn budget(&self) -> u32 {
        self.budget
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn cell(&self, col: usize, row: usize) -> Cell {
        match self.counts[row * self.spec.cols + col] {
            INTERIOR => Cell::Interior,
            t => Cell::Escaped(t),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.counts.iter().map(|&t| match t {
            INTERIOR => Cell::Interior,
            t => Cell::Escaped(t),
        })
    }

    pub fn interior_count(&self) -> usize {
        self.counts.iter().filter(|&&t| t == INTERIOR).count()
    }
}

fn fill_row(spec: &GridSpec, mode: FieldMode, cfg: &IterationConfig, row: usize, out: &mut [u32]) {
    for (col, slot) in out.iter_mut().enumerate() {
        let p = spec.center_of(col, row);
        let outcome = match mode {
            FieldMode::Mandelbrot => critical_orbit(p, cfg),
            FieldMode::Julia(c) => escape_time(p, c, cfg),
        };
        *slot = outcome.escape_index.unwrap_or(INTERIOR);
    }
}

/// Computes the field on the global rayon pool, one task per row.
pub fn compute_escape_field(spec: &GridSpec, mode: FieldMode, cfg: &IterationConfig) -> EscapeField {
    let mut counts = vec![0u32; spec.cols * spec.rows];
    counts
        .par_chunks_mut(spec.cols)
        .enumerate()
        .for_each(|(row, out)| fill_row(spec, mode, cfg, row, out));
    EscapeField {
        spec: *spec,
        mode,
        budget: cfg.max_iterations(),
        counts,
    }
}

/// Computes the field with exactly `workers` threads, each owning one
/// contiguous band of rows. `workers = 1` runs on the calling thread.
pub fn compute_escape_field_with_workers(
    spec: &GridSpec,
    mode: FieldMode,
    cfg: &IterationConfig,
    workers: usize,
) -> EscapeField {
    let workers = workers.clamp(1, spec.rows);
    let mut counts = vec![0u32; spec.cols * spec.rows];
    let band_rows = spec.rows.div_ceil(workers);
    std::thread::scope(|scope| {
        for (band, chunk) in counts.chunks_mut(band_rows * spec.cols).enumerate() {
            let mut work = move || {
                for (i, out) in chunk.chunks_mut(spec.cols).enumerate() {
                    fill_row(spec, mode, cfg, band * band_rows + i, out);
                }
            };
            if workers == 1 {
                work();
            } else {
                scope.spawn(work);
            }
        }
    });
    EscapeField {
        spec: *spec,
        mode,
        budget: cfg.max_iterations(),
        counts,
    }
}
