use super::palette::{PaletteSpec, Rgb};
use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::field::{Cell, EscapeField, GridSpec};

pub const MARKER_YELLOW: Rgb = [255, 255, 0];

/// Row-major RGB image, 3 bytes per pixel, top row first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageBuffer {
    cols: usize,
    rows: usize,
    pixels: Vec<u8>,
}

impl ImageBuffer {
    pub fn new(cols: usize, rows: usize, pixels: Vec<u8>) -> Result<Self> {
        if cols == 0 || rows == 0 {
            return Err(Error::InvalidImage(format!("empty dimensions {cols}x{rows}")));
        }
        let expected = cols
            .checked_mul(rows)
            .and_then(|n| n.checked_mul(3))
            .ok_or_else(|| Error::InvalidImage("dimensions overflow".into()))?;
        if pixels.len() != expected {
            return Err(Error::InvalidImage(format!(
                "{cols}x{rows} image needs {expected} bytes, got {}",
                pixels.len()
            )));
        }
        Ok(ImageBuffer { cols, rows, pixels })
    }

    pub fn filled(cols: usize, rows: usize, color: Rgb) -> Result<Self> {
        let pixels = color.iter().copied().cycle().take(cols * rows * 3).collect();
        Self::new(cols, rows, pixels)
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixel(&self, col: usize, row: usize) -> Rgb {
        let i = (row * self.cols + col) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    pub fn set_pixel(&mut self, col: usize, row: usize, color: Rgb) {
        let i = (row * self.cols + col) * 3;
        self.pixels[i..i + 3].copy_from_slice(&color);
    }
}

pub fn colorize(field: &EscapeField, palette: &PaletteSpec) -> ImageBuffer {
    let pixels = field
        .cells()
        .flat_map(|cell| match cell {
            Cell::Interior => palette.interior(),
            Cell::Escaped(t) => palette.escape_color(t),
        })
        .collect();
    ImageBuffer {
        cols: field.spec().cols(),
        rows: field.spec().rows(),
        pixels,
    }
}

/// Yellow square marker at `point`. See [`overlay_marker_with`].
pub fn overlay_marker(img: &ImageBuffer, spec: &GridSpec, point: ComplexValue) -> Result<ImageBuffer> {
    overlay_marker_with(img, spec, point, MARKER_YELLOW)
}

/// Draws a filled square of side `max(3, cols / 100)` centered on the pixel
/// containing `point`, clipped at the image border.
pub fn overlay_marker_with(
    img: &ImageBuffer,
    spec: &GridSpec,
    point: ComplexValue,
    color: Rgb,
) -> Result<ImageBuffer> {
    if img.cols != spec.cols() || img.rows != spec.rows() {
        return Err(Error::InvalidImage(format!(
            "image is {}x{} but grid is {}x{}",
            img.cols,
            img.rows,
            spec.cols(),
            spec.rows()
        )));
    }
    let (col, row) = spec.pixel_containing(point).ok_or_else(|| {
        let (re_min, re_max, im_min, im_max) = spec.bounds();
        Error::MarkerOutOfWindow {
            re: point.re(),
            im: point.im(),
            re_min,
            re_max,
            im_min,
            im_max,
        }
    })?;
    let side = (img.cols / 100).max(3);
    let lo = |c: usize| c.saturating_sub(side / 2);
    let (c0, r0) = (lo(col), lo(row));
    let c1 = (col + side - side / 2).min(img.cols);
    let r1 = (row + side - side / 2).min(img.rows);
    let mut out = img.clone();
    for r in r0..r1 {
        for c in c0..c1 {
            out.set_pixel(c, r, color);
        }
    }
    Ok(out)
}
