//! Coloring escape fields, parameter markers and PPM output.

mod image;
mod palette;
mod ppm;

pub use image::{colorize, overlay_marker, overlay_marker_with, ImageBuffer, MARKER_YELLOW};
pub use palette::{PaletteSpec, Rgb};
pub use ppm::{encode_ppm, parse_ppm, read_ppm, write_ppm, write_ppm_to};
