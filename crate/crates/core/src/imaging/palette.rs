use crate::error::{Error, Result};

pub type Rgb = [u8; 3];

/// Interior color plus a 256-entry escape ramp.
///
/// Escape index `t` maps to `ramp[(8 t) mod 256]`. The interior color may not
/// appear anywhere in the ramp.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaletteSpec {
    interior: Rgb,
    ramp: Box<[Rgb; 256]>,
}

impl Default for PaletteSpec {
    fn default() -> Self {
        PaletteSpec {
            interior: [0, 0, 0],
            ramp: Box::new(hue_wheel()),
        }
    }
}

impl PaletteSpec {
    pub fn new(interior: Rgb, ramp: [Rgb; 256]) -> Result<Self> {
        if let Some(i) = ramp.iter().position(|&c| c == interior) {
            return Err(Error::InvalidPalette(format!(
                "ramp entry {i} equals the interior color {interior:?}"
            )));
        }
        Ok(PaletteSpec {
            interior,
            ramp: Box::new(ramp),
        })
    }

    pub fn interior(&self) -> Rgb {
        self.interior
    }

    pub fn ramp(&self) -> &[Rgb; 256] {
        &self.ramp
    }

    #[inline]
    pub fn escape_color(&self, index: u32) -> Rgb {
        self.ramp[((index as u64 * 8) % 256) as usize]
    }
}

/// Fully saturated hue wheel in integer arithmetic. One channel is always
/// 255, so black never occurs.
fn hue_wheel() -> [Rgb; 256] {
    let mut table = [[0u8; 3]; 256];
    for (h, entry) in table.iter_mut().enumerate() {
        let h6 = h * 6;
        let f = (h6 % 256) as u8;
        let g = 255 - f;
        *entry = match h6 / 256 {
            0 => [255, f, 0],
            1 => [g, 255, 0],
            2 => [0, 255, f],
            3 => [0, g, 255],
            4 => [f, 0, 255],
            _ => [255, 0, g],
        };
    }
    table
}
