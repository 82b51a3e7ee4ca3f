use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::image::ImageBuffer;
use crate::error::{Error, Result};

/// Binary PPM bytes: `P6\n<cols> <rows>\n255\n` followed by raw RGB.
pub fn encode_ppm(img: &ImageBuffer) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", img.cols(), img.rows()).into_bytes();
    out.extend_from_slice(img.pixels());
    out
}

pub fn write_ppm_to<W: Write>(img: &ImageBuffer, mut w: W) -> std::io::Result<()> {
    write!(w, "P6\n{} {}\n255\n", img.cols(), img.rows())?;
    w.write_all(img.pixels())?;
    w.flush()
}

pub fn write_ppm(img: &ImageBuffer, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_ppm_to(img, BufWriter::new(file)).map_err(|e| Error::io(path, e))
}

pub fn read_ppm(path: impl AsRef<Path>) -> Result<ImageBuffer> {
    let path = path.as_ref();
    let mut bytes = Vec::new();
    File::open(path)
        .and_then(|mut f| f.read_to_end(&mut bytes))
        .map_err(|e| Error::io(path, e))?;
    parse_ppm(&bytes)
}

/// Parses a P6 image with maxval 255. Accepts any whitespace between header
/// tokens and `#` comments, as other PPM writers may emit them.
pub fn parse_ppm(bytes: &[u8]) -> Result<ImageBuffer> {
    let mut pos = 0;
    let mut token = |bytes: &[u8]| -> Result<String> {
        loop {
            match bytes.get(pos) {
                Some(b'#') => {
                    while bytes.get(pos).is_some_and(|&b| b != b'\n') {
                        pos += 1;
                    }
                }
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(_) => break,
                None => return Err(Error::Ppm("truncated header".into())),
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(|b| !b.is_ascii_whitespace()) {
            pos += 1;
        }
        Ok(String::from_utf8_lossy(&bytes[start..pos]).into_owned())
    };
    let magic = token(bytes)?;
    if magic != "P6" {
        return Err(Error::Ppm(format!("expected magic P6, got {magic:?}")));
    }
    let mut number = |what: &str| -> Result<usize> {
        let t = token(bytes)?;
        t.parse()
            .map_err(|_| Error::Ppm(format!("bad {what}: {t:?}")))
    };
    let cols = number("width")?;
    let rows = number("height")?;
    let maxval = number("maxval")?;
    if maxval != 255 {
        return Err(Error::Ppm(format!("unsupported maxval {maxval}")));
    }
    // exactly one whitespace byte separates the header from the raster
    let start = pos + 1;
    let data = bytes
        .get(start..)
        .ok_or_else(|| Error::Ppm("missing raster".into()))?;
    ImageBuffer::new(cols, rows, data.to_vec()).map_err(|e| Error::Ppm(e.to_string()))
}
