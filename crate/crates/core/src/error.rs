use std::path::PathBuf;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("non-finite complex value ({re}, {im})")]
    NonFinite { re: f64, im: f64 },

    #[error("invalid iteration config: {0}")]
    InvalidConfig(String),

    #[error("invalid scaling config: {0}")]
    InvalidScaling(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("pixel ({col}, {row}) outside {cols}x{rows} grid")]
    PixelOutOfRange {
        col: usize,
        row: usize,
        cols: usize,
        rows: usize,
    },

    #[error("power factor undefined at origin")]
    PowerFactorUndefined,

    #[error("invalid power value: {0}")]
    InvalidPower(String),

    #[error(
        "marker point ({re}, {im}) outside window re [{re_min}, {re_max}], im [{im_min}, {im_max}]"
    )]
    MarkerOutOfWindow {
        re: f64,
        im: f64,
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
    },

    #[error("invalid palette: {0}")]
    InvalidPalette(String),

    #[error("invalid image: {0}")]
    InvalidImage(String),

    #[error("malformed PPM: {0}")]
    Ppm(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
