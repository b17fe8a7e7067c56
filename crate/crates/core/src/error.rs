use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = HullError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HullError {
    #[error("input contains no points")]
    EmptyInput,

    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },

    #[error("point coincides with the anchor")]
    CoincidentWithAnchor,

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("index {index} out of range for buffer of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("chunk count must be at least 1")]
    ZeroChunks,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("flags would discard the anchor")]
    AnchorDiscarded,

    #[error("{n} points exceed the brute-force cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
}
