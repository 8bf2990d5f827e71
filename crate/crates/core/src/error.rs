//! Error type shared by the whole crate.

use std::path::PathBuf;

/// Errors reported by partition construction, character computations,
/// verification runs and the on-disk table cache.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not weakly decreasing at index {index}")]
    NotWeaklyDecreasing { index: usize },

    #[error("part at index {index} is not positive")]
    NonPositivePart { index: usize },

    #[error("invalid partition literal {literal:?}: {reason}")]
    InvalidLiteral { literal: String, reason: String },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u64, right: u64 },

    #[error("staircase index must be at least 1")]
    StaircaseIndexZero,

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },

    #[error("partition {partition} does not have distinct parts")]
    PartsNotDistinct { partition: String },

    #[error("size {size} exceeds the default gate {gate}; enable long-run mode to override")]
    GateExceeded { size: u64, gate: u64 },

    /// Digest mismatch or malformed content in a ctab-v1 cache file.
    /// Kept distinct from computation failures so callers can surface
    /// "corrupt cache" precisely.
    #[error("corrupt cache file {path}: {reason}")]
    CorruptCache { path: PathBuf, reason: String },

    #[error("cache i/o on {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An exact computation produced a value it must not produce
    /// (e.g. a non-integral inner product of genuine characters).
    /// Always a bug, never a data condition.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
