//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("grid shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("unknown label id {0}")]
    UnknownLabel(u32),

    #[error("mask selects no background pixels; nothing to propagate from")]
    AllForeground,

    #[error("empty point cloud")]
    EmptyCloud,

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("rotation angle {0} rad too close to pi for principal-branch log")]
    AngleNearPi(f64),

    #[error("multi-scale schedule is empty")]
    EmptySchedule,

    #[error("{path}:{line}: {msg}")]
    Config {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("data error: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 3 for data/config/IO problems, 4 for
    /// numerical degeneracies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DegenerateGeometry(_) | Error::AngleNearPi(_) => 4,
            _ => 3,
        }
    }
}
