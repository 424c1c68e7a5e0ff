use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty cell set")]
    EmptyCellSet,

    #[error("boundary word requires disk region")]
    NotADisk,

    #[error("invalid tile {0:?}: {1}")]
    InvalidTile(String, String),

    #[error("invalid tile set: {0}")]
    InvalidTileSet(String),

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),

    #[error("invalid signature {0:?}: expected a string of 0s and 1s")]
    InvalidSignature(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("random region growth failed after {0} attempts")]
    GrowthFailed(u32),
}
