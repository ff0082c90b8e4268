use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("mode {mode} is outside 1..={modes}")]
    ModeOutOfRange { mode: u32, modes: u32 },

    #[error("basis system {system} is not orthonormal at row {row}")]
    NotOrthonormal { system: char, row: usize },

    #[error("basis system {system} has shape {rows}x{cols}, expected {modes}x{modes}")]
    BadShape { system: char, rows: usize, cols: usize, modes: u32 },

    #[error("invalid cutoffs: {0}")]
    InvalidCutoffs(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
