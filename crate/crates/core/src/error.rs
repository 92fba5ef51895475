use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simple type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("invalid real form: {0}")]
    InvalidForm(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("candidate list: {0}")]
    Candidates(String),

    #[error("candidate entry {index}: {msg}")]
    CandidateEntry { index: usize, msg: String },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Internal-consistency failures map to exit code 2, everything else is a user error.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
