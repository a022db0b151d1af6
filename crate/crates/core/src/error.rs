use thiserror::Error;

use crate::expr::ParseError;
use crate::labeling::LabelingDefect;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller supplied an argument outside the operation's domain.
    #[error("usage error: {0}")]
    Usage(String),

    /// The requested object would exceed a configured size cap.
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("invalid labeling: {0}")]
    Labeling(#[from] LabelingDefect),

    #[error(transparent)]
    Parse(#[from] ParseError),

    /// A theorem family was invoked outside its stated parameter class.
    #[error("{family}: {message}")]
    Parameter { family: String, message: String },

    #[error("malformed graph JSON: {0}")]
    Json(#[from] serde_json::Error),

    /// An outcome that contradicts an established result. Never swallowed.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
