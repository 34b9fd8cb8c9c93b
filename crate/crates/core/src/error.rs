use thiserror::Error;

/// Errors raised by constructors, parsers and partial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "invalid window [{0},{1},{2}]: entries must sum to 0 and be pairwise incongruent mod 3"
    )]
    InvalidWindow(i64, i64, i64),

    #[error("generator index {0} out of range (expected 1, 2 or 3)")]
    BadGeneratorIndex(i64),

    #[error("({0},{1},{2}) is not a triangle center")]
    NotATriangleCenter(i64, i64, i64),

    #[error("element {0} is not a translation")]
    NotATranslation(String),

    #[error("parse error in {input:?} at position {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
