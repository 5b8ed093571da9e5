use thiserror::Error;

/// Errors raised by the library and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller asked for something the inputs do not support.
    #[error("usage error: {0}")]
    Usage(String),
    /// A text file could not be parsed.
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },
    /// A structure that should have been valid by construction is not.
    #[error("integrity error: {0}")]
    Integrity(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: msg.into(),
        }
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
