use thiserror::Error;

/// Errors raised by the arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("value {value} does not belong to {ring}")]
    ForeignElement { ring: String, value: String },

    #[error("{what} requires {constraint}")]
    Precondition {
        what: &'static str,
        constraint: &'static str,
    },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(what: &'static str, constraint: &'static str) -> Self {
        Error::Precondition { what, constraint }
    }

    /// Shifts the position of a parse error by `offset`, leaving other errors untouched.
    pub fn offset(self, offset: usize) -> Self {
        match self {
            Error::Parse { position, message } => Error::Parse {
                position: position + offset,
                message,
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
