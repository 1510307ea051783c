use thiserror::Error;

/// Errors produced by the voxtower engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric argument fell outside its valid range.
    #[error("{what} {value} out of range (valid: {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    /// A value violated a structural invariant.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    /// Two grids or towers do not share a frame.
    #[error("frame mismatch: {left_width}x{left_height} vs {right_width}x{right_height}")]
    FrameMismatch {
        left_width: usize,
        left_height: usize,
        right_width: usize,
        right_height: usize,
    },

    /// A ground plan has no occupied cells.
    #[error("plan has no occupied cells")]
    EmptyPlan,

    /// Malformed input text or bytes, located by line (1-based) and column when known.
    #[error("parse error at line {line}{}: {message}", column.map(|c| format!(", column {c}")).unwrap_or_default())]
    Parse {
        line: usize,
        column: Option<usize>,
        message: String,
    },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column: None,
            message: message.into(),
        }
    }

    pub(crate) fn parse_at(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column: Some(column),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
