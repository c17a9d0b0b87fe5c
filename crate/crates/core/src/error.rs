use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A configured resource guard would be exceeded.
    #[error("size guard exceeded: {what} reaches {actual} (limit {limit})")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    /// An operation was called outside its precondition.
    #[error("contract violated: {0}")]
    Contract(String),
    /// Malformed textual input.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Guard {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
