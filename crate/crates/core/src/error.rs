use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violates an operation's precondition on its shape or range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A bounded stream was asked for a symbol beyond its declared horizon.
    #[error("horizon exceeded: needed {needed} symbols, stream provides {available}")]
    Horizon { needed: usize, available: usize },

    /// An enumeration or search would exceed the configured cap.
    #[error("resource limit: {what} requires {required}, cap is {cap}")]
    Resource {
        what: String,
        required: String,
        cap: u64,
    },

    /// A configuration document failed validation; `path` names the offending field.
    #[error("validation error at `{path}`: {message}")]
    Validation { path: String, message: String },

    /// The structure does not support the requested operation.
    #[error("unsupported by structure `{structure}`: {message}")]
    Capability { structure: String, message: String },

    /// A witness constructor's stated precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn argument(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }
}
