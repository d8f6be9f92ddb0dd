use thiserror::Error;

pub type Result<T> = std::result::Result<T, ZenoError>;

#[derive(Debug, Error)]
pub enum ZenoError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("qubit index error: {0}")]
    Index(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ZenoError {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        ZenoError::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    /// Process exit code used by the `zeno` binary.
    ///
    /// 2 covers anything the caller got wrong (usage, parse, parameter
    /// range), 3 is a capacity error, 4 an internal invariant violation.
    /// I/O failures while writing output exit with 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            ZenoError::Usage(_) | ZenoError::Parse { .. } | ZenoError::InvalidParameter(_) => 2,
            ZenoError::Capacity(_) => 3,
            ZenoError::Index(_) | ZenoError::Invariant(_) => 4,
            ZenoError::Io(_) => 1,
        }
    }
}
