use thiserror::Error;

/// Errors raised by group construction, arithmetic and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("element does not belong to the group: {0}")]
    ElementMismatch(String),

    #[error("element {0} has no finite order within the order cap")]
    NotTorsion(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("element not reached within word-length radius {cap}")]
    AboveCap { cap: u32 },

    #[error("group is infinite: {0}")]
    InfiniteGroup(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("duplicate representative {0}")]
    DuplicateRepresentative(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl GroupError {
    pub(crate) fn syntax(pos: usize, message: impl Into<String>) -> Self {
        GroupError::Syntax {
            pos,
            message: message.into(),
        }
    }
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
