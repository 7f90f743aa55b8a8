use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text could not be parsed. `pos` is a 0-based byte offset into the input.
    #[error("syntax error at column {}: {msg}", pos + 1)]
    Parse { pos: usize, msg: String },

    /// A term is not a member of the system an operation requires.
    #[error("not a member of {system}: {term}")]
    NotMember { system: String, term: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot compare values of level {left} and {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("invalid enumeration request: {0}")]
    InvalidSpec(String),

    /// Reached a branch the construction rules out.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn not_member(system: impl Into<String>, term: impl std::fmt::Display) -> Self {
        Error::NotMember {
            system: system.into(),
            term: term.to_string(),
        }
    }
}
