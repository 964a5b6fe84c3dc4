use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coefficient or intermediate count left the range of the scalar type.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A closed formula produced a value its derivation rules out
    /// (non-integral division, negative multiplicity coefficient, uncovered region).
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow(_))
    }
}
