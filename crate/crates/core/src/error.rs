use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate parameters: {clause} fails at m = {m}")]
    DegenerateParameters { clause: String, m: i64 },
    #[error("missing assignment for parameter `{0}`")]
    MissingAssignment(String),
    #[error("unexpected assignments in symbolic mode")]
    UnexpectedAssignment,
    #[error("division by zero")]
    DivisionByZero,
    #[error("rewrite budget of {0} rule applications exhausted")]
    BudgetExhausted(u64),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("Laurent polynomial is not symmetric under z -> 1/z")]
    NotSymmetric,
    #[error("q-difference operator left a nonzero remainder of degree {0}")]
    InternalDenominatorResidue(i32),
    #[error("square-root extension is not enabled for these parameters")]
    ExtensionDisabled,
    #[error("word mixes letters from different alphabets")]
    AlphabetMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
