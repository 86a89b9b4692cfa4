use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A point, vertex or set argument outside the valid domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Inconsistent shapes, e.g. permutations of different degree.
    #[error("structure error: {0}")]
    Structure(String),
    /// A precondition about the mathematical input failed (blocks not preserved, map not an automorphism, ...).
    #[error("contract error: {0}")]
    Contract(String),
    /// Malformed graph or set input.
    #[error("input error: {0}")]
    Input(String),
    /// Presentation source that does not parse.
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    /// A configured size cap was exceeded.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    /// The operation is not supported for this input (too large, wrong kind).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Coset enumeration ran out of room.
    #[error("coset enumeration overflow after {live} live cosets")]
    Overflow { live: usize },
    /// Operation preconditions do not apply; not a failure of the input.
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    /// Two independent computations disagree. Always a bug signal.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = core::result::Result<T, Error>;
