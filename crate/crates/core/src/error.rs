use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroPolynomial")]
    ZeroPolynomial,
    #[error("ConstantPolynomial")]
    ConstantPolynomial,
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("SignatureMismatch")]
    SignatureMismatch,
    #[error("NoInvolution: signature `{0}` has no conjugation")]
    NoInvolution(String),
    #[error("ArityMismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("NonTriangularQuantifier: `{0}`")]
    NonTriangularQuantifier(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("not an ordered polynomial: {0}")]
    NotOrdered(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("solver unavailable: {0}")]
    SolverUnavailable(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
