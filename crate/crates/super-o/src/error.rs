//! Crate-wide error type.
//!
//! Two broad classes matter to callers (and to the CLI's exit codes):
//! *usage errors* (malformed input, unknown names, out-of-range indices) and
//! *computation refusals* (the question is well-formed but outside the
//! certified scope of the library: non-integral weights where integrality is
//! required, truncation bands too small to certify an answer, explicit
//! out-of-scope statuses). Refusals are honest "won't answer" results, never
//! best-effort numbers.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range construction parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A weight was used with an algebra whose basis does not match.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    /// The operation requires an integral weight.
    #[error("not integral: {0}")]
    NotIntegral(String),

    /// Typicality is undefined for purely even algebras.
    #[error("typicality undefined: {0}")]
    TypicalityUndefined(String),

    /// The super Weyl vector rho is only defined for osp(2|2n) and gl(m|n).
    #[error("rho undefined: {0}")]
    RhoUndefined(String),

    /// Index out of range (omega index, simple-reflection index, ...).
    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Text that could not be parsed (weights, algebra names, CLI values).
    #[error("parse error: {0}")]
    Parse(String),

    /// A Weyl element was used with the wrong family or rank.
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    /// The operation is not supported for this input (documented scope).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A mathematical precondition was violated (e.g. x < y required).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The governing theorem does not cover this input; we refuse to guess.
    #[error("out of theorem scope: {0}")]
    OutOfTheoremScope(String),

    /// A configured resource cap would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// The truncation band is too small to certify the answer.
    #[error("certification band insufficient: {0}")]
    Band(String),

    /// Inputs contradict a theorem's guarantees (signals inconsistent data).
    #[error("inconsistent inputs: {0}")]
    Contradiction(String),

    /// A designated witness element failed its defining property.
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
}

impl Error {
    /// CLI exit code: 2 for usage errors, 1 for computation refusals.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_)
            | Error::BasisMismatch(_)
            | Error::OutOfRange(_)
            | Error::Parse(_)
            | Error::FamilyMismatch(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
