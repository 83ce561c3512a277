//! Independent verification engine: concrete matrix realizations, exact
//! truncated highest-weight modules, and the linear-algebra queries
//! (singular vectors, socles, homology probes) used to certify the
//! closed-form answers produced elsewhere in this crate.
//!
//! Everything here works with explicit matrices over arbitrary-precision
//! rationals. Structure constants are computed from the matrix realizations,
//! never transcribed by hand, and every constructed module passes a hard
//! relation gate (all defining super-bracket relations checked on every
//! retained weight space).

pub mod module;
pub mod queries;
pub mod realization;
pub mod suites;
