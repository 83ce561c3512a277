//! Exact computations in the BGG category O of several families of
//! classical Lie superalgebras: the general linear algebras `gl(n)` and
//! `gl(m|n)`, the periplectic algebras `pe(n)`, and the orthosymplectic
//! algebras `osp(2|2n)`.
//!
//! All arithmetic is exact (arbitrary-precision rationals); no floating
//! point is used anywhere. The crate exposes:
//!
//! * root data, shifted dominance, integrality and typicality tests
//!   ([`algebra`]);
//! * Weyl groups of types A and C with dot actions, Bruhat order,
//!   parabolic machinery and orbit utilities ([`weyl`]);
//! * strong linkage / Bruhat-order comparisons of weights ([`linkage`]);
//! * socle computations for quotients of Verma modules, Ext¹ lookups, and
//!   related structure theory for `pe(n)` ([`socle`]);
//! * homological-dimension bookkeeping: global dimensions of blocks and
//!   parabolic categories, projective/injective dimension classification
//!   of structural modules, and Serre-type duality on labels ([`homdim`]);
//! * an exact finite-dimensional oracle that realizes truncations of the
//!   actual modules as matrices and answers semantic questions —
//!   singular vectors, socles, homomorphism dimensions, homology probes,
//!   simplicity of Kac modules ([`oracle`]);
//! * a batch CLI driver with JSON output ([`cli`]).

pub mod algebra;
pub mod cli;
pub mod error;
pub mod homdim;
pub mod linalg;
pub mod linkage;
pub mod oracle;
pub mod scalar;
pub mod socle;
pub mod weyl;

/// Exact scalar used throughout: arbitrary-precision rational numbers.
pub type Q = num_rational::BigRational;

/// Convenience: build a `Q` from an integer.
pub fn qi(v: i64) -> Q {
    Q::from_integer(num_bigint::BigInt::from(v))
}

/// Convenience: build a `Q` from a numerator/denominator pair.
pub fn qr(num: i64, den: i64) -> Q {
    Q::new(
        num_bigint::BigInt::from(num),
        num_bigint::BigInt::from(den),
    )
}
