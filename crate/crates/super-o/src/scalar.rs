//! Scalar abstraction for the linear-algebra layer.

use num_traits::{Num, Signed};
use std::fmt::Debug;

/// Field-like scalar for dense row reduction.
///
/// The bound is generic so the layer is reusable, but the rest of the crate
/// instantiates it exclusively with [`crate::Q`] (arbitrary-precision
/// rationals): every contract in this library — dominance, typicality,
/// kernel dimensions, socle multiplicities — is decided by exact comparison
/// with zero, which floating-point arithmetic cannot honor. Division must be
/// a true field inverse for nonzero elements.
pub trait Scalar: Num + Signed + Clone + Debug {}

impl<T: Num + Signed + Clone + Debug> Scalar for T {}
