//! Finite-group toolkit for real elements and prime graphs.
//!
//! * [`ffield`]: GF(p) and GF(2^k) arithmetic, Frobenius, trace and
//!   primitive prime divisors.
//! * [`groupkit`]: enumeration from generators, conjugacy classes, reality,
//!   structural subgroups, quotients and Frobenius predicates.
//! * [`constructions`]: permutation, matrix and affine groups, the two
//!   order-150 and order-199650 examples, and the twisted polynomial ring
//!   family `S ⋊ (P ⋊ Gal)`.
//! * [`realgraph`]: real spectra, the prime graph and real prime graph, and
//!   checkers for the structural claims built on them.

pub mod constructions;
pub mod error;
pub mod ffield;
pub mod groupkit;
pub mod numtheory;
pub mod realgraph;

pub use error::{Error, Result};
