//! Exact arithmetic in GF(p) and GF(2^k).

mod binary;
mod prime;
mod zsigmondy;

pub use binary::{Gf2kElem, Gf2kField};
pub use prime::{PrimeField, ZpElem};
pub use zsigmondy::primitive_prime_divisor;

use crate::error::Result;

/// GF(2^k) with the lexicographically smallest irreducible modulus.
pub fn make_gf2k(k: u32) -> Result<Gf2kField> {
    Gf2kField::new(k)
}
