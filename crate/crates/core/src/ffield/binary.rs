//! GF(2^k) in a polynomial basis.
//!
//! Elements are bit vectors of length `k`; bit `i` is the coefficient of
//! `x^i`. The modulus is the smallest irreducible polynomial of degree `k`
//! when its coefficient bit string is read as an integer.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::numtheory::prime_factors;

const MAX_DEGREE: u32 = 64;
/// Fields up to this degree carry a full multiplication table.
const TABLE_DEGREE: u32 = 8;

/// Carry-less product of two polynomials of degree < 64.
fn clmul(a: u128, b: u128) -> u128 {
    let mut acc = 0u128;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

fn degree(p: u128) -> i32 {
    127 - p.leading_zeros() as i32
}

/// Remainder of `a` modulo `m` over GF(2).
fn poly_rem(mut a: u128, m: u128) -> u128 {
    let dm = degree(m);
    while a != 0 && degree(a) >= dm {
        a ^= m << (degree(a) - dm);
    }
    a
}

fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // Operands have degree < deg(m) <= 64, so the product fits in 128 bits.
    poly_rem(clmul(a, b), m)
}

/// Rabin's irreducibility test for a polynomial of degree `k`.
pub(crate) fn is_irreducible(m: u128) -> bool {
    let k = degree(m);
    if k < 1 {
        return false;
    }
    let k = k as u32;
    let x = 0b10u128;
    // x^(2^i) mod m for i = 0..=k
    let mut powers = Vec::with_capacity(k as usize + 1);
    let mut cur = poly_rem(x, m);
    powers.push(cur);
    for _ in 0..k {
        cur = mulmod(cur, cur, m);
        powers.push(cur);
    }
    if powers[k as usize] != poly_rem(x, m) {
        return false;
    }
    for r in prime_factors(k as u64) {
        let e = (k as u64 / r) as usize;
        let g = poly_gcd(m, powers[e] ^ poly_rem(x, m));
        if g != 1 {
            return false;
        }
    }
    true
}

/// A binary extension field GF(2^k).
pub struct Gf2kField {
    k: u32,
    modulus: u128,
    table: Option<Vec<u8>>,
}

impl fmt::Debug for Gf2kField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:#b}", self.k, self.modulus)
    }
}

impl PartialEq for Gf2kField {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Gf2kField {}

impl Gf2kField {
    /// Builds GF(2^k) with the lexicographically smallest irreducible modulus.
    pub fn new(k: u32) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain(format!("extension degree {k} must be at least 2")));
        }
        if k > MAX_DEGREE {
            return Err(Error::Resource {
                what: "GF(2^k) extension degree".into(),
                reached: k as usize,
                cap: MAX_DEGREE as usize,
            });
        }
        let lo = 1u128 << k;
        let modulus = (lo..lo << 1)
            .find(|&m| m & 1 == 1 && is_irreducible(m))
            .expect("an irreducible polynomial exists in every degree");
        let mut field = Gf2kField {
            k,
            modulus,
            table: None,
        };
        if k <= TABLE_DEGREE {
            let size = 1usize << k;
            let mut table = vec![0u8; size * size];
            for a in 0..size {
                for b in 0..size {
                    table[a * size + b] = mulmod(a as u128, b as u128, modulus) as u8;
                }
            }
            field.table = Some(table);
        }
        Ok(field)
    }

    /// Process-wide instance for degree `k`, built once.
    pub fn shared(k: u32) -> Result<&'static Gf2kField> {
        static CACHE: OnceLock<Mutex<HashMap<u32, &'static Gf2kField>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("field cache poisoned");
        if let Some(f) = guard.get(&k) {
            return Ok(f);
        }
        let field: &'static Gf2kField = Box::leak(Box::new(Gf2kField::new(k)?));
        guard.insert(k, field);
        Ok(field)
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Modulus as a `(k+1)`-bit integer, bit `i` = coefficient of `x^i`.
    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    pub fn size(&self) -> u64 {
        if self.k >= 64 {
            u64::MAX
        } else {
            1u64 << self.k
        }
    }

    fn mask(&self) -> u64 {
        if self.k >= 64 {
            u64::MAX
        } else {
            (1u64 << self.k) - 1
        }
    }

    pub fn elem(&self, bits: u64) -> Gf2kElem<'_> {
        assert!(bits & !self.mask() == 0, "{bits:#x} is not an element of {self:?}");
        Gf2kElem { bits, field: self }
    }

    pub fn zero(&self) -> Gf2kElem<'_> {
        self.elem(0)
    }

    pub fn one(&self) -> Gf2kElem<'_> {
        self.elem(1)
    }

    /// All elements in bit order; only sensible for small `k`.
    pub fn elements(&self) -> impl Iterator<Item = Gf2kElem<'_>> + '_ {
        assert!(self.k <= 20, "refusing to enumerate GF(2^{})", self.k);
        (0..self.size()).map(move |b| self.elem(b))
    }

    // Raw-bit arithmetic, shared with the twisted ring.

    #[inline]
    pub(crate) fn mul_bits(&self, a: u64, b: u64) -> u64 {
        match &self.table {
            Some(t) => t[((a as usize) << self.k) | b as usize] as u64,
            None => mulmod(a as u128, b as u128, self.modulus) as u64,
        }
    }

    pub(crate) fn pow_bits(&self, a: u64, mut e: u128) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_bits(acc, base);
            }
            base = self.mul_bits(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub(crate) fn frobenius_bits(&self, a: u64, u: u32) -> u64 {
        let mut x = a;
        for _ in 0..(u % self.k) {
            x = self.mul_bits(x, x);
        }
        x
    }

    pub(crate) fn inv_bits(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        // a^(2^k - 2)
        Some(self.pow_bits(a, (1u128 << self.k) - 2))
    }
}

/// An element of a [`Gf2kField`].
#[derive(Clone, Copy)]
pub struct Gf2kElem<'f> {
    bits: u64,
    field: &'f Gf2kField,
}

impl fmt::Debug for Gf2kElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.bits)
    }
}

impl PartialEq for Gf2kElem<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.check(other);
        self.bits == other.bits
    }
}

impl Eq for Gf2kElem<'_> {}

impl std::hash::Hash for Gf2kElem<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl<'f> Gf2kElem<'f> {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn field(&self) -> &'f Gf2kField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn check(&self, other: &Self) {
        assert!(
            std::ptr::eq(self.field, other.field) || self.field == other.field,
            "mixed-field operation: {:?} with {:?}",
            self.field,
            other.field
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Gf2kElem {
            bits: self.bits ^ other.bits,
            field: self.field,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        Gf2kElem {
            bits: self.field.mul_bits(self.bits, other.bits),
            field: self.field,
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        Gf2kElem {
            bits: self.field.pow_bits(self.bits, e as u128),
            field: self.field,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let bits = self
            .field
            .inv_bits(self.bits)
            .ok_or_else(|| Error::domain("inverse of zero in GF(2^k)"))?;
        Ok(Gf2kElem {
            bits,
            field: self.field,
        })
    }

    /// `a^(2^u)`; `u` is taken modulo the extension degree.
    pub fn frobenius(&self, u: u32) -> Self {
        Gf2kElem {
            bits: self.field.frobenius_bits(self.bits, u),
            field: self.field,
        }
    }

    /// Absolute trace to GF(2), returned as the field element 0 or 1.
    pub fn trace(&self) -> Self {
        let mut acc = 0u64;
        let mut x = self.bits;
        for _ in 0..self.field.k {
            acc ^= x;
            x = self.field.mul_bits(x, x);
        }
        debug_assert!(acc <= 1, "trace left the prime field");
        Gf2kElem {
            bits: acc,
            field: self.field,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Irreducibility by trial division against every polynomial of degree
    /// 1..=deg/2, independent of the Rabin test.
    fn irreducible_by_sieve(m: u128) -> bool {
        let d = degree(m);
        for deg in 1..=d / 2 {
            for f in (1u128 << deg)..(1u128 << (deg + 1)) {
                if poly_rem(m, f) == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn smallest_by_sieve(k: u32) -> u128 {
        ((1u128 << k)..(1u128 << (k + 1)))
            .find(|&m| irreducible_by_sieve(m))
            .unwrap()
    }

    #[test]
    fn rabin_agrees_with_sieve() {
        for m in 2u128..(1 << 11) {
            assert_eq!(is_irreducible(m), irreducible_by_sieve(m), "m = {m:#b}");
        }
    }

    #[test]
    fn golden_moduli() {
        // Values produced by the sieve oracle above.
        assert_eq!(smallest_by_sieve(2), 0b111);
        assert_eq!(smallest_by_sieve(4), 0b10011);
        assert_eq!(smallest_by_sieve(8), 0x11b);
        assert_eq!(Gf2kField::new(2).unwrap().modulus(), 0b111);
        assert_eq!(Gf2kField::new(4).unwrap().modulus(), 0b10011);
        assert_eq!(Gf2kField::new(8).unwrap().modulus(), 0x11b);
        for k in [3, 5, 6, 7, 9, 10] {
            assert_eq!(Gf2kField::new(k).unwrap().modulus(), smallest_by_sieve(k));
        }
    }

    #[test]
    fn degree_limits() {
        assert!(matches!(Gf2kField::new(1), Err(Error::Domain(_))));
        assert!(matches!(Gf2kField::new(65), Err(Error::Resource { .. })));
        let f = Gf2kField::new(64).unwrap();
        assert_eq!(degree(f.modulus()), 64);
    }

    #[test]
    fn gf4_generator_relation() {
        let f = Gf2kField::new(2).unwrap();
        let g = f.elem(0b10);
        assert_eq!(g.mul(&g), g.add(&f.one()));
    }

    #[test]
    fn inverse_and_zero() {
        for k in [2, 4, 8, 13, 64] {
            let f = Gf2kField::new(k).unwrap();
            let a = f.elem(0b1011 & ((1u64 << k.min(63)) - 1).max(1));
            if !a.is_zero() {
                assert_eq!(a.mul(&a.inv().unwrap()), f.one());
            }
            assert!(f.zero().inv().is_err());
        }
    }

    #[test]
    fn trace_counts_for_k4() {
        let f = Gf2kField::new(4).unwrap();
        let zeros = f.elements().filter(|a| a.trace().is_zero()).count();
        assert_eq!(zeros, 8);
        assert!(f.one().trace().is_zero());
        assert!(f.zero().trace().is_zero());
    }

    #[test]
    fn frobenius_composes_exhaustively_k4() {
        let f = Gf2kField::new(4).unwrap();
        for a in f.elements() {
            assert_eq!(a.frobenius(0), a);
            assert_eq!(a.frobenius(4), a);
            for u in 0..4 {
                for v in 0..4 {
                    assert_eq!(a.frobenius(u).frobenius(v), a.frobenius((u + v) % 4));
                }
            }
            assert_eq!(a.frobenius(1).trace(), a.trace());
        }
    }

    #[test]
    #[should_panic(expected = "mixed-field")]
    fn mixed_fields_panic() {
        let f2 = Gf2kField::new(2).unwrap();
        let f4 = Gf2kField::new(4).unwrap();
        let _ = f2.one().mul(&f4.one());
    }
}
