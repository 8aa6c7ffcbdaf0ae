use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, pow_mod};

/// The prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::domain(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, value: i64) -> ZpElem<'_> {
        let v = value.rem_euclid(self.p as i64) as u32;
        ZpElem { value: v, field: self }
    }

    pub fn zero(&self) -> ZpElem<'_> {
        self.elem(0)
    }

    pub fn one(&self) -> ZpElem<'_> {
        self.elem(1)
    }
}

/// A residue modulo the field's prime, always kept in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZpElem<'f> {
    value: u32,
    field: &'f PrimeField,
}

impl fmt::Debug for ZpElem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.field.p)
    }
}

impl<'f> ZpElem<'f> {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &'f PrimeField {
        self.field
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.field.p, other.field.p,
            "mixed-field operation: GF({}) with GF({})",
            self.field.p, other.field.p
        );
    }

    fn wrap(&self, v: u64) -> Self {
        ZpElem {
            value: (v % self.field.p as u64) as u32,
            field: self.field,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        self.wrap(self.value as u64 + other.value as u64)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        self.wrap(self.value as u64 + (self.field.p - other.value) as u64)
    }

    pub fn neg(&self) -> Self {
        self.wrap((self.field.p - self.value) as u64)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        self.wrap(self.value as u64 * other.value as u64)
    }

    pub fn pow(&self, e: u64) -> Self {
        self.wrap(pow_mod(self.value as u64, e, self.field.p as u64))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::domain("inverse of zero in a prime field"));
        }
        Ok(self.pow(self.field.p as u64 - 2))
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}
