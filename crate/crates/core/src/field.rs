//! Arithmetic in the prime field F_p.
//!
//! Residues are always kept canonical (`0 <= value < p`), so equality of
//! elements is plain integer equality. Moduli are limited to `p < 2^31`,
//! which keeps every product inside a `u64`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

const MODULUS_BOUND: u64 = 1 << 31;

/// The prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

/// Deterministic trial division up to `sqrt(n)`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MODULUS_BOUND {
            return Err(Error::OutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn zero(&self) -> FpElement {
        FpElement { value: 0, field: *self }
    }

    pub fn one(&self) -> FpElement {
        // p >= 2, so 1 is already canonical.
        FpElement { value: 1, field: *self }
    }

    /// Element with residue `v mod p`.
    pub fn element(&self, v: u64) -> FpElement {
        FpElement { value: self.reduce(v), field: *self }
    }

    /// Element with residue `v mod p` for signed `v`, e.g. `-1 -> p - 1`.
    pub fn element_signed(&self, v: i64) -> FpElement {
        FpElement { value: self.reduce_signed(v), field: *self }
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    #[inline]
    pub fn reduce_signed(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    // Raw residue arithmetic. Callers guarantee canonical inputs; these are
    // the hot paths used by elimination and sequence evaluation.

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.p == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut old_r, mut r) = (a as i64, self.p as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(old_s.rem_euclid(self.p as i64) as u32)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A canonical residue tagged with its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    value: u32,
    field: PrimeField,
}

impl FpElement {
    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FpElement) -> Result<PrimeField> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.p, right: other.field.p });
        }
        Ok(self.field)
    }

    pub fn try_add(self, rhs: FpElement) -> Result<FpElement> {
        let f = self.same_field(&rhs)?;
        Ok(FpElement { value: f.add(self.value, rhs.value), field: f })
    }

    pub fn try_sub(self, rhs: FpElement) -> Result<FpElement> {
        let f = self.same_field(&rhs)?;
        Ok(FpElement { value: f.sub(self.value, rhs.value), field: f })
    }

    pub fn try_mul(self, rhs: FpElement) -> Result<FpElement> {
        let f = self.same_field(&rhs)?;
        Ok(FpElement { value: f.mul(self.value, rhs.value), field: f })
    }

    pub fn inv(self) -> Result<FpElement> {
        Ok(FpElement { value: self.field.inv(self.value)?, field: self.field })
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// Operator forms panic on mismatched fields; use the `try_*` methods when the
// operands may come from different fields.

impl Add for FpElement {
    type Output = FpElement;
    fn add(self, rhs: FpElement) -> FpElement {
        self.try_add(rhs).expect("field mismatch in FpElement addition")
    }
}

impl Sub for FpElement {
    type Output = FpElement;
    fn sub(self, rhs: FpElement) -> FpElement {
        self.try_sub(rhs).expect("field mismatch in FpElement subtraction")
    }
}

impl Mul for FpElement {
    type Output = FpElement;
    fn mul(self, rhs: FpElement) -> FpElement {
        self.try_mul(rhs).expect("field mismatch in FpElement multiplication")
    }
}

impl Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        FpElement { value: self.field.neg(self.value), field: self.field }
    }
}
