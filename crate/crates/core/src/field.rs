//! Prime fields `Z/p` with `p < 2^31`.
//!
//! Residues are stored as canonical `u32` values in `[0, p)`; a coefficient
//! written as `-1` in signed notation is stored as `p - 1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive).
pub const MODULUS_LIMIT: u64 = 1 << 31;

/// The coefficient field `Z/p`. Shared context for every chain operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: 2 }
    }
}

impl Field {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MODULUS_LIMIT || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field { p: p as u32 })
    }

    pub fn z2() -> Self {
        Field { p: 2 }
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
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
        let a = a % self.p;
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.p as i64) as u32)
    }

    /// Reduce a signed integer to its canonical residue.
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Signed representative in `(-p/2, p/2]`, used only for display.
    pub fn signed(&self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn element(&self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            field: *self,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}", self.p)
    }
}

/// A residue bundled with its field, for callers that want a
/// self-describing scalar rather than a raw `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: Field,
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }

    pub fn mul(&self, other: FieldElement) -> FieldElement {
        FieldElement {
            value: self.field.mul(self.value, other.value),
            field: self.field,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Inverse of a field element; zero is rejected.
pub fn field_inv(a: FieldElement) -> Result<FieldElement> {
    a.inv()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_inverse(p: u32, a: u32) -> Option<u32> {
        (1..p).find(|x| (a as u64 * *x as u64) % p as u64 == 1)
    }

    #[test]
    fn inverse_examples() {
        let f2 = Field::z2();
        assert_eq!(f2.inv(1).unwrap(), 1);
        let f11 = Field::new(11).unwrap();
        // frozen from brute_inverse
        assert_eq!(brute_inverse(11, 3), Some(4));
        assert_eq!(brute_inverse(11, 10), Some(10));
        assert_eq!(f11.inv(3).unwrap(), 4);
        assert_eq!(f11.inv(10).unwrap(), 10);
    }

    #[test]
    fn zero_has_no_inverse() {
        let f = Field::new(11).unwrap();
        assert!(matches!(f.inv(0), Err(Error::ZeroInverse)));
        assert!(field_inv(f.element(22)).is_err());
    }

    #[test]
    fn rejects_composite_and_large_moduli() {
        assert!(Field::new(1).is_err());
        assert!(Field::new(9).is_err());
        assert!(Field::new(1 << 31).is_err());
        assert!(Field::new(2_147_483_647).is_ok());
    }

    #[test]
    fn signed_representatives() {
        let f = Field::new(11).unwrap();
        assert_eq!(f.reduce(-1), 10);
        assert_eq!(f.signed(10), -1);
        assert_eq!(f.signed(5), 5);
    }

    #[test]
    fn inverse_matches_brute_force_small_primes() {
        for p in [2u32, 3, 5, 7, 11, 13, 101] {
            let f = Field::new(p as u64).unwrap();
            for a in 1..p {
                assert_eq!(Some(f.inv(a).unwrap()), brute_inverse(p, a));
            }
        }
    }

    proptest! {
        #[test]
        fn inverse_is_involution(a in 1u32..2_147_483_647) {
            let f = Field::new(2_147_483_647).unwrap();
            let b = f.inv(a).unwrap();
            prop_assert_eq!(f.mul(a, b), 1);
            prop_assert_eq!(f.inv(b).unwrap(), a);
        }
    }
}
