//! The prime fields F_l.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ArithError;

/// Deterministic trial-division primality test (moduli here are small).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue modulo the prime `modulus`, always reduced into `[0, modulus)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    modulus: u64,
    residue: u64,
}

impl PrimeFieldElement {
    pub fn new(modulus: u64, value: i128) -> Result<Self, ArithError> {
        if !is_prime(modulus) {
            return Err(ArithError::NotPrime(modulus));
        }
        Ok(Self::new_unchecked(modulus, value))
    }

    pub(crate) fn new_unchecked(modulus: u64, value: i128) -> Self {
        let m = modulus as i128;
        Self {
            modulus,
            residue: value.rem_euclid(m) as u64,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn zero_like(&self) -> Self {
        Self::new_unchecked(self.modulus, 0)
    }

    pub fn one_like(&self) -> Self {
        Self::new_unchecked(self.modulus, 1)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.pow(self.modulus - 2))
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut x = *self;
        let mut k = 1;
        while x.residue != 1 {
            x = x * *self;
            k += 1;
        }
        Some(k)
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Self::new_unchecked(self.modulus, self.residue as i128 + rhs.residue as i128)
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Self::new_unchecked(self.modulus, self.residue as i128 - rhs.residue as i128)
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Self::new_unchecked(self.modulus, self.residue as i128 * rhs.residue as i128)
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new_unchecked(self.modulus, -(self.residue as i128))
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_order() {
        let two = PrimeFieldElement::new(5, 2).unwrap();
        assert_eq!(two.inv().unwrap().residue(), 3);
        assert_eq!(two.multiplicative_order(), Some(4));
        let three = PrimeFieldElement::new(7, 3).unwrap();
        assert_eq!((three * three).multiplicative_order(), Some(3));
        assert!(PrimeFieldElement::new(9, 1).is_err());
        assert_eq!(PrimeFieldElement::new(5, -1).unwrap().residue(), 4);
    }
}
