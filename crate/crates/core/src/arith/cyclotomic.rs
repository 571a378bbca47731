//! Cyclotomic fields Q(zeta_m) = Q[x] / Phi_m(x).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::primefield::PrimeFieldElement;
use super::unipoly::UniPoly;
use super::ArithError;

/// The m-th cyclotomic polynomial, integer coefficients from degree 0 up.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic polynomial index must be positive");
    let p = cyclotomic_unipoly(m);
    p.coeffs().iter().map(|c| c.to_integer()).collect()
}

fn cyclotomic_unipoly(m: u32) -> UniPoly {
    // x^m - 1 divided by Phi_d for every proper divisor d.
    let mut c = vec![BigRational::zero(); m as usize + 1];
    c[0] = -BigRational::one();
    c[m as usize] = BigRational::one();
    let mut p = UniPoly::new(c);
    for d in 1..m {
        if m % d == 0 {
            let (q, r) = p.div_rem(&cyclotomic_unipoly(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    p
}

/// Euler's totient (the degree of Phi_m).
pub fn totient(m: u32) -> usize {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count()
}

/// The field Q(zeta_m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    m: u32,
    modulus: UniPoly,
}

impl CyclotomicField {
    pub fn new(m: u32) -> Arc<Self> {
        Arc::new(Self {
            m,
            modulus: cyclotomic_unipoly(m),
        })
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn element(self: &Arc<Self>, p: &UniPoly) -> CyclotomicNumber {
        let r = if p.degree().map_or(true, |d| d < self.degree()) {
            p.clone()
        } else {
            p.div_rem(&self.modulus).1
        };
        CyclotomicNumber {
            field: Arc::clone(self),
            poly: r,
        }
    }

    pub fn from_rational(self: &Arc<Self>, c: BigRational) -> CyclotomicNumber {
        self.element(&UniPoly::new(vec![c]))
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        self.element(&UniPoly::zero())
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        self.element(&UniPoly::one())
    }

    /// The class of `x`, a primitive m-th root of unity.
    pub fn zeta(self: &Arc<Self>) -> CyclotomicNumber {
        self.element(&UniPoly::x())
    }
}

/// An element of Q(zeta_m), stored as its reduced representative of degree
/// below `phi(m)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    poly: UniPoly,
}

impl CyclotomicNumber {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Coordinates w.r.t. `1, zeta, ..., zeta^(phi(m)-1)`.
    pub fn coords(&self) -> Vec<BigRational> {
        (0..self.field.degree()).map(|i| self.poly.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn zero_like(&self) -> Self {
        self.field.zero()
    }

    pub fn one_like(&self) -> Self {
        self.field.one()
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (g, s, _) = self.poly.ext_gcd(self.field.modulus());
        debug_assert_eq!(g, UniPoly::one());
        Ok(self.field.element(&s))
    }

    /// Integer power, negative exponents through the inverse.
    pub fn pow(&self, k: i32) -> Result<Self, ArithError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.one_like();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Applies the ring map `Z[zeta_m] -> F_l` sending `zeta_m` to `root`.
    /// The caller is responsible for `root` being a root of `Phi_m` mod l.
    pub fn reduce_mod_prime(&self, root: PrimeFieldElement) -> Result<PrimeFieldElement, ArithError> {
        let l = root.modulus();
        let mut acc = root.zero_like();
        for c in self.poly.coeffs().iter().rev() {
            let den = PrimeFieldElement::new_unchecked(l, bigint_mod(c.denom(), l));
            if den.is_zero() {
                return Err(ArithError::DenominatorVanishes(c.to_string()));
            }
            let num = PrimeFieldElement::new_unchecked(l, bigint_mod(c.numer(), l));
            acc = acc * root + num * den.inv()?;
        }
        Ok(acc)
    }
}

pub(crate) fn bigint_mod(x: &BigInt, l: u64) -> i128 {
    let r = x % BigInt::from(l);
    i128::try_from(r).expect("residue fits")
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.poly == other.poly
    }
}

impl Eq for CyclotomicNumber {}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            poly: self.poly.add(&rhs.poly),
        }
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            poly: self.poly.sub(&rhs.poly),
        }
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
        debug_assert_eq!(self.field.m, rhs.field.m);
        self.field.element(&self.poly.mul(&rhs.poly))
    }
}

impl Add for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
        &self + &rhs
    }
}

impl Sub for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
        &self - &rhs
    }
}

impl Mul for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
        &self * &rhs
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: Arc::clone(&self.field),
            poly: self.poly.scale(&-BigRational::one()),
        }
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})[{}]", self.field.m, self)
    }
}
