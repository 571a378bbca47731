//! Laurent polynomials with machine-integer coefficients.
//!
//! Used for everything that provably lies in Z[v, v^-1] (KL polynomials,
//! structure constants). Converts losslessly to and from [`LaurentPoly`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::laurent::LaurentPoly;
use super::ArithError;

/// Dense coefficients `coeffs[i]` of `v^(low + i)`; no zero at either end.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntLaurent {
    low: i32,
    coeffs: Vec<i64>,
}

impl IntLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: i64, k: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { low: k, coeffs: vec![c] }
    }

    pub fn from_terms(terms: &[(i32, i64)]) -> Self {
        let mut out = Self::zero();
        for &(k, c) in terms {
            out += &Self::monomial(c, k);
        }
        out
    }

    fn normalized(mut low: i32, mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        low += lead as i32;
        Self { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> i64 {
        let i = k - self.low;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            low: -self.max_exp().unwrap(),
            coeffs,
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::normalized(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// The part spanned by `v^k` with `k < 0`.
    pub fn negative_part(&self) -> Self {
        Self::from_terms(&self.terms().filter(|&(k, _)| k < 0).collect::<Vec<_>>())
    }

    /// Exact quotient over Z[v, v^-1].
    pub fn exact_divide(&self, b: &Self) -> Result<Self, ArithError> {
        if b.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_div = || ArithError::NotDivisible {
            dividend: self.to_string(),
            divisor: b.to_string(),
        };
        let n = self.coeffs.len();
        let m = b.coeffs.len();
        if n < m {
            return Err(not_div());
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![0i64; n - m + 1];
        let lead = *b.coeffs.last().unwrap();
        for i in (0..=n - m).rev() {
            let top = rem[i + m - 1];
            if top % lead != 0 {
                return Err(not_div());
            }
            let c = top / lead;
            q[i] = c;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                rem[i + j] -= c * bj;
            }
        }
        if rem.iter().any(|&x| x != 0) {
            return Err(not_div());
        }
        Ok(Self::normalized(self.low - b.low, q))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_int_terms(&self.terms().collect::<Vec<_>>())
    }

    pub fn from_laurent(p: &LaurentPoly) -> Result<Self, ArithError> {
        let mut terms = Vec::new();
        for (k, c) in p.terms() {
            if !c.is_integer() {
                return Err(ArithError::NotIntegral(p.to_string()));
            }
            let c = c
                .to_integer()
                .to_i64()
                .ok_or_else(|| ArithError::NotIntegral(p.to_string()))?;
            terms.push((k, c));
        }
        Ok(Self::from_terms(&terms))
    }

    pub fn to_bigrational_terms(&self) -> Vec<(i32, BigRational)> {
        self.terms()
            .map(|(k, c)| (k, BigRational::from_integer(BigInt::from(c))))
            .collect()
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        if self.is_zero() {
            return other.scale(sign);
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![0i64; (high - low + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + i] += sign * c;
        }
        Self::normalized(low, coeffs)
    }
}

impl fmt::Display for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl fmt::Debug for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn add(self, o: &IntLaurent) -> IntLaurent {
        self.combine(o, 1)
    }
}

impl<'a> Sub<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn sub(self, o: &IntLaurent) -> IntLaurent {
        self.combine(o, -1)
    }
}

impl<'a> Mul<&'a IntLaurent> for &'a IntLaurent {
    type Output = IntLaurent;
    fn mul(self, o: &IntLaurent) -> IntLaurent {
        if self.is_zero() || o.is_zero() {
            return IntLaurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntLaurent::normalized(self.low + o.low, coeffs)
    }
}

impl Add for IntLaurent {
    type Output = IntLaurent;
    fn add(self, o: IntLaurent) -> IntLaurent {
        &self + &o
    }
}

impl Sub for IntLaurent {
    type Output = IntLaurent;
    fn sub(self, o: IntLaurent) -> IntLaurent {
        &self - &o
    }
}

impl Mul for IntLaurent {
    type Output = IntLaurent;
    fn mul(self, o: IntLaurent) -> IntLaurent {
        &self * &o
    }
}

impl Neg for IntLaurent {
    type Output = IntLaurent;
    fn neg(self) -> IntLaurent {
        self.scale(-1)
    }
}

impl AddAssign<&IntLaurent> for IntLaurent {
    fn add_assign(&mut self, o: &IntLaurent) {
        *self = &*self + o;
    }
}

impl SubAssign<&IntLaurent> for IntLaurent {
    fn sub_assign(&mut self, o: &IntLaurent) {
        *self = &*self - o;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_matches_rational_laurent() {
        let a = IntLaurent::from_terms(&[(-1, 1), (1, 1)]);
        let b = IntLaurent::from_terms(&[(-2, 3), (0, -1), (2, 5)]);
        assert_eq!((&a * &b).to_laurent(), &a.to_laurent() * &b.to_laurent());
        assert_eq!((&a - &b).to_laurent(), &a.to_laurent() - &b.to_laurent());
        assert_eq!(b.bar().to_laurent(), b.to_laurent().bar());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = IntLaurent::from_terms(&[(-1, 1), (1, 1)]);
        let b = IntLaurent::from_terms(&[(-3, 2), (0, -1), (4, 7)]);
        assert_eq!((&a * &b).exact_divide(&a).unwrap(), b);
        assert!(b.exact_divide(&a).is_err());
        assert_eq!(
            IntLaurent::monomial(1, 1).exact_divide(&IntLaurent::monomial(1, 2)).unwrap(),
            IntLaurent::monomial(1, -1)
        );
    }

    #[test]
    fn conversions() {
        let p = LaurentPoly::parse("v^-1 + 2*v^3").unwrap();
        assert_eq!(IntLaurent::from_laurent(&p).unwrap().to_laurent(), p);
        assert!(IntLaurent::from_laurent(&LaurentPoly::parse("1/2*v").unwrap()).is_err());
        assert_eq!(
            IntLaurent::from_terms(&[(-2, 1), (0, 3), (1, 1)]).negative_part(),
            IntLaurent::monomial(1, -2)
        );
    }
}
