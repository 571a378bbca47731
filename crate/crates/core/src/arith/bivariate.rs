//! Integer polynomials in two Laurent variables `v` and `v'`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;

use super::intlaurent::IntLaurent;
use super::laurent::LaurentPoly;
use super::ArithError;

/// Sparse map `(power of v, power of v') -> coefficient`; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_laurent(p: &LaurentPoly, prime: bool) -> Result<Self, ArithError> {
        let mut terms = BTreeMap::new();
        for (k, c) in p.terms() {
            if !c.is_integer() {
                return Err(ArithError::NotIntegral(p.to_string()));
            }
            let key = if prime { (0, k) } else { (k, 0) };
            terms.insert(key, c.to_integer());
        }
        Ok(Self { terms })
    }

    /// Embeds an element of A as a polynomial in `v`.
    pub fn in_v(p: &LaurentPoly) -> Result<Self, ArithError> {
        Self::from_laurent(p, false)
    }

    /// The image of an element of A under `v -> v'`.
    pub fn in_v_prime(p: &LaurentPoly) -> Result<Self, ArithError> {
        Self::from_laurent(p, true)
    }

    /// `p(v) * q(v')` without building intermediate bivariate values.
    pub fn outer(p: &LaurentPoly, q_prime: &LaurentPoly) -> Result<Self, ArithError> {
        let mut out = Self::zero();
        out.add_outer(p, q_prime)?;
        Ok(out)
    }

    /// `self += p(v) * q(v')`.
    pub fn add_outer(&mut self, p: &LaurentPoly, q_prime: &LaurentPoly) -> Result<(), ArithError> {
        for (i, a) in p.terms() {
            if !a.is_integer() {
                return Err(ArithError::NotIntegral(p.to_string()));
            }
            for (j, b) in q_prime.terms() {
                if !b.is_integer() {
                    return Err(ArithError::NotIntegral(q_prime.to_string()));
                }
                self.add_term((i, j), a.to_integer() * b.to_integer());
            }
        }
        Ok(())
    }

    /// `self += p(v) * q(v')` for machine-integer inputs.
    pub fn add_outer_int(&mut self, p: &IntLaurent, q_prime: &IntLaurent) {
        for (i, a) in p.terms() {
            for (j, b) in q_prime.terms() {
                self.add_term((i, j), BigInt::from(a) * BigInt::from(b));
            }
        }
    }

    fn add_term(&mut self, key: (i32, i32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    /// The substitution `v' -> v`.
    pub fn diagonal(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), c)| (i + j, num_rational::BigRational::from_integer(c.clone()))),
        )
    }
}

impl<'a> Add<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &'a BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &'a BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| format!("{c}*v^{i}*v'^{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outer_product_and_diagonal() {
        let p = LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)]);
        let q = LaurentPoly::from_int_terms(&[(2, 3)]);
        let b = BivariatePoly::outer(&p, &q).unwrap();
        assert_eq!(b.terms().count(), 2);
        assert_eq!(b.diagonal(), &p * &q);
    }

    #[test]
    fn rejects_fractional_input() {
        let half = LaurentPoly::parse("1/2*v").unwrap();
        assert!(BivariatePoly::in_v(&half).is_err());
    }
}
