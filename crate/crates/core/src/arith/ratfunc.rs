//! Elements of K = Q(v) in a canonical reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::ArithError;

/// A quotient `num / den` of Laurent polynomials.
///
/// Canonical form: `den` is an ordinary polynomial with nonzero constant
/// term, coprime integer coefficients and positive leading coefficient, and
/// `gcd(num, den) = 1`. Powers of `v` are units and always live in `num`.
/// Two values are equal iff their canonical forms agree structurally.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(c))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (sn, pn) = num.to_unipoly();
        let (sd, pd) = den.to_unipoly();
        let g = pn.gcd(&pd);
        let (pn, pd) = if g.degree() == Some(0) {
            (pn, pd)
        } else {
            (pn.div_rem(&g).0, pd.div_rem(&g).0)
        };
        let c = pd.content();
        let inv = c.recip();
        let pn = pn.scale(&inv);
        let pd = pd.scale(&inv);
        Self {
            num: LaurentPoly::from_unipoly(sn - sd, &pn),
            den: LaurentPoly::from_unipoly(0, &pd),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value is a Laurent polynomial (possibly with rational
    /// coefficients).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Membership in A = Z[v, v^-1].
    pub fn is_in_a(&self) -> bool {
        self.is_laurent() && self.num.is_in_a()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        Self::reduce(&self.num * p, self.den.clone())
    }

    /// Parses `p` or `(p)/(q)` where `p`, `q` are Laurent polynomial
    /// expressions accepted by [`LaurentPoly::parse`].
    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let s = s.trim();
        let strip = |t: &str| {
            let t = t.trim();
            if t.starts_with('(') && t.ends_with(')') {
                t[1..t.len() - 1].to_string()
            } else {
                t.to_string()
            }
        };
        if let Some(pos) = s.find(")/(") {
            let num = LaurentPoly::parse(&strip(&s[..=pos]))?;
            let den = LaurentPoly::parse(&strip(&s[pos + 2..]))?;
            return Self::new(num, den);
        }
        Ok(Self::from_laurent(LaurentPoly::parse(&strip(s))?))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<BigRational> for RationalFunction {
    fn from(c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction::from_laurent(&self.num + &rhs.num);
            }
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_laurent(&self.num * &rhs.num);
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = Result<RationalFunction, ArithError>;
    fn div(self, rhs: &'a RationalFunction) -> Result<RationalFunction, ArithError> {
        Ok(self * &rhs.inv()?)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms)
    }

    #[test]
    fn reduces_common_factors_and_units() {
        // (v^2 - v^-2) / (2v - 2v^-1) = (v + v^-1)/2
        let r = RationalFunction::new(lp(&[(2, 1), (-2, -1)]), lp(&[(1, 2), (-1, -2)])).unwrap();
        assert!(r.is_laurent());
        assert_eq!(
            r.numer(),
            &lp(&[(1, 1), (-1, 1)]).scale(&BigRational::new(1.into(), 2.into()))
        );
        // v^-3 is a unit: 1/v^3 == v^-3
        let u = RationalFunction::new(LaurentPoly::one(), LaurentPoly::v_pow(3)).unwrap();
        assert_eq!(u, RationalFunction::from_laurent(LaurentPoly::v_pow(-3)));
    }

    #[test]
    fn normalized_denominator_is_primitive_positive() {
        let r = RationalFunction::new(LaurentPoly::one(), lp(&[(0, -4), (1, -2)])).unwrap();
        assert_eq!(r.denom(), &lp(&[(0, 2), (1, 1)]));
        assert_eq!(r.numer(), &LaurentPoly::constant(BigRational::new((-1).into(), 2.into())));
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(lp(&[(0, 1)]), lp(&[(0, 1), (1, 1)])).unwrap();
        let b = RationalFunction::new(lp(&[(1, 1)]), lp(&[(0, 1), (1, 1)])).unwrap();
        assert!((&a + &b).is_one());
        let prod = &a * &a.inv().unwrap();
        assert!(prod.is_one());
        assert!(RationalFunction::zero().inv().is_err());
    }

    #[test]
    fn parse_forms() {
        let r = RationalFunction::parse("(1)/(1 + v)").unwrap();
        assert_eq!(r.to_string(), "(1)/(1 + v)");
        assert_eq!(RationalFunction::parse(&r.to_string()).unwrap(), r);
        assert_eq!(RationalFunction::parse("v").unwrap().to_string(), "v");
        assert_eq!(RationalFunction::parse("2").unwrap(), RationalFunction::from_int(2));
    }
}
