//! Laurent polynomials in `v` with exact rational coefficients.
//!
//! The ring A = Z[v, v^-1] is the subset of polynomials with integral
//! coefficients, see [`LaurentPoly::is_in_a`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::unipoly::UniPoly;
use super::ArithError;

/// Exponents are kept well inside this bound at every size the crate supports.
pub const EXPONENT_BOUND: i32 = 10_000;

/// A Laurent polynomial `sum_k c_k v^k` stored densely from its lowest
/// nonzero exponent. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * v^k`.
    pub fn monomial(c: BigRational, k: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: k, coeffs: vec![c] }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    pub fn v() -> Self {
        Self::v_pow(1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigRational)>,
    {
        let terms: Vec<(i32, BigRational)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - lo) as usize] += c;
        }
        Self::normalized(lo, coeffs)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(k, c)| (k, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    fn normalized(mut low: i32, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i32;
        }
        debug_assert!(low.abs() < EXPONENT_BOUND);
        Self { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient (the degree).
    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> BigRational {
        let i = k - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Membership in A: every coefficient is an integer.
    pub fn is_in_a(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when only nonpositive powers of `v` occur.
    pub fn is_in_nonpositive_powers(&self) -> bool {
        self.max_exp().map_or(true, |d| d <= 0)
    }

    /// The ring involution `v -> v^-1`.
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

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The substitution `v -> v^k` (used with `k = -1` by `bar`, and by callers
    /// that need `v -> v^2`).
    pub fn substitute_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Splits off the factor `v^low`, returning `(low, ordinary polynomial)`
    /// whose constant term is nonzero.
    pub(crate) fn to_unipoly(&self) -> (i32, UniPoly) {
        (self.low, UniPoly::new(self.coeffs.clone()))
    }

    pub(crate) fn from_unipoly(shift: i32, p: &UniPoly) -> Self {
        Self::normalized(shift, p.coeffs().to_vec())
    }

    /// The exact quotient `self / b` in Q[v, v^-1].
    pub fn exact_divide(&self, b: &Self) -> Result<Self, ArithError> {
        if b.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if b.coeffs.len() == 1 {
            let c = &b.coeffs[0];
            return Ok(Self {
                low: self.low - b.low,
                coeffs: self.coeffs.iter().map(|x| x / c).collect(),
            });
        }
        let (sa, pa) = self.to_unipoly();
        let (sb, pb) = b.to_unipoly();
        let (q, rem) = pa.div_rem(&pb);
        if !rem.is_zero() {
            return Err(ArithError::NotDivisible {
                dividend: self.to_string(),
                divisor: b.to_string(),
            });
        }
        Ok(Self::from_unipoly(sa - sb, &q))
    }

    /// Evaluates the polynomial with `v` replaced by `t`, `v^-1` by `t_inv`,
    /// mapping coefficients through `coeff`.
    pub fn evaluate<T, F, E>(&self, t: &T, t_inv: &T, one: T, mut coeff: F) -> Result<T, E>
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
        F: FnMut(&BigRational) -> Result<T, E>,
    {
        let mut acc: Option<T> = None;
        for (k, c) in self.terms() {
            let base = if k >= 0 { t } else { t_inv };
            let mut p = one.clone();
            for _ in 0..k.unsigned_abs() {
                p = p * base.clone();
            }
            let term = coeff(c)? * p;
            acc = Some(match acc {
                None => term,
                Some(a) => a + term,
            });
        }
        match acc {
            Some(a) => Ok(a),
            None => coeff(&BigRational::zero()),
        }
    }

    /// Parses expressions such as `v^-1 + v`, `2*v^2 - 1/3*v^-1`, `-v`, `5`.
    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let err = || ArithError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut i = 1;
        let mut pieces = Vec::new();
        while i <= bytes.len() {
            let boundary = i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            if boundary {
                pieces.push(&compact[start..i]);
                start = i;
            }
            i += 1;
        }
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (1, &piece[1..]),
                b'-' => (-1, &piece[1..]),
                _ => (1, piece),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (coef_str, var_str) = match body.find('v') {
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    (c, Some(&body[pos + 1..]))
                }
                None => (body, None),
            };
            let mut coef = if coef_str.is_empty() {
                BigRational::one()
            } else {
                coef_str.parse::<BigRational>().map_err(|_| err())?
            };
            if sign < 0 {
                coef = -coef;
            }
            let exp = match var_str {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let e = rest.strip_prefix('^').ok_or_else(err)?;
                    let e = e.trim_start_matches('(').trim_end_matches(')');
                    e.parse::<i32>().map_err(|_| err())?
                }
            };
            terms.push((exp, coef));
        }
        Ok(Self::from_terms(terms))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{k}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An arbitrary but fixed total order (used only for deterministic sorting).
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        let a: Vec<_> = self.terms().collect();
        let b: Vec<_> = other.terms().collect();
        a.cmp(&b)
    }
}

fn add_impl(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let lo = a.low.min(b.low);
    let hi = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::normalized(lo, coeffs)
}

fn mul_impl(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let mut coeffs = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                coeffs[i + j] += x * y;
            }
        }
    }
    LaurentPoly::normalized(a.low + b.low, coeffs)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        add_impl(&self, &rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        add_impl(self, rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        add_impl(&self, &rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        mul_impl(self, rhs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        mul_impl(&self, &rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_impl(self, rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_impl(self, rhs, true);
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            terms: Vec<(i32, String)>,
        }
        Repr {
            terms: self.terms().map(|(k, c)| (k, c.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<(i32, String)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (k, c) in repr.terms {
            let c: BigRational = c.parse().map_err(D::Error::custom)?;
            terms.push((k, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms)
    }

    #[test]
    fn bar_examples() {
        let sym = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(sym.bar(), sym);
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
        // 2v^2 - v^-1 -> 2v^-2 - v
        assert_eq!(lp(&[(2, 2), (-1, -1)]).bar(), lp(&[(-2, 2), (1, -1)]));
    }

    #[test]
    fn exact_divide_examples() {
        let a = lp(&[(2, 1), (-2, -1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        let q = a.exact_divide(&b).unwrap();
        assert_eq!(q, lp(&[(1, 1), (-1, 1)]));
        assert_eq!(&q * &b, a);
        let p = lp(&[(3, 4), (0, -1)]);
        assert_eq!(p.exact_divide(&LaurentPoly::one()).unwrap(), p);
        assert_eq!(
            LaurentPoly::v().exact_divide(&LaurentPoly::v_pow(2)).unwrap(),
            LaurentPoly::v_pow(-1)
        );
    }

    #[test]
    fn exact_divide_rejects_remainders() {
        let a = lp(&[(1, 1), (0, 1)]);
        let b = lp(&[(1, 1), (-1, 1)]);
        assert!(matches!(
            a.exact_divide(&b),
            Err(ArithError::NotDivisible { .. })
        ));
        assert!(matches!(
            a.exact_divide(&LaurentPoly::zero()),
            Err(ArithError::DivisionByZero)
        ));
    }

    #[test]
    fn display_and_parse() {
        let p = lp(&[(-1, 1), (1, 1)]);
        assert_eq!(p.to_string(), "v^-1 + v");
        assert_eq!(LaurentPoly::parse("v^-1 + v").unwrap(), p);
        let q = lp(&[(2, 2), (-1, -1), (0, 3)]);
        assert_eq!(LaurentPoly::parse(&q.to_string()).unwrap(), q);
        assert_eq!(
            LaurentPoly::parse("1/2*v^-3").unwrap(),
            LaurentPoly::monomial(BigRational::new(1.into(), 2.into()), -3)
        );
        assert_eq!(LaurentPoly::parse("-v").unwrap(), lp(&[(1, -1)]));
        assert!(LaurentPoly::parse("v^x").is_err());
        assert!(LaurentPoly::parse("").is_err());
    }

    #[test]
    fn json_shape() {
        let p = lp(&[(2, 3), (-1, -1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"terms":[[-1,"-1"],[2,"3"]]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn membership_in_a() {
        assert!(lp(&[(3, -7)]).is_in_a());
        let half = LaurentPoly::monomial(BigRational::new(1.into(), 2.into()), 0);
        assert!(!half.is_in_a());
    }
}
