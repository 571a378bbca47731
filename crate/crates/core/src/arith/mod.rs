//! Exact arithmetic: Laurent polynomials, rational functions, two-variable
//! polynomials, cyclotomic fields and prime fields.

pub mod bivariate;
pub mod cyclotomic;
pub mod intlaurent;
pub mod laurent;
pub mod primefield;
pub mod ratfunc;
pub mod specialize;
pub mod unipoly;

use thiserror::Error;

pub use bivariate::BivariatePoly;
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField, CyclotomicNumber};
pub use intlaurent::IntLaurent;
pub use laurent::LaurentPoly;
pub use primefield::{is_prime, PrimeFieldElement};
pub use ratfunc::RationalFunction;
pub use specialize::{
    specialize, specialize_cyclotomic, specialize_prime, specialize_rational_cyclotomic, specialize_rational_prime,
    SpecTarget, SpecValue,
};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator of {0} vanishes under the specialization")]
    DenominatorVanishes(String),
    #[error("{0} does not have integer coefficients")]
    NotIntegral(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse {0:?}")]
    Parse(String),
}
