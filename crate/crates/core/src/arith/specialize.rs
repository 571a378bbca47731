//! Ring maps out of Q[v, v^-1] into prime fields and cyclotomic fields.

use std::sync::Arc;

use num_rational::BigRational;

use super::cyclotomic::{bigint_mod, CyclotomicField, CyclotomicNumber};
use super::laurent::LaurentPoly;
use super::primefield::PrimeFieldElement;
use super::ratfunc::RationalFunction;
use super::ArithError;

/// Where `v` is sent.
#[derive(Clone, Debug)]
pub enum SpecTarget {
    /// `v -> v_image` in F_l.
    PrimeField(PrimeFieldElement),
    /// `v -> zeta_m` in Q(zeta_m).
    Cyclotomic(Arc<CyclotomicField>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecValue {
    Prime(PrimeFieldElement),
    Cyclotomic(CyclotomicNumber),
}

impl SpecValue {
    pub fn is_zero(&self) -> bool {
        match self {
            SpecValue::Prime(x) => x.is_zero(),
            SpecValue::Cyclotomic(x) => x.is_zero(),
        }
    }
}

fn rational_mod(c: &BigRational, l: u64) -> Result<PrimeFieldElement, ArithError> {
    let den = PrimeFieldElement::new_unchecked(l, bigint_mod(c.denom(), l));
    if den.is_zero() {
        return Err(ArithError::DenominatorVanishes(c.to_string()));
    }
    let num = PrimeFieldElement::new_unchecked(l, bigint_mod(c.numer(), l));
    Ok(num * den.inv()?)
}

pub fn specialize_prime(
    p: &LaurentPoly,
    v_image: PrimeFieldElement,
) -> Result<PrimeFieldElement, ArithError> {
    let l = v_image.modulus();
    let t_inv = v_image.inv()?;
    p.evaluate(&v_image, &t_inv, v_image.one_like(), |c| rational_mod(c, l))
}

pub fn specialize_cyclotomic(p: &LaurentPoly, field: &Arc<CyclotomicField>) -> CyclotomicNumber {
    let z = field.zeta();
    let z_inv = z.inv().expect("zeta is a unit");
    p.evaluate::<_, _, ArithError>(&z, &z_inv, field.one(), |c| Ok(field.from_rational(c.clone())))
        .expect("cyclotomic evaluation is total")
}

pub fn specialize(p: &LaurentPoly, target: &SpecTarget) -> Result<SpecValue, ArithError> {
    match target {
        SpecTarget::PrimeField(t) => specialize_prime(p, *t).map(SpecValue::Prime),
        SpecTarget::Cyclotomic(f) => Ok(SpecValue::Cyclotomic(specialize_cyclotomic(p, f))),
    }
}

/// Specializes `num / den`; fails when the image of the denominator is zero.
pub fn specialize_rational_prime(
    x: &RationalFunction,
    v_image: PrimeFieldElement,
) -> Result<PrimeFieldElement, ArithError> {
    let d = specialize_prime(x.denom(), v_image)?;
    if d.is_zero() {
        return Err(ArithError::DenominatorVanishes(x.to_string()));
    }
    Ok(specialize_prime(x.numer(), v_image)? * d.inv()?)
}

pub fn specialize_rational_cyclotomic(
    x: &RationalFunction,
    field: &Arc<CyclotomicField>,
) -> Result<CyclotomicNumber, ArithError> {
    let d = specialize_cyclotomic(x.denom(), field);
    if d.is_zero() {
        return Err(ArithError::DenominatorVanishes(x.to_string()));
    }
    Ok(&specialize_cyclotomic(x.numer(), field) * &d.inv()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_examples() {
        let p = LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)]);
        let t = PrimeFieldElement::new(5, 2).unwrap();
        assert!(specialize_prime(&p, t).unwrap().is_zero());
        assert_eq!(specialize_prime(&LaurentPoly::one(), t).unwrap().residue(), 1);
    }

    #[test]
    fn cyclotomic_example() {
        let f = CyclotomicField::new(4);
        let x = specialize_cyclotomic(&LaurentPoly::v_pow(2), &f);
        assert_eq!(x, f.from_rational(BigRational::from_integer((-1).into())));
    }

    #[test]
    fn denominator_vanishing() {
        let p = LaurentPoly::parse("1/5*v").unwrap();
        let t = PrimeFieldElement::new(5, 2).unwrap();
        assert!(matches!(
            specialize_prime(&p, t),
            Err(ArithError::DenominatorVanishes(_))
        ));
        let r = RationalFunction::parse("(1)/(1 + v^2)").unwrap();
        assert!(specialize_rational_prime(&r, t).is_err());
        assert!(specialize_rational_cyclotomic(&r, &CyclotomicField::new(4)).is_err());
    }
}
