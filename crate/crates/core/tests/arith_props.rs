//! Property tests for exact arithmetic, specialization and matrix rank.

use klschur::arith::{
    specialize_cyclotomic, specialize_prime, specialize_rational_prime, CyclotomicField, IntLaurent, LaurentPoly,
    PrimeFieldElement, RationalFunction,
};
use klschur::linalg::{rank, Matrix, PivotStrategy};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 0..5).prop_map(|t| LaurentPoly::from_int_terms(&t))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn int_laurent() -> impl Strategy<Value = IntLaurent> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 0..5).prop_map(|t| IntLaurent::from_terms(&t))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn bar_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn int_laurent_agrees_with_rational_coefficients(a in int_laurent(), b in int_laurent()) {
        prop_assert_eq!((&a * &b).to_laurent(), &a.to_laurent() * &b.to_laurent());
        prop_assert_eq!((&a + &b).to_laurent(), &a.to_laurent() + &b.to_laurent());
        prop_assert_eq!(a.bar().to_laurent(), a.to_laurent().bar());
    }

    #[test]
    fn rational_functions_form_a_field(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y).unwrap() * &y, x.clone());
        }
        prop_assert_eq!(x.bar().bar(), x.clone());
    }

    #[test]
    fn display_round_trips(p in laurent(), x in ratfunc()) {
        prop_assert_eq!(LaurentPoly::parse(&p.to_string()).unwrap(), p);
        prop_assert_eq!(RationalFunction::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn prime_specialization_is_a_ring_map(a in laurent(), b in laurent(), t in 1u64..13) {
        let t = PrimeFieldElement::new(13, t as i128).unwrap();
        let s = |p: &LaurentPoly| specialize_prime(p, t).unwrap();
        prop_assert_eq!(s(&(&a * &b)), s(&a) * s(&b));
        prop_assert_eq!(s(&(&a + &b)), s(&a) + s(&b));
    }

    #[test]
    fn rational_prime_specialization_is_multiplicative(x in ratfunc(), y in ratfunc(), t in 1u64..13) {
        let t = PrimeFieldElement::new(13, t as i128).unwrap();
        if let (Ok(sx), Ok(sy)) = (specialize_rational_prime(&x, t), specialize_rational_prime(&y, t)) {
            prop_assert_eq!(specialize_rational_prime(&(&x * &y), t).unwrap(), sx * sy);
        }
    }

    #[test]
    fn cyclotomic_specialization_is_a_ring_map(a in laurent(), b in laurent(), m in prop::sample::select(vec![2u32, 3, 4, 6, 8])) {
        let f = CyclotomicField::new(m);
        let s = |p: &LaurentPoly| specialize_cyclotomic(p, &f);
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn rank_is_invariant_under_permutations(
        entries in prop::collection::vec(0i128..7, 36),
        rows in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
        cols in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let m = Matrix::from_fn(6, 6, |i, j| PrimeFieldElement::new(7, entries[6 * i + j]).unwrap());
        let p = Matrix::from_fn(6, 6, |i, j| m.get(rows[i], cols[j]).clone());
        let r = rank(&m, PivotStrategy::FirstRow);
        prop_assert_eq!(r, rank(&p, PivotStrategy::FirstRow));
        prop_assert_eq!(r, rank(&m, PivotStrategy::LastRowReversed));
        prop_assert_eq!(r, rank(&m.transpose(), PivotStrategy::FirstRow));
    }
}
