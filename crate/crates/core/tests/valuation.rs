mod common;

use common::*;
use proptest::prelude::*;
use toric_bdiv::{Extended, Polynomial, Rational};

fn ord_m(f: &Polynomial) -> Extended {
    f.support().map(|u| Extended::Finite(Rational::from(u.degree() as i64))).min().unwrap_or(Extended::Infinity)
}

fn scaled(e: Extended, t: &Rational) -> Extended {
    match e {
        Extended::Finite(v) => Extended::Finite(v * t),
        Extended::Infinity => Extended::Infinity,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn product_and_sum_rules(w in partial_weight(2), f in polynomial(2), g in polynomial(2)) {
        let v = |p: &Polynomial| w.value_of_polynomial(p).unwrap();
        let sum = v(&f.add(&g).unwrap());
        prop_assert!(sum >= v(&f).min(v(&g)));
        let prod = v(&f.mul(&g).unwrap());
        let expect = match (v(&f), v(&g)) {
            (Extended::Finite(a), Extended::Finite(b)) => Extended::Finite(a + b),
            _ => Extended::Infinity,
        };
        // Monomial orders have no zero divisors, so the lowest terms never cancel.
        prop_assert_eq!(prod, expect);
    }

    #[test]
    fn positive_exactly_on_the_maximal_ideal(w in weight(3), f in nonzero_polynomial(3)) {
        let in_m = f.support().all(|u| !u.is_zero());
        prop_assert_eq!(w.value_of_polynomial(&f).unwrap() > Extended::Finite(Rational::zero()), in_m);
    }

    #[test]
    fn ideal_values_add(w in partial_weight(2), a in any_ideal(2, 4), b in any_ideal(2, 4)) {
        let ab = a.product(&b).unwrap();
        prop_assert_eq!(
            w.value_of_ideal(&ab).unwrap(),
            w.value_of_ideal(&a).unwrap() + w.value_of_ideal(&b).unwrap()
        );
    }

    #[test]
    fn izumi_sandwich(w in weight(3), f in polynomial(3)) {
        let (lo, hi) = w.izumi_constants().unwrap();
        let v = w.value_of_polynomial(&f).unwrap();
        let o = ord_m(&f);
        prop_assert!(scaled(o.clone(), &lo) <= v);
        prop_assert!(v <= scaled(o, &hi));
    }
}
