mod common;

use common::*;
use proptest::prelude::*;
use toric_bdiv::correspondence::{
    b_divisoriality, check_extraction_inequality, check_injectivity, check_saturated_roundtrip,
    check_vanishing_order, main_inequality,
};
use toric_bdiv::{Filtration, ToricBDivisor, Witness};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn saturated_roundtrip(r in region_2_or_3()) {
        let f = Filtration::region(r).unwrap();
        let report = check_saturated_roundtrip(&f, &lambda_grid()[..4]).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
        prop_assert_eq!(report.values["equals_input"].as_str(), "true");
    }

    #[test]
    fn roundtrip_hits_the_saturation(f in filtration2()) {
        let report = check_saturated_roundtrip(&f, &lambda_grid()).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }

    #[test]
    fn extraction_inequality(d in fan_divisor()) {
        let report = check_extraction_inequality(&d).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
        // Strict exactly when the ray values are not those of a convex function.
        let convex = ToricBDivisor::z_of_filtration(&d.extract_filtration().unwrap());
        let strict = report.values["comparison"] == "less";
        prop_assert_eq!(strict, convex.compare(&d).unwrap().verdict != toric_bdiv::Verdict::Equal);
        for w in &report.witnesses {
            let Witness::Ray { left, right, .. } = w else { unreachable!() };
            prop_assert!(left < right);
        }
    }

    #[test]
    fn convex_divisors_reproduce_themselves(r in region(2)) {
        let report = check_extraction_inequality(&ToricBDivisor::Convex(r)).unwrap();
        prop_assert_eq!(report.values["comparison"].as_str(), "equal");
    }

    #[test]
    fn injectivity(a in region(2), b in region(2)) {
        let (f, g) = (Filtration::region(a.clone()).unwrap(), Filtration::region(b.clone()).unwrap());
        let report = check_injectivity(&f, &g, &lambda_grid()[..4]).unwrap();
        prop_assert!(report.passed());
        prop_assert_eq!(report.values["divisors"] == "equal", a == b);
        if a != b {
            let Witness::Ray { ray, left, right } = &report.witnesses[0] else { unreachable!() };
            prop_assert!(ray.iter().all(|x| x.is_positive()));
            prop_assert_ne!(left, right);
        }
    }

    #[test]
    fn b_divisorial_everywhere(w in prop_oneof![weight(3), partial_weight(3)], f in prop_oneof![monomial(3), nonzero_polynomial(3)]) {
        let report = b_divisoriality(&w, &f).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
        prop_assert_eq!(&report.values["value"], &report.values["order"]);
        prop_assert_ne!(report.values["z_at_w"].as_str(), "0");
    }

    #[test]
    fn main_inequality_holds(w in partial_weight(3), f in nonzero_polynomial(3)) {
        let report = main_inequality(&w, &f).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
        if w.has_full_support() {
            prop_assert_eq!(&report.values["lhs"], &report.values["rhs"]);
        }
    }

    #[test]
    fn divisor_order_dominates_the_norm(f in filtration2(), g in nonzero_polynomial(2)) {
        let report = check_vanishing_order(&f, &g).unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }
}
