mod common;

use common::*;
use proptest::prelude::*;
use toric_bdiv::oracles::saturation_oracle;
use toric_bdiv::{Filtration, Rational, ToricBDivisor, Verdict, WeightVector};

fn grid() -> Vec<WeightVector> {
    let mut out = Vec::new();
    for a in 1..=5 {
        for b in 1..=5 {
            out.push(WeightVector::from_ints([a, b]).unwrap());
        }
    }
    out
}

fn w_star() -> ToricBDivisor {
    ToricBDivisor::fan_pl(
        vec![[1, 0], [2, 1], [1, 1], [1, 2], [0, 1]],
        vec![q(0, 1), q(-1, 1), q(-6, 5), q(-1, 1), q(0, 1)],
    )
    .unwrap()
}

#[test]
fn sampled_divisors_compare_without_certificate() {
    let s = ToricBDivisor::sampled(2, |w| -w[0].min(w[1]));
    let c = s.compare(&ToricBDivisor::z_m(2).unwrap()).unwrap();
    assert_eq!(c.verdict, Verdict::Equal);
    assert!(!c.certified);
    let c = s.compare(&w_star()).unwrap();
    assert_eq!(c.verdict, Verdict::Greater);
}

#[test]
fn w_star_is_not_convex() {
    let z = ToricBDivisor::z_of_filtration(&w_star().extract_filtration().unwrap());
    let six_fifths = ToricBDivisor::scaled(q(6, 5), ToricBDivisor::z_m(2).unwrap()).unwrap();
    assert_eq!(z.compare(&six_fifths).unwrap().verdict, Verdict::Equal);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_homogeneous(d in prop_oneof![fan_divisor(), region(2).prop_map(ToricBDivisor::Convex)],
                                 w in weight(2), t in positive_rational(7, 4)) {
        let lhs = d.evaluate(&w.scale(&t).unwrap()).unwrap();
        prop_assert_eq!(lhs, t * d.evaluate(&w).unwrap());
    }

    #[test]
    fn exact_and_approximate_evaluation_agree(d in fan_divisor(), w in weight(2)) {
        let exact = d.evaluate(&w).unwrap().to_f64();
        let wf: Vec<f64> = w.as_qvector().iter().map(Rational::to_f64).collect();
        prop_assert!((d.evaluate_approx(&wf).unwrap() - exact).abs() < 1e-9);
    }

    #[test]
    fn z_commutes_with_scaling(f in filtration2(), c in positive_rational(5, 3)) {
        let lhs = ToricBDivisor::z_of_filtration(&Filtration::scale(c.clone(), f.clone()).unwrap());
        let rhs = ToricBDivisor::scaled(c, ToricBDivisor::z_of_filtration(&f)).unwrap();
        for w in grid() {
            prop_assert_eq!(lhs.evaluate(&w).unwrap(), rhs.evaluate(&w).unwrap());
        }
        prop_assert_eq!(lhs.compare(&rhs).unwrap().verdict, Verdict::Equal);
    }

    #[test]
    fn compare_is_a_partial_order(a in fan_divisor(), b in fan_divisor(), c in fan_divisor()) {
        prop_assert_eq!(a.compare(&a).unwrap().verdict, Verdict::Equal);
        let ab = a.compare(&b).unwrap();
        let ba = b.compare(&a).unwrap();
        if ab.is_le() && ba.is_le() {
            prop_assert_eq!(ab.verdict, Verdict::Equal);
        }
        if ab.is_le() && b.compare(&c).unwrap().is_le() {
            prop_assert!(a.compare(&c).unwrap().is_le());
        }
        for w in grid() {
            let le = a.evaluate(&w).unwrap() <= b.evaluate(&w).unwrap();
            if ab.is_le() {
                prop_assert!(le);
            }
        }
    }

    #[test]
    fn compare_in_three_variables(a in region(3), b in region(3)) {
        let (da, db) = (ToricBDivisor::Convex(a.clone()), ToricBDivisor::Convex(b.clone()));
        let ab = da.compare(&db).unwrap();
        let inside = a.vertices().iter().all(|v| b.contains(v).unwrap());
        prop_assert_eq!(ab.is_le(), inside);
        for wit in &ab.witnesses {
            prop_assert_ne!(&wit.left, &wit.right);
        }
    }

    #[test]
    fn extraction_of_z_is_integral_closure(a in ideal(2, 4)) {
        let ext = ToricBDivisor::z_of_ideal(&a).unwrap().extract_filtration().unwrap();
        let closure = ext.ideal_at(&Rational::one()).unwrap();
        prop_assert!(closure.contains_ideal(&a).unwrap());
        let power = Filtration::ideal_power(a).unwrap();
        prop_assert_eq!(closure, saturation_oracle(&power, &Rational::one(), 8).unwrap());
    }

    #[test]
    fn z_is_continuous_in_the_scale(f in filtration2(), w in weight(2)) {
        let target = ToricBDivisor::z_of_filtration(&f).evaluate(&w).unwrap();
        let mut last: Option<Rational> = None;
        for k in [1i64, 2, 4, 8, 16, 32, 64] {
            let c = q(k + 1, k);
            let v = ToricBDivisor::z_of_filtration(&Filtration::scale(c, f.clone()).unwrap()).evaluate(&w).unwrap();
            let gap = (v - &target).abs();
            prop_assert_eq!(gap.clone(), target.abs() / q(k, 1));
            if let Some(prev) = last {
                prop_assert!(gap < prev);
            }
            last = Some(gap);
        }
    }

    #[test]
    fn vanishing_order_matches_filtration_order(f in filtration2(), g in nonzero_polynomial(2)) {
        let z = ToricBDivisor::z_of_filtration(&f);
        let via_z = z.vanishing_order(&g).unwrap();
        let sat = f.saturate().norm_value(&g).unwrap();
        prop_assert_eq!(Some(via_z.clone()), sat.finite());
        let fan = ToricBDivisor::FromFiltration(f);
        prop_assert_eq!(fan.vanishing_order(&g).unwrap(), via_z);
    }

    #[test]
    fn json_round_trip(d in fan_divisor()) {
        let s = serde_json::to_string(&d).unwrap();
        let back: ToricBDivisor = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back.compare(&d).unwrap().verdict, Verdict::Equal);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
