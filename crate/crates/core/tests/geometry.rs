mod common;

use common::*;
use proptest::prelude::*;
use toric_bdiv::geometry::{lp_minimize, Constraint, LpOutcome};
use toric_bdiv::oracles::vertex_enumeration_minimum;
use toric_bdiv::{Error, ExponentVector, QVector, Rational, Region};

#[test]
fn membership_examples() {
    let q2 = Region::hull([QVector::from_ints([2, 0]), QVector::from_ints([0, 2])]).unwrap();
    assert!(q2.contains(&QVector::from_ints([1, 1])).unwrap());
    assert!(!q2.contains(&QVector::new(vec![q(1, 2), q(1, 1)])).unwrap());
    assert_eq!(
        Region::hull([QVector::new(vec![q(-1, 1), q(0, 1)])]),
        Err(Error::NegativeCoordinate("region vertex"))
    );
    assert!(matches!(
        Region::hull([QVector::from_ints([1, 1, 1, 1])]),
        Err(Error::DimensionTooLarge { dim: 4, max: 3 })
    ));
}

#[test]
fn newton_region_of_a_mixed_ideal() {
    let q = Region::hull([[2, 0], [1, 1], [0, 3]].map(QVector::from_ints)).unwrap();
    assert_eq!(q.vertices().len(), 3);
    let pts = q.minimal_lattice_points(&Rational::one(), 3).unwrap();
    let expect: Vec<ExponentVector> = [[0, 3], [1, 1], [2, 0]].map(ExponentVector::from).to_vec();
    assert_eq!(pts, expect);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lp_optimum_is_attained(
        rows in prop::collection::vec((point(2), positive_rational(4, 3)), 1..=4),
        obj in point(2),
    ) {
        let cs: Vec<Constraint> = rows
            .into_iter()
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, b)| Constraint::ge(a, b))
            .collect();
        prop_assume!(!cs.is_empty());
        let LpOutcome::Optimal(o) = lp_minimize(&obj, &cs, true).unwrap() else {
            unreachable!("nonnegative objective over the orthant is bounded");
        };
        prop_assert_eq!(obj.dot(&o.point), o.value.clone());
        prop_assert!(o.point.is_nonnegative());
        prop_assert!(cs.iter().all(|c| c.holds_at(&o.point)));
        prop_assert_eq!(vertex_enumeration_minimum(&obj, &cs).unwrap(), Some(o.value));
    }

    #[test]
    fn regions_are_up_sets(r in region_2_or_3(), u in point(3), d in point(3)) {
        let n = r.dim();
        let u = QVector::new(u.entries()[..n].to_vec());
        let up = u.add(&QVector::new(d.entries()[..n].to_vec()));
        if r.contains(&u).unwrap() {
            prop_assert!(r.contains(&up).unwrap());
        }
        prop_assert_eq!(r.contains(&u).unwrap(), r.satisfies_facets(&u));
    }

    #[test]
    fn minimal_lattice_points_form_the_staircase(r in region(2), lambda in positive_rational(3, 2)) {
        let c = r.max_axis_intercept().unwrap();
        let bound = (&c * &lambda).ceil_u32().unwrap().max(1);
        let pts = r.minimal_lattice_points(&lambda, bound).unwrap();
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                prop_assert!(!a.le(b) && !b.le(a));
            }
        }
        let scaled = r.scale(&lambda).unwrap();
        for x in 0..=bound + 1 {
            for y in 0..=bound + 1 {
                let u = ExponentVector::from([x, y]);
                let inside = scaled.contains(&u.to_qvector()).unwrap();
                prop_assert_eq!(inside, pts.iter().any(|g| g.le(&u)), "at {}", u);
            }
        }
    }

    #[test]
    fn hull_is_idempotent_and_order_free(pts in prop::collection::vec(point(3), 1..=6), seed in any::<u64>()) {
        let h = Region::hull(pts.clone()).unwrap();
        prop_assert_eq!(&Region::hull(h.vertices().to_vec()).unwrap(), &h);
        let mut shuffled = pts;
        let k = (seed as usize) % shuffled.len();
        shuffled.rotate_left(k);
        shuffled.reverse();
        prop_assert_eq!(Region::hull(shuffled).unwrap(), h);
    }

    #[test]
    fn facets_recover_the_region(r in region_2_or_3()) {
        let back = Region::from_halfspaces(r.dim(), r.facets()).unwrap();
        prop_assert_eq!(back, r);
    }
}
