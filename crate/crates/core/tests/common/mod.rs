#![allow(dead_code)]

use proptest::prelude::*;
use toric_bdiv::{
    Filtration, MonomialIdeal, Polynomial, QVector, Rational, Region, ToricBDivisor, WeightVector,
};

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

pub fn rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (0..=max_num, 1..=max_den).prop_map(|(p, d)| Rational::new(p, d))
}

pub fn positive_rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
    (1..=max_num, 1..=max_den).prop_map(|(p, d)| Rational::new(p, d))
}

pub fn point(dim: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec(rational(8, 4), dim).prop_map(QVector::new)
}

/// An m-primary region: one point on every axis plus a few free vertices.
pub fn region(dim: usize) -> impl Strategy<Value = Region> {
    (
        prop::collection::vec(positive_rational(8, 4), dim),
        prop::collection::vec(point(dim), 0..=3),
    )
        .prop_map(move |(axes, extra)| {
            let mut pts: Vec<QVector> =
                axes.into_iter().enumerate().map(|(i, t)| QVector::axis(dim, i, t)).collect();
            pts.extend(extra.into_iter().filter(|p| !p.is_zero()));
            Region::hull(pts).unwrap()
        })
}

pub fn region_2_or_3() -> impl Strategy<Value = Region> {
    prop_oneof![region(2), region(3)]
}

pub fn ideal(dim: usize, max: u32) -> impl Strategy<Value = MonomialIdeal> {
    (
        prop::collection::vec(1..=max, dim),
        prop::collection::vec(prop::collection::vec(0..=max, dim), 0..=3),
    )
        .prop_map(move |(pure, extra)| {
            let mut gens: Vec<Vec<u32>> =
                pure.iter().enumerate().map(|(i, &k)| {
                    let mut u = vec![0; dim];
                    u[i] = k;
                    u
                }).collect();
            gens.extend(extra.into_iter().filter(|u| u.iter().any(|&x| x > 0)));
            MonomialIdeal::new(dim, gens).unwrap()
        })
}

/// Any ideal, possibly not m-primary or zero-dimensional.
pub fn any_ideal(dim: usize, max: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max, dim), 1..=4)
        .prop_map(move |gens| MonomialIdeal::new(dim, gens).unwrap())
}

pub fn weight(dim: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(positive_rational(6, 3), dim)
        .prop_map(|v| WeightVector::new(QVector::new(v)).unwrap())
}

/// Nonzero weights, possibly with zero entries.
pub fn partial_weight(dim: usize) -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(rational(6, 3), dim)
        .prop_filter("nonzero", |v| v.iter().any(Rational::is_positive))
        .prop_map(|v| WeightVector::new(QVector::new(v)).unwrap())
}

pub fn polynomial(dim: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=4, dim), -3i64..=3), 1..=4).prop_map(
        move |terms| {
            let terms = terms
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(u, c)| (u.into(), Rational::integer(c)));
            Polynomial::new(dim, terms).unwrap()
        },
    )
}

pub fn nonzero_polynomial(dim: usize) -> impl Strategy<Value = Polynomial> {
    polynomial(dim).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn monomial(dim: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(0u32..=5, dim).prop_map(|u| Polynomial::monomial(u.into()))
}

/// Filtrations from every constructor, in two variables.
pub fn filtration2() -> impl Strategy<Value = Filtration> {
    let base = prop_oneof![
        ideal(2, 4).prop_map(|b| Filtration::ideal_power(b).unwrap()),
        weight(2).prop_map(|w| Filtration::valuation(w).unwrap()),
        region(2).prop_map(|r| Filtration::region(r).unwrap()),
    ];
    base.prop_recursive(1, 4, 2, |inner| {
        prop_oneof![
            (positive_rational(3, 2), inner.clone())
                .prop_map(|(c, f)| Filtration::scale(c, f).unwrap()),
            (inner.clone(), inner).prop_map(|(f, g)| Filtration::intersect(f, g).unwrap()),
        ]
    })
}

/// Filtrations whose ideals exhaust `𝔪`: everything but bare ideal powers.
pub fn saturated_like2() -> impl Strategy<Value = Filtration> {
    prop_oneof![
        weight(2).prop_map(|w| Filtration::valuation(w).unwrap()),
        region(2).prop_map(|r| Filtration::region(r).unwrap()),
        (positive_rational(3, 2), region(2))
            .prop_map(|(c, r)| Filtration::scale(c, Filtration::region(r).unwrap()).unwrap()),
    ]
}

/// A fan divisor in `Div^b`: zero on the boundary, negative inside.
pub fn fan_divisor() -> impl Strategy<Value = ToricBDivisor> {
    prop::collection::btree_map((1i64..=5, 1i64..=5), positive_rational(6, 5), 1..=4).prop_map(
        |m| {
            let mut rays: Vec<([i64; 2], Rational)> = Vec::new();
            for ((a, b), v) in m {
                let g = gcd(a, b);
                let r = [a / g, b / g];
                if !rays.iter().any(|(s, _)| *s == r) {
                    rays.push((r, -v));
                }
            }
            rays.push(([1, 0], Rational::zero()));
            rays.push(([0, 1], Rational::zero()));
            rays.sort_by(|(x, _), (y, _)| {
                (y[0] as i128 * x[1] as i128).cmp(&(x[0] as i128 * y[1] as i128))
            });
            let (r, v): (Vec<_>, Vec<_>) = rays.into_iter().unzip();
            ToricBDivisor::fan_pl(r, v).unwrap()
        },
    )
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lambda_grid() -> Vec<Rational> {
    (1..=10).map(|k| q(k, 2)).collect()
}
