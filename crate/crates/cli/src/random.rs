//! Seeded generators for randomized suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use toric_bdiv::{
    ExponentVector, Filtration, MonomialIdeal, Polynomial, QVector, Rational, Region,
    ToricBDivisor, WeightVector,
};

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut Rng8, num: std::ops::RangeInclusive<i64>, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(num), rng.gen_range(1..=max_den))
}

/// An m-primary region with at most `max_vertices` generating points: one on
/// each axis and the rest anywhere in the orthant.
pub fn region(rng: &mut Rng8, dim: usize, max_vertices: usize, max_den: i64) -> Region {
    let mut pts: Vec<QVector> =
        (0..dim).map(|i| QVector::axis(dim, i, rational(rng, 1..=2 * max_den, max_den))).collect();
    let extra = rng.gen_range(0..=max_vertices.saturating_sub(dim));
    for _ in 0..extra {
        let p = QVector::new((0..dim).map(|_| rational(rng, 0..=2 * max_den, max_den)).collect());
        if !p.is_zero() {
            pts.push(p);
        }
    }
    Region::hull(pts).expect("valid points")
}

pub fn m_primary_ideal(rng: &mut Rng8, dim: usize, max: u32) -> MonomialIdeal {
    let mut gens: Vec<ExponentVector> =
        (0..dim).map(|i| ExponentVector::axis(dim, i, rng.gen_range(1..=max))).collect();
    for _ in 0..rng.gen_range(0..=3) {
        let u = ExponentVector::new((0..dim).map(|_| rng.gen_range(0..=max)).collect());
        if !u.is_zero() {
            gens.push(u);
        }
    }
    MonomialIdeal::new(dim, gens).expect("valid generators")
}

/// Weights with entries `p/q`, `p ≤ 6`, `q ≤ 3`; zero entries allowed
/// unless `full` is set.
pub fn weight(rng: &mut Rng8, dim: usize, full: bool) -> WeightVector {
    loop {
        let lo = if full { 1 } else { 0 };
        let v: Vec<Rational> = (0..dim).map(|_| rational(rng, lo..=6, 3)).collect();
        if let Ok(w) = WeightVector::new(QVector::new(v)) {
            if !full || w.has_full_support() {
                return w;
            }
        }
    }
}

/// Weights with at least one zero entry.
pub fn partial_weight(rng: &mut Rng8, dim: usize) -> WeightVector {
    loop {
        let w = weight(rng, dim, false);
        if !w.has_full_support() {
            return w;
        }
    }
}

pub fn monomial(rng: &mut Rng8, dim: usize, max: u32) -> Polynomial {
    Polynomial::monomial(ExponentVector::new((0..dim).map(|_| rng.gen_range(0..=max)).collect()))
}

pub fn polynomial(rng: &mut Rng8, dim: usize, max: u32) -> Polynomial {
    let terms = rng.gen_range(1..=4);
    let mut f = Polynomial::zero(dim);
    for _ in 0..terms {
        let c = Rational::integer(*[-2i64, -1, 1, 2, 3].choose(rng).expect("nonempty"));
        f = f.add(&monomial(rng, dim, max).scale(&c)).expect("same dimension");
    }
    f
}

/// `g` and `−g + h` with `g` of low order, so that the sum cancels `g`.
pub fn cancelling_pair(rng: &mut Rng8, dim: usize) -> (Polynomial, Polynomial) {
    let g = polynomial(rng, dim, 2);
    let h = polynomial(rng, dim, 4);
    let minus = g.scale(&Rational::integer(-1));
    (g, minus.add(&h).expect("same dimension"))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// A fan divisor in `Div^b`: zero on the boundary rays, negative inside.
pub fn fan_divisor(rng: &mut Rng8) -> ToricBDivisor {
    let mut rays: Vec<[i64; 2]> = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let (a, b) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let g = gcd(a, b);
        let r = [a / g, b / g];
        if !rays.contains(&r) {
            rays.push(r);
        }
    }
    rays.sort_by(|x, y| (y[0] * x[1]).cmp(&(x[0] * y[1])));
    let mut all = vec![[1, 0]];
    all.extend(rays);
    all.push([0, 1]);
    let values: Vec<Rational> = (0..all.len())
        .map(|i| {
            if i == 0 || i == all.len() - 1 {
                Rational::zero()
            } else {
                -rational(rng, 1..=6, 5)
            }
        })
        .collect();
    ToricBDivisor::fan_pl(all, values).expect("valid fan")
}

/// An ideal power, a valuation, or the intersection of two of these.
pub fn saturation_input(rng: &mut Rng8, dim: usize) -> Filtration {
    fn base(rng: &mut Rng8, dim: usize) -> Filtration {
        if rng.gen_bool(0.5) {
            Filtration::ideal_power(m_primary_ideal(rng, dim, 4)).expect("m-primary")
        } else {
            Filtration::valuation(weight(rng, dim, true)).expect("full support")
        }
    }
    match rng.gen_range(0..3) {
        0 | 1 => base(rng, dim),
        _ => {
            let (f, g) = (base(rng, dim), base(rng, dim));
            Filtration::intersect(f, g).expect("same dimension")
        }
    }
}

/// Every constructor, with one level of scaling or intersection.
pub fn any_filtration(rng: &mut Rng8, dim: usize) -> Filtration {
    let leaf = |rng: &mut Rng8| match rng.gen_range(0..3) {
        0 => Filtration::ideal_power(m_primary_ideal(rng, dim, 4)).expect("m-primary"),
        1 => Filtration::valuation(weight(rng, dim, true)).expect("full support"),
        _ => Filtration::region(region(rng, dim, 4, 4)).expect("m-primary"),
    };
    match rng.gen_range(0..4) {
        0 => {
            let c = rational(rng, 1..=4, 3);
            Filtration::scale(c, leaf(rng)).expect("positive")
        }
        1 => {
            let f = leaf(rng);
            Filtration::intersect(f, leaf(rng)).expect("same dimension")
        }
        _ => leaf(rng),
    }
}

/// Saturated inputs only: valuations, regions and their scalings.
pub fn saturated_filtration(rng: &mut Rng8, dim: usize) -> Filtration {
    match rng.gen_range(0..3) {
        0 => Filtration::valuation(weight(rng, dim, true)).expect("full support"),
        1 => Filtration::region(region(rng, dim, 4, 4)).expect("m-primary"),
        _ => {
            let c = rational(rng, 1..=4, 3);
            Filtration::scale(c, Filtration::region(region(rng, dim, 4, 4)).expect("m-primary"))
                .expect("positive")
        }
    }
}
