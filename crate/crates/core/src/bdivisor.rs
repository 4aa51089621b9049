//! Toric b-divisors over the closed point, as degree-one homogeneous
//! functions `φ` on the weight orthant.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_dim, Error, Result};
use crate::filtration::Filtration;
use crate::geometry::{Halfspace, QVector, Region};
use crate::monomial::{MonomialIdeal, Polynomial};
use crate::rational::Rational;
use crate::valuation::WeightVector;

pub type Ray = [i64; 2];

fn cross(a: Ray, b: Ray) -> i128 {
    a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128
}

fn ray_order(a: &Ray, b: &Ray) -> Ordering {
    0.cmp(&cross(*a, *b))
}

fn ray_vector(r: Ray) -> QVector {
    QVector::from_ints(r)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A complete fan in the closed positive quadrant: primitive rays sorted by
/// slope from `(1,0)` to `(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Fan2D {
    rays: Vec<Ray>,
}

impl Fan2D {
    pub fn new(rays: Vec<Ray>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidFan(m.to_string()));
        if rays.first() != Some(&[1, 0]) || rays.last() != Some(&[0, 1]) {
            return bad("rays must start at (1,0) and end at (0,1)");
        }
        for r in &rays {
            if r[0] < 0 || r[1] < 0 || gcd(r[0], r[1]) != 1 {
                return bad("rays must be primitive and nonnegative");
            }
        }
        if rays.windows(2).any(|w| cross(w[0], w[1]) <= 0) {
            return bad("rays must be strictly sorted by slope");
        }
        Ok(Fan2D { rays })
    }

    /// The coarsest fan `{(1,0), (0,1)}`.
    pub fn quadrant() -> Self {
        Fan2D { rays: vec![[1, 0], [0, 1]] }
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    /// The fan with `extra` rays added.
    pub fn refine(&self, extra: &[Ray]) -> Fan2D {
        let mut rays = self.rays.clone();
        for r in extra {
            let g = gcd(r[0], r[1]);
            let r = [r[0] / g, r[1] / g];
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
        rays.sort_by(ray_order);
        Fan2D { rays }
    }

    /// The index `i` of a cone `[rᵢ, rᵢ₊₁]` containing `w`.
    fn cone_of(&self, w: &QVector) -> usize {
        let c = |a: &QVector, b: &QVector| &a[0] * &b[1] - &a[1] * &b[0];
        (0..self.rays.len() - 1)
            .find(|&i| !c(w, &ray_vector(self.rays[i + 1])).is_negative())
            .unwrap_or(self.rays.len() - 2)
    }
}

/// A function linear on each cone of a planar fan, given by its ray values.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Pl {
    fan: Fan2D,
    values: Vec<Rational>,
}

impl Pl {
    fn eval(&self, w: &QVector) -> Rational {
        let i = self.fan.cone_of(w);
        let (a, b) = (self.fan.rays[i], self.fan.rays[i + 1]);
        let det = Rational::from(cross(a, b) as i64);
        let wa = &w[0] * Rational::from(b[1]) - &w[1] * Rational::from(b[0]);
        let wb = Rational::from(a[0]) * &w[1] - Rational::from(a[1]) * &w[0];
        (wa * &self.values[i] + wb * &self.values[i + 1]) / det
    }

    fn eval_f64(&self, w: &[f64]) -> f64 {
        let rays = &self.fan.rays;
        let c = |a: [f64; 2], b: [f64; 2]| a[0] * b[1] - a[1] * b[0];
        let f = |r: Ray| [r[0] as f64, r[1] as f64];
        let i = (0..rays.len() - 1)
            .find(|&i| c([w[0], w[1]], f(rays[i + 1])) >= 0.0)
            .unwrap_or(rays.len() - 2);
        let (a, b) = (f(rays[i]), f(rays[i + 1]));
        let det = c(a, b);
        let wa = c([w[0], w[1]], b);
        let wb = c(a, [w[0], w[1]]);
        (wa * self.values[i].to_f64() + wb * self.values[i + 1].to_f64()) / det
    }

    fn refine(&self, extra: &[Ray]) -> Pl {
        let fan = self.fan.refine(extra);
        let values = fan.rays.iter().map(|&r| self.eval(&ray_vector(r))).collect();
        Pl { fan, values }
    }

    fn scale(&self, t: &Rational) -> Pl {
        Pl { fan: self.fan.clone(), values: self.values.iter().map(|v| v * t).collect() }
    }

    /// `−h_Q` on the normal fan of a planar region.
    fn from_region(q: &Region) -> Result<Pl> {
        let v = q.vertices();
        let mut extra = Vec::new();
        for pair in v.windows(2) {
            let normal = QVector::new(vec![&pair[0][1] - &pair[1][1], &pair[1][0] - &pair[0][0]]);
            let (ints, _) = normal.primitive_integer()?;
            extra.push([ints[0], ints[1]]);
        }
        let fan = Fan2D::quadrant().refine(&extra);
        let values = fan.rays.iter().map(|&r| -q.support(&ray_vector(r))).collect();
        Ok(Pl { fan, values })
    }
}

type SampleFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A sampled homogeneous function, evaluated approximately.
#[derive(Clone)]
pub struct SampledDivisor {
    dim: usize,
    f: SampleFn,
}

impl SampledDivisor {
    pub fn new(dim: usize, f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        SampledDivisor { dim, f: Arc::new(f) }
    }
}

/// A toric b-divisor over the closed point.
///
/// ```
/// use toric_bdiv::{Rational, ToricBDivisor, WeightVector};
///
/// let rays = vec![[1, 0], [2, 1], [1, 1], [1, 2], [0, 1]];
/// let values = ["0", "-1", "-6/5", "-1", "0"].map(|s| s.parse::<Rational>().unwrap());
/// let w_star = ToricBDivisor::fan_pl(rays, values.to_vec()).unwrap();
/// let w = WeightVector::from_ints([1, 1]).unwrap();
/// assert_eq!(w_star.evaluate(&w).unwrap(), Rational::new(-6, 5));
/// ```
#[derive(Clone)]
pub enum ToricBDivisor {
    /// Linear on each cone of a planar fan; the diagonal is always a ray.
    FanPl { fan: Fan2D, values: Vec<Rational> },
    /// `φ(w) = −min_c ⟨w, c⟩` over the vertices of a region.
    Convex(Region),
    /// `φ(w) = −v_w(𝔞_•)`.
    FromFiltration(Filtration),
    /// `t·φ`.
    Scaled(Rational, Box<ToricBDivisor>),
    /// An approximate evaluator, excluded from exact operations.
    Sampled(SampledDivisor),
}

/// Result of [`ToricBDivisor::compare`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    /// `W ≤ W′` and `W ≠ W′`.
    Less,
    Greater,
    Incomparable,
}

/// A weight where two divisors take the given values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayWitness {
    pub ray: QVector,
    pub left: Rational,
    pub right: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub verdict: Verdict,
    /// `false` when decided by sampling only.
    pub certified: bool,
    /// Rays where the two sides differ.
    pub witnesses: Vec<RayWitness>,
}

impl Comparison {
    /// `W ≤ W′`.
    pub fn is_le(&self) -> bool {
        matches!(self.verdict, Verdict::Equal | Verdict::Less)
    }
}

/// Where `W` sits relative to multiples of `Z(𝔪)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Boundedness {
    /// `φ(ray) > 0` somewhere.
    NotAntiEffective { ray: QVector },
    /// Anti-effective but not bounded below by any `C·Z(𝔪)`.
    UnboundedBelow,
    /// `W = 0`.
    DegenerateZero,
    /// `C·Z(𝔪) ≤ W ≤ 0` with least `C`, but no `ε > 0` above.
    BoundedBelow { c: Rational },
    /// `C·Z(𝔪) ≤ W ≤ ε·Z(𝔪)` with largest `ε` and least `C`.
    Bounded { epsilon: Rational, c: Rational },
}

impl Boundedness {
    /// The lower constant `C` for divisors in `Div⁺`.
    pub fn lower_constant(&self) -> Option<&Rational> {
        match self {
            Boundedness::BoundedBelow { c } | Boundedness::Bounded { c, .. } => Some(c),
            _ => None,
        }
    }

    fn scale(self, t: &Rational) -> Boundedness {
        match self {
            Boundedness::BoundedBelow { c } => Boundedness::BoundedBelow { c: c * t },
            Boundedness::Bounded { epsilon, c } => {
                Boundedness::Bounded { epsilon: epsilon * t, c: c * t }
            }
            other => other,
        }
    }
}

/// The data of `𝔞_•(W)`: `𝔞_λ = {xᵘ : ⟨r,u⟩ ≥ λ·b for each halfspace}`.
#[derive(Clone, Debug)]
pub struct Extraction {
    divisor: ToricBDivisor,
    halfspaces: Vec<Halfspace>,
    region: Region,
    lower: Rational,
}

impl Extraction {
    pub fn divisor(&self) -> &ToricBDivisor {
        &self.divisor
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    /// `C` with `𝔪^⌈Cλ⌉ ⊆ 𝔞_λ`.
    pub fn lower_constant(&self) -> &Rational {
        &self.lower
    }
}

impl ToricBDivisor {
    /// A fan divisor. Boundary values must vanish; the diagonal ray is
    /// inserted when absent.
    pub fn fan_pl(rays: Vec<Ray>, values: Vec<Rational>) -> Result<Self> {
        if rays.len() != values.len() {
            return Err(Error::InvalidFan(format!(
                "{} rays but {} values",
                rays.len(),
                values.len()
            )));
        }
        let fan = Fan2D::new(rays)?;
        if !values[0].is_zero() || !values[values.len() - 1].is_zero() {
            return Err(Error::BoundaryValueNonzero);
        }
        let pl = Pl { fan, values }.refine(&[[1, 1]]);
        Ok(ToricBDivisor::FanPl { fan: pl.fan, values: pl.values })
    }

    /// `φ(w) = −min_c ⟨w, c⟩`.
    pub fn convex<I: IntoIterator<Item = QVector>>(vertices: I) -> Result<Self> {
        Ok(ToricBDivisor::Convex(Region::hull(vertices)?))
    }

    /// `Z(𝔞)`, the divisor of an `𝔪`-primary ideal.
    pub fn z_of_ideal(a: &MonomialIdeal) -> Result<Self> {
        if !a.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        Ok(ToricBDivisor::Convex(a.newton_region()?))
    }

    /// `Z(𝔪)`.
    pub fn z_m(dim: usize) -> Result<Self> {
        Self::z_of_ideal(&MonomialIdeal::maximal(dim))
    }

    /// The zero divisor.
    pub fn zero(dim: usize) -> Result<Self> {
        Ok(ToricBDivisor::Convex(Region::orthant(dim)?))
    }

    /// `Z(𝔞_•)`, represented by the vertices of the asymptotic region.
    pub fn z_of_filtration(f: &Filtration) -> Self {
        ToricBDivisor::Convex(f.asymptotic_region().clone())
    }

    pub fn from_filtration(f: Filtration) -> Self {
        ToricBDivisor::FromFiltration(f)
    }

    pub fn scaled(t: Rational, inner: ToricBDivisor) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::NonPositive("divisor scale"));
        }
        Ok(ToricBDivisor::Scaled(t, Box::new(inner)))
    }

    pub fn sampled(dim: usize, f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        ToricBDivisor::Sampled(SampledDivisor::new(dim, f))
    }

    pub fn dim(&self) -> usize {
        match self {
            ToricBDivisor::FanPl { .. } => 2,
            ToricBDivisor::Convex(q) => q.dim(),
            ToricBDivisor::FromFiltration(f) => f.dim(),
            ToricBDivisor::Scaled(_, inner) => inner.dim(),
            ToricBDivisor::Sampled(s) => s.dim,
        }
    }

    pub fn is_exact(&self) -> bool {
        match self {
            ToricBDivisor::Sampled(_) => false,
            ToricBDivisor::Scaled(_, inner) => inner.is_exact(),
            _ => true,
        }
    }

    /// `φ(w)`.
    pub fn evaluate(&self, w: &WeightVector) -> Result<Rational> {
        check_dim(self.dim(), w.dim())?;
        let w = w.as_qvector();
        match self {
            ToricBDivisor::FanPl { fan, values } => {
                Ok(Pl { fan: fan.clone(), values: values.clone() }.eval(w))
            }
            ToricBDivisor::Convex(q) => Ok(-q.support(w)),
            ToricBDivisor::FromFiltration(f) => Ok(-f.asymptotic_region().support(w)),
            ToricBDivisor::Scaled(t, inner) => {
                Ok(t * &inner.evaluate(&WeightVector::new(w.clone())?)?)
            }
            ToricBDivisor::Sampled(_) => Err(Error::NotExact),
        }
    }

    /// Floating-point `φ(w)`, available for every representation.
    pub fn evaluate_approx(&self, w: &[f64]) -> Result<f64> {
        check_dim(self.dim(), w.len())?;
        let support = |q: &Region| {
            q.vertices()
                .iter()
                .map(|c| c.iter().zip(w).map(|(a, b)| a.to_f64() * b).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
        };
        Ok(match self {
            ToricBDivisor::FanPl { fan, values } => {
                Pl { fan: fan.clone(), values: values.clone() }.eval_f64(w)
            }
            ToricBDivisor::Convex(q) => -support(q),
            ToricBDivisor::FromFiltration(f) => -support(f.asymptotic_region()),
            ToricBDivisor::Scaled(t, inner) => t.to_f64() * inner.evaluate_approx(w)?,
            ToricBDivisor::Sampled(s) => (s.f)(w),
        })
    }

    /// The region `Q` with `φ = −h_Q`, for convex representations.
    pub fn convex_region(&self) -> Option<Region> {
        match self {
            ToricBDivisor::Convex(q) => Some(q.clone()),
            ToricBDivisor::FromFiltration(f) => Some(f.asymptotic_region().clone()),
            ToricBDivisor::Scaled(t, inner) => inner.convex_region()?.scale(t).ok(),
            ToricBDivisor::FanPl { .. } | ToricBDivisor::Sampled(_) => None,
        }
    }

    fn to_pl(&self) -> Result<Pl> {
        if self.dim() != 2 {
            return Err(Error::Unsupported("fan operations need dimension 2"));
        }
        match self {
            ToricBDivisor::FanPl { fan, values } => {
                Ok(Pl { fan: fan.clone(), values: values.clone() })
            }
            ToricBDivisor::Scaled(t, inner) => Ok(inner.to_pl()?.scale(t)),
            ToricBDivisor::Sampled(_) => Err(Error::NotExact),
            _ => Pl::from_region(&self.convex_region().expect("convex representation")),
        }
    }

    /// The coefficientwise order between `self` and `other`.
    pub fn compare(&self, other: &ToricBDivisor) -> Result<Comparison> {
        check_dim(self.dim(), other.dim())?;
        if !self.is_exact() || !other.is_exact() {
            return self.compare_sampled(other);
        }
        if self.dim() == 2 {
            let (a, b) = (self.to_pl()?, other.to_pl()?);
            let a = a.refine(&b.fan.rays);
            let b = b.refine(&a.fan.rays);
            let witnesses: Vec<RayWitness> = a
                .fan
                .rays
                .iter()
                .zip(a.values.iter().zip(&b.values))
                .filter(|(_, (x, y))| x != y)
                .map(|(&r, (x, y))| RayWitness { ray: ray_vector(r), left: x.clone(), right: y.clone() })
                .collect();
            return Ok(Comparison { verdict: verdict_of(&witnesses), certified: true, witnesses });
        }
        let (qa, qb) = match (self.convex_region(), other.convex_region()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Unsupported("fan divisors exist only in dimension 2")),
        };
        // φ_A ≤ φ_B ⇔ h_A ≥ h_B ⇔ Q_A ⊆ Q_B; separating facets give witnesses.
        let mut witnesses = Vec::new();
        for (inner, outer, flip) in [(&qa, &qb, false), (&qb, &qa, true)] {
            for c in inner.vertices() {
                if let Some(h) = outer.facets().iter().find(|h| !h.holds_at(c)) {
                    let ray = h.normal_vector();
                    let (x, y) = (-qa.support(&ray), -qb.support(&ray));
                    witnesses.push(RayWitness { ray, left: x, right: y });
                    let _ = flip;
                    break;
                }
            }
        }
        Ok(Comparison { verdict: verdict_of(&witnesses), certified: true, witnesses })
    }

    fn compare_sampled(&self, other: &ToricBDivisor) -> Result<Comparison> {
        const RESOLUTION: u32 = 24;
        let mut witnesses = Vec::new();
        let (mut less, mut greater) = (false, false);
        for w in crate::oracles::simplex_grid(self.dim(), RESOLUTION) {
            let wf: Vec<f64> = w.iter().map(Rational::to_f64).collect();
            let (x, y) = (self.evaluate_approx(&wf)?, other.evaluate_approx(&wf)?);
            let tol = 1e-9 * (1.0 + x.abs().max(y.abs()));
            if (x - y).abs() <= tol {
                continue;
            }
            if x < y {
                less = true;
            } else {
                greater = true;
            }
            if witnesses.len() < 4 {
                let to_q = |v: f64| Rational::new((v * 1e6).round() as i64, 1_000_000);
                witnesses.push(RayWitness { ray: w, left: to_q(x), right: to_q(y) });
            }
        }
        let verdict = match (less, greater) {
            (false, false) => Verdict::Equal,
            (true, false) => Verdict::Less,
            (false, true) => Verdict::Greater,
            (true, true) => Verdict::Incomparable,
        };
        Ok(Comparison { verdict, certified: false, witnesses })
    }

    /// Classifies `W` against multiples of `Z(𝔪)` with exact extremal constants.
    pub fn boundedness_constants(&self) -> Result<Boundedness> {
        match self {
            ToricBDivisor::Sampled(_) => Err(Error::NotExact),
            ToricBDivisor::Scaled(t, inner) => Ok(inner.boundedness_constants()?.scale(t)),
            ToricBDivisor::FanPl { fan, values } => {
                Ok(pl_boundedness(&Pl { fan: fan.clone(), values: values.clone() }))
            }
            _ => Ok(region_boundedness(&self.convex_region().expect("convex representation"))),
        }
    }

    /// `𝔞_•(W)` for `W` in `Div⁺`.
    ///
    /// ```
    /// use toric_bdiv::{MonomialIdeal, Rational, ToricBDivisor};
    ///
    /// let z = ToricBDivisor::z_m(2).unwrap();
    /// let f = z.extract_filtration().unwrap();
    /// let l = Rational::new(5, 2);
    /// assert_eq!(f.ideal_at(&l).unwrap(), MonomialIdeal::maximal_power(2, 3));
    /// ```
    pub fn extract_filtration(&self) -> Result<Filtration> {
        let class = self.boundedness_constants()?;
        let lower = match class {
            Boundedness::NotAntiEffective { .. } => return Err(Error::NotAntiEffective),
            Boundedness::UnboundedBelow => return Err(Error::UnboundedBelow),
            Boundedness::DegenerateZero => return Err(Error::DegenerateZero),
            Boundedness::BoundedBelow { c } | Boundedness::Bounded { c, .. } => c,
        };
        let halfspaces: Vec<Halfspace> = match self.convex_region() {
            Some(q) => q.facets().iter().filter(|h| h.offset.is_positive()).cloned().collect(),
            None => {
                let pl = self.to_pl()?;
                pl.fan
                    .rays
                    .iter()
                    .zip(&pl.values)
                    .filter(|(_, v)| v.is_negative())
                    .map(|(&r, v)| Halfspace::new(&ray_vector(r), -v.clone()))
                    .collect::<Result<_>>()?
            }
        };
        let region = Region::from_halfspaces(self.dim(), &halfspaces)?;
        Ok(Filtration::extracted(Extraction { divisor: self.clone(), halfspaces, region, lower }))
    }

    /// `ord_W(f) = inf_w v_w(f) / (−φ(w))`.
    pub fn vanishing_order(&self, f: &Polynomial) -> Result<Rational> {
        check_dim(self.dim(), f.dim())?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match self.boundedness_constants()? {
            Boundedness::NotAntiEffective { .. } => return Err(Error::NotAntiEffective),
            Boundedness::DegenerateZero => return Err(Error::ZeroSource),
            _ => {}
        }
        if let ToricBDivisor::Scaled(t, inner) = self {
            return Ok(inner.vanishing_order(f)? / t.clone());
        }
        let mut best: Option<Rational> = None;
        for u in f.support() {
            let uq = u.to_qvector();
            let order = match self.convex_region() {
                Some(q) => q.gauge(&uq)?.finite().ok_or(Error::ZeroSource)?,
                None => {
                    let pl = self.to_pl()?;
                    pl.fan
                        .rays
                        .iter()
                        .zip(&pl.values)
                        .filter(|(_, v)| v.is_negative())
                        .map(|(&r, v)| ray_vector(r).dot(&uq) / -v.clone())
                        .min()
                        .ok_or(Error::ZeroSource)?
                }
            };
            best = Some(match best {
                Some(b) => b.min(order),
                None => order,
            });
        }
        Ok(best.expect("nonzero polynomial"))
    }

    /// Whether `φ` is linear on every cone of `fan`.
    pub fn is_cartier_on(&self, fan: &Fan2D) -> Result<bool> {
        if !self.is_exact() {
            return Err(Error::NotExact);
        }
        let pl = self.to_pl()?;
        for cone in fan.rays.windows(2) {
            let (a, b) = (cone[0], cone[1]);
            let (va, vb) = (pl.eval(&ray_vector(a)), pl.eval(&ray_vector(b)));
            let det = Rational::from(cross(a, b) as i64);
            for (&r, v) in pl.fan.rays.iter().zip(&pl.values) {
                if cross(a, r) > 0 && cross(r, b) > 0 {
                    let wa = Rational::from((cross(r, b)) as i64);
                    let wb = Rational::from((cross(a, r)) as i64);
                    if (wa * &va + wb * &vb) / det.clone() != *v {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

fn verdict_of(witnesses: &[RayWitness]) -> Verdict {
    let less = witnesses.iter().any(|w| w.left < w.right);
    let greater = witnesses.iter().any(|w| w.left > w.right);
    match (less, greater) {
        (false, false) => Verdict::Equal,
        (true, false) => Verdict::Less,
        (false, true) => Verdict::Greater,
        (true, true) => Verdict::Incomparable,
    }
}

/// Extremes of `ρ = −φ / min(w)` over the open quadrant.
fn pl_boundedness(pl: &Pl) -> Boundedness {
    let pl = pl.refine(&[[1, 1]]);
    let rays = &pl.fan.rays;
    let values = &pl.values;
    if let Some((&r, _)) = rays.iter().zip(values).find(|(_, v)| v.is_positive()) {
        return Boundedness::NotAntiEffective { ray: ray_vector(r) };
    }
    if values.iter().all(Rational::is_zero) {
        return Boundedness::DegenerateZero;
    }
    let last = rays.len() - 1;
    let ratio = |i: usize| -values[i].clone() / Rational::from(rays[i][0].min(rays[i][1]));
    let mut ratios = Vec::new();
    for i in 0..=last {
        if i == 0 || i == last {
            // The limit along the adjacent cone.
            if values[i].is_negative() {
                return Boundedness::UnboundedBelow;
            }
            ratios.push(ratio(if i == 0 { 1 } else { last - 1 }));
        } else {
            ratios.push(ratio(i));
        }
    }
    let epsilon = ratios.iter().min().expect("rays").clone();
    let c = ratios.into_iter().max().expect("rays");
    if epsilon.is_zero() {
        Boundedness::BoundedBelow { c }
    } else {
        Boundedness::Bounded { epsilon, c }
    }
}

fn region_boundedness(q: &Region) -> Boundedness {
    if q.vertices().iter().any(QVector::is_zero) {
        return Boundedness::DegenerateZero;
    }
    match q.max_axis_intercept() {
        None => Boundedness::UnboundedBelow,
        Some(c) => Boundedness::Bounded { epsilon: q.min_degree(), c },
    }
}

impl fmt::Debug for ToricBDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToricBDivisor::FanPl { fan, values } => {
                write!(f, "FanPl[")?;
                for (i, (r, v)) in fan.rays.iter().zip(values).enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "({},{}):{v}", r[0], r[1])?;
                }
                write!(f, "]")
            }
            ToricBDivisor::Convex(q) => write!(f, "Convex{:?}", q.vertices()),
            ToricBDivisor::FromFiltration(x) => write!(f, "FromFiltration({x:?})"),
            ToricBDivisor::Scaled(t, inner) => write!(f, "Scaled({t}, {inner:?})"),
            ToricBDivisor::Sampled(s) => write!(f, "Sampled(dim {})", s.dim),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum DivisorRepr {
    FanPl { rays: Vec<Ray>, values: Vec<Rational> },
    Convex { vertices: Vec<QVector> },
    FromFiltration { filtration: Filtration },
    Scaled { t: Rational, inner: Box<ToricBDivisor> },
}

impl Serialize for ToricBDivisor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            ToricBDivisor::FanPl { fan, values } => {
                DivisorRepr::FanPl { rays: fan.rays.clone(), values: values.clone() }
            }
            ToricBDivisor::Convex(q) => DivisorRepr::Convex { vertices: q.vertices().to_vec() },
            ToricBDivisor::FromFiltration(f) => DivisorRepr::FromFiltration { filtration: f.clone() },
            ToricBDivisor::Scaled(t, inner) => {
                DivisorRepr::Scaled { t: t.clone(), inner: inner.clone() }
            }
            ToricBDivisor::Sampled(_) => {
                return Err(serde::ser::Error::custom("sampled divisors cannot be serialized"))
            }
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ToricBDivisor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let built = match DivisorRepr::deserialize(d)? {
            DivisorRepr::FanPl { rays, values } => ToricBDivisor::fan_pl(rays, values),
            DivisorRepr::Convex { vertices } => ToricBDivisor::convex(vertices),
            DivisorRepr::FromFiltration { filtration } => Ok(ToricBDivisor::FromFiltration(filtration)),
            DivisorRepr::Scaled { t, inner } => ToricBDivisor::scaled(t, *inner),
        };
        built.map_err(serde::de::Error::custom)
    }
}
