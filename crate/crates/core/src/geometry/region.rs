use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_dim, Error, Result};
use crate::geometry::linalg::{combinations, rank, solve_square};
use crate::geometry::lp::{lp_feasible, lp_minimize, Constraint, LpOutcome};
use crate::geometry::vector::{one_if, QVector};
use crate::monomial::staircase::{staircase_from_inequalities, IntInequality};
use crate::monomial::ExponentVector;
use crate::rational::{Extended, Rational};

/// Largest ambient dimension for which exact hulls are computed.
pub const MAX_HULL_DIM: usize = 3;

/// The inequality `⟨normal, u⟩ ≥ offset` with `normal` a primitive
/// nonnegative integer vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: Rational,
}

impl Halfspace {
    /// Normalizes `⟨normal, u⟩ ≥ offset` for a nonzero nonnegative rational normal.
    pub fn new(normal: &QVector, offset: Rational) -> Result<Self> {
        if !normal.is_nonnegative() {
            return Err(Error::NegativeCoordinate("halfspace normal"));
        }
        let (ints, factor) = normal.primitive_integer()?;
        Ok(Halfspace {
            normal: ints,
            offset: offset * factor,
        })
    }

    pub fn normal_vector(&self) -> QVector {
        QVector::from_ints(self.normal.iter().copied())
    }

    pub fn holds_at(&self, u: &QVector) -> bool {
        self.normal_vector().dot(u) >= self.offset
    }

    /// Integer form of the scaled inequality `⟨normal, u⟩ ≥ ⌈λ·offset⌉`,
    /// valid for lattice points `u`.
    pub(crate) fn integer_at(&self, lambda: &Rational) -> Result<IntInequality> {
        Ok(IntInequality {
            normal: self.normal.clone(),
            rhs: (lambda * &self.offset).ceil_i64()?,
        })
    }
}

/// A convex up-set `conv(vertices) + ℝⁿ_{≥0}` with nonnegative rational vertices.
///
/// The vertex list is canonical: no vertex lies in the region generated by the
/// others, and vertices are sorted lexicographically. Two regions are equal
/// exactly when their vertex lists are.
#[derive(Clone)]
pub struct Region {
    dim: usize,
    vertices: Vec<QVector>,
    facets: OnceLock<Vec<Halfspace>>,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Region {}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Region{:?}", self.vertices)
    }
}

impl Region {
    /// The canonical region generated by `points`.
    pub fn hull<I: IntoIterator<Item = QVector>>(points: I) -> Result<Region> {
        let mut pts: Vec<QVector> = points.into_iter().collect();
        let Some(first) = pts.first() else {
            return Err(Error::EmptyInput("region vertices"));
        };
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if dim > MAX_HULL_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_HULL_DIM });
        }
        for p in &pts {
            check_dim(dim, p.dim())?;
            if !p.is_nonnegative() {
                return Err(Error::NegativeCoordinate("region vertex"));
            }
        }
        pts.sort();
        pts.dedup();
        let dominated: Vec<bool> = pts
            .iter()
            .map(|p| pts.iter().any(|q| q != p && q.le(p)))
            .collect();
        let mut kept: Vec<QVector> = pts
            .into_iter()
            .zip(dominated)
            .filter_map(|(p, d)| (!d).then_some(p))
            .collect();
        let mut i = 0;
        while kept.len() > 1 && i < kept.len() {
            let candidate = kept.remove(i);
            if in_region_of(&kept, &candidate)? {
                continue;
            }
            kept.insert(i, candidate);
            i += 1;
        }
        Ok(Region {
            dim,
            vertices: kept,
            facets: OnceLock::new(),
        })
    }

    /// The whole orthant, i.e. the region of the unit ideal.
    pub fn orthant(dim: usize) -> Result<Region> {
        Region::hull([QVector::zeros(dim)])
    }

    /// The polyhedron `{u ≥ 0 : ⟨a, u⟩ ≥ b for every halfspace}`, whose
    /// normals must be nonnegative so that it is an up-set.
    pub fn from_halfspaces(dim: usize, halfspaces: &[Halfspace]) -> Result<Region> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if dim > MAX_HULL_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_HULL_DIM });
        }
        let mut all: Vec<(QVector, Rational)> = Vec::new();
        for h in halfspaces {
            check_dim(dim, h.normal.len())?;
            if h.normal.iter().any(|&a| a < 0) {
                return Err(Error::NegativeCoordinate("halfspace normal"));
            }
            all.push((h.normal_vector(), h.offset.clone()));
        }
        for i in 0..dim {
            all.push((QVector::axis(dim, i, Rational::one()), Rational::zero()));
        }
        all.sort();
        all.dedup();
        let mut points = BTreeSet::new();
        for combo in combinations(all.len(), dim) {
            let rows: Vec<Vec<Rational>> =
                combo.iter().map(|&k| all[k].0.entries().to_vec()).collect();
            let rhs: Vec<Rational> = combo.iter().map(|&k| all[k].1.clone()).collect();
            let Some(x) = solve_square(&rows, &rhs) else {
                continue;
            };
            let x = QVector::new(x);
            if all.iter().all(|(a, b)| a.dot(&x) >= *b) {
                points.insert(x);
            }
        }
        if points.is_empty() {
            return Err(Error::Internal("polyhedron without vertices".into()));
        }
        Region::hull(points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[QVector] {
        &self.vertices
    }

    /// Exact membership `u ∈ conv(vertices) + ℝⁿ_{≥0}` by LP feasibility.
    pub fn contains(&self, u: &QVector) -> Result<bool> {
        check_dim(self.dim, u.dim())?;
        in_region_of(&self.vertices, u)
    }

    /// Membership through the facet description; agrees with [`Region::contains`].
    pub fn satisfies_facets(&self, u: &QVector) -> bool {
        u.is_nonnegative() && self.facets().iter().all(|h| h.holds_at(u))
    }

    /// The support value `min_c ⟨w, c⟩` over the vertices.
    pub fn support(&self, w: &QVector) -> Rational {
        self.vertices
            .iter()
            .map(|c| w.dot(c))
            .min()
            .expect("regions are nonempty")
    }

    pub fn scale(&self, t: &Rational) -> Result<Region> {
        if !t.is_positive() {
            return Err(Error::NonPositive("scale factor"));
        }
        Ok(Region {
            dim: self.dim,
            vertices: self.vertices.iter().map(|c| c.scale(t)).collect(),
            facets: OnceLock::new(),
        })
    }

    /// Irredundant facet description. Computed once and cached.
    pub fn facets(&self) -> &[Halfspace] {
        self.facets.get_or_init(|| self.compute_facets())
    }

    fn compute_facets(&self) -> Vec<Halfspace> {
        let n = self.dim;
        // The support function is linear on the cells of the arrangement cut by
        // these hyperplanes, so its facet normals are among the cell vertices.
        let mut hyperplanes: Vec<QVector> =
            (0..n).map(|i| QVector::axis(n, i, Rational::one())).collect();
        for (j, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[j + 1..] {
                hyperplanes.push(a.sub(b));
            }
        }
        let mut normals = BTreeSet::new();
        for combo in combinations(hyperplanes.len(), n - 1) {
            let mut rows = vec![QVector::ones(n).into_entries()];
            rows.extend(combo.iter().map(|&k| hyperplanes[k].entries().to_vec()));
            let mut rhs = vec![Rational::zero(); n];
            rhs[0] = Rational::one();
            if let Some(w) = solve_square(&rows, &rhs) {
                let w = QVector::new(w);
                if w.is_nonnegative() {
                    normals.insert(w);
                }
            }
        }
        let mut facets = BTreeSet::new();
        for w in normals {
            let h = self.support(&w);
            let tight: Vec<&QVector> = self.vertices.iter().filter(|c| w.dot(c) == h).collect();
            let mut span: Vec<Vec<Rational>> = tight[1..]
                .iter()
                .map(|c| c.sub(tight[0]).into_entries())
                .collect();
            for i in 0..n {
                if w[i].is_zero() {
                    span.push((0..n).map(|k| one_if(k == i)).collect());
                }
            }
            if rank(&span) == n - 1 {
                facets.insert(Halfspace::new(&w, h).expect("nonnegative normal"));
            }
        }
        facets.into_iter().collect()
    }

    /// `self ∩ other`, by vertex enumeration over both facet systems.
    pub fn intersection(&self, other: &Region) -> Result<Region> {
        check_dim(self.dim, other.dim)?;
        let mut hs = self.facets().to_vec();
        hs.extend(other.facets().iter().cloned());
        Region::from_halfspaces(self.dim, &hs)
    }

    /// The coordinate `t > 0` such that `t·eᵢ` is a vertex, if any.
    pub fn axis_intercept(&self, i: usize) -> Option<Rational> {
        self.vertices
            .iter()
            .find(|c| c[i].is_positive() && (0..self.dim).all(|k| k == i || c[k].is_zero()))
            .map(|c| c[i].clone())
    }

    /// Whether every axis meets the region away from the origin, i.e. its
    /// lattice points at every positive scale form an m-primary ideal.
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|i| self.axis_intercept(i).is_some())
    }

    /// `min_c |c|₁` over the vertices.
    pub fn min_degree(&self) -> Rational {
        self.vertices.iter().map(QVector::sum).min().expect("nonempty")
    }

    /// `max_i` of the axis intercepts; `None` unless m-primary.
    pub fn max_axis_intercept(&self) -> Option<Rational> {
        (0..self.dim)
            .map(|i| self.axis_intercept(i))
            .collect::<Option<Vec<_>>>()
            .and_then(|v| v.into_iter().max())
    }

    /// `sup {t ≥ 0 : u ∈ t·Q}` by the LP `min ⟨w,u⟩ s.t. ⟨w,c⟩ ≥ 1, w ≥ 0`.
    pub fn gauge(&self, u: &QVector) -> Result<Extended> {
        check_dim(self.dim, u.dim())?;
        if self.vertices.iter().any(QVector::is_zero) {
            return Ok(Extended::Infinity);
        }
        let constraints: Vec<Constraint> = self
            .vertices
            .iter()
            .map(|c| Constraint::ge(c.clone(), Rational::one()))
            .collect();
        match lp_minimize(u, &constraints, true)? {
            LpOutcome::Optimal(o) => Ok(Extended::Finite(o.value)),
            LpOutcome::Unbounded => Err(Error::Internal("gauge LP unbounded".into())),
        }
    }

    /// The `≤`-minimal points of `λ·Q ∩ ℕⁿ` inside `[0, B]ⁿ`, sorted.
    pub fn minimal_lattice_points(
        &self,
        scale: &Rational,
        box_bound: u32,
    ) -> Result<Vec<ExponentVector>> {
        if !scale.is_positive() {
            return Err(Error::NonPositive("scale"));
        }
        if box_bound == 0 {
            return Err(Error::InvalidBoxBound);
        }
        let ineqs = self
            .facets()
            .iter()
            .map(|h| h.integer_at(scale))
            .collect::<Result<Vec<_>>>()?;
        let points = staircase_from_inequalities(self.dim, &ineqs, box_bound)?;
        if points.is_empty() {
            return Err(Error::Internal("no lattice point of the region in the box".into()));
        }
        Ok(points)
    }
}

fn in_region_of(vertices: &[QVector], u: &QVector) -> Result<bool> {
    let k = vertices.len();
    let n = u.dim();
    let mut constraints: Vec<Constraint> = Constraint::eq(QVector::ones(k), Rational::one()).into();
    for i in 0..n {
        let row = QVector::new(vertices.iter().map(|c| c[i].clone()).collect());
        constraints.push(Constraint::le(row, u[i].clone()));
    }
    lp_feasible(k, &constraints, true)
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            vertices: &'a [QVector],
        }
        Repr { vertices: &self.vertices }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Region {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            vertices: Vec<QVector>,
        }
        let r = Repr::deserialize(deserializer)?;
        Region::hull(r.vertices).map_err(serde::de::Error::custom)
    }
}
