//! Exact rational geometry: vectors, linear programs, regions and their
//! lattice points.

pub mod linalg;
pub mod lp;
pub mod region;
pub mod vector;

pub use lp::{lp_feasible, lp_minimize, Constraint, LpOptimum, LpOutcome};
pub use region::{Halfspace, Region, MAX_HULL_DIM};
pub use vector::QVector;

use crate::error::Result;
use crate::monomial::ExponentVector;
use crate::rational::Rational;

/// Whether `u ∈ conv(vertices) + ℝⁿ_{≥0}`.
pub fn region_membership(u: &QVector, region: &Region) -> Result<bool> {
    region.contains(u)
}

/// The canonical region spanned by `points`.
pub fn convex_hull_region<I: IntoIterator<Item = QVector>>(points: I) -> Result<Region> {
    Region::hull(points)
}

/// Minimal lattice points of `λ·Q` inside `[0, B]ⁿ`.
pub fn enumerate_minimal_lattice_points(
    region: &Region,
    scale: &Rational,
    box_bound: u32,
) -> Result<Vec<ExponentVector>> {
    region.minimal_lattice_points(scale, box_bound)
}
