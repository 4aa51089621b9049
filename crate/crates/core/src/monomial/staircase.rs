//! Minimal lattice points by column minima over a prefix grid.
//!
//! A set of lattice points is described by `m(p)`, the least last coordinate
//! above each prefix `p ∈ ℕⁿ⁻¹`. The point `(p, m(p))` is minimal exactly when
//! `m(p)` is smaller than the prefix-minimum `M(p − eⱼ)` for every `j`.

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

const NONE: u32 = u32::MAX;
const GRID_LIMIT: usize = 1 << 22;

/// `⟨normal, u⟩ ≥ rhs` over lattice points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntInequality {
    pub normal: Vec<i64>,
    pub rhs: i64,
}

fn strides(extents: &[usize]) -> Vec<usize> {
    let mut s = vec![1; extents.len()];
    for k in (0..extents.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * extents[k + 1];
    }
    s
}

fn grid_size(extents: &[usize]) -> Option<usize> {
    extents.iter().try_fold(1usize, |acc, &e| acc.checked_mul(e))
}

/// Walks prefixes in lexicographic order, calling `f(index, prefix)`.
fn for_each_prefix(extents: &[usize], mut f: impl FnMut(usize, &[u32])) {
    let size = grid_size(extents).expect("checked by caller");
    let mut p = vec![0u32; extents.len()];
    for idx in 0..size {
        f(idx, &p);
        for k in (0..p.len()).rev() {
            p[k] += 1;
            if (p[k] as usize) < extents[k] {
                break;
            }
            p[k] = 0;
        }
    }
}

fn minimal_from_columns(extents: &[usize], column_min: &[u32]) -> Vec<ExponentVector> {
    let st = strides(extents);
    let mut prefix_min = vec![NONE; column_min.len()];
    let mut out = Vec::new();
    for_each_prefix(extents, |idx, p| {
        let below = (0..p.len())
            .filter(|&j| p[j] > 0)
            .map(|j| prefix_min[idx - st[j]])
            .min()
            .unwrap_or(NONE);
        let m = column_min[idx];
        prefix_min[idx] = m.min(below);
        if m < below {
            let mut u = p.to_vec();
            u.push(m);
            out.push(ExponentVector::new(u));
        }
    });
    out
}

/// The `≤`-minimal lattice points of `{u ∈ [0,B]ⁿ : ⟨aᵢ,u⟩ ≥ bᵢ}` for
/// nonnegative normals `aᵢ`, sorted lexicographically.
pub(crate) fn staircase_from_inequalities(
    dim: usize,
    ineqs: &[IntInequality],
    bound: u32,
) -> Result<Vec<ExponentVector>> {
    let extents = vec![bound as usize + 1; dim - 1];
    let size = grid_size(&extents).filter(|&s| s <= GRID_LIMIT).ok_or(Error::Overflow)?;
    let mut column_min = vec![NONE; size];
    for_each_prefix(&extents, |idx, p| {
        let mut need: i128 = 0;
        for h in ineqs {
            let partial: i128 = p
                .iter()
                .zip(&h.normal)
                .map(|(&x, &a)| x as i128 * a as i128)
                .sum();
            let rest = h.rhs as i128 - partial;
            let last = h.normal[dim - 1] as i128;
            if last == 0 {
                if rest > 0 {
                    return;
                }
            } else if rest > 0 {
                need = need.max((rest + last - 1) / last);
            }
        }
        if need <= bound as i128 {
            column_min[idx] = need as u32;
        }
    });
    Ok(minimal_from_columns(&extents, &column_min))
}

/// The `≤`-minimal elements of `points`, sorted lexicographically.
pub(crate) fn minimal_elements(dim: usize, points: &[ExponentVector]) -> Vec<ExponentVector> {
    if points.is_empty() {
        return Vec::new();
    }
    let extents: Vec<usize> = (0..dim - 1)
        .map(|k| points.iter().map(|u| u[k] as usize).max().unwrap_or(0) + 1)
        .collect();
    match grid_size(&extents) {
        Some(size) if size <= GRID_LIMIT && size <= 64 * points.len().pow(2) => {
            let st = strides(&extents);
            let mut column_min = vec![NONE; size];
            for u in points {
                let idx: usize = (0..dim - 1).map(|k| u[k] as usize * st[k]).sum();
                column_min[idx] = column_min[idx].min(u[dim - 1]);
            }
            minimal_from_columns(&extents, &column_min)
        }
        _ => quadratic_minimal(points),
    }
}

fn quadratic_minimal(points: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut sorted = points.to_vec();
    sorted.sort();
    sorted.dedup();
    // Every point below `u` precedes it lexicographically.
    let mut kept: Vec<ExponentVector> = Vec::new();
    for u in sorted {
        if !kept.iter().any(|g| g.le(&u)) {
            kept.push(u);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn grid_and_quadratic_agree() {
        let pts = vec![ev(&[4, 0]), ev(&[2, 2]), ev(&[3, 1]), ev(&[0, 4]), ev(&[3, 3]), ev(&[2, 2])];
        let expect = vec![ev(&[0, 4]), ev(&[2, 2]), ev(&[3, 1]), ev(&[4, 0])];
        assert_eq!(minimal_elements(2, &pts), expect);
        assert_eq!(quadratic_minimal(&pts), expect);
    }

    #[test]
    fn one_dimensional() {
        assert_eq!(minimal_elements(1, &[ev(&[3]), ev(&[1])]), vec![ev(&[1])]);
        let ineq = IntInequality { normal: vec![2], rhs: 3 };
        assert_eq!(staircase_from_inequalities(1, &[ineq], 5).unwrap(), vec![ev(&[2])]);
    }

    #[test]
    fn simplex_staircase() {
        let ineqs = [
            IntInequality { normal: vec![1, 1, 1], rhs: 2 },
            IntInequality { normal: vec![1, 0, 0], rhs: 0 },
        ];
        let pts = staircase_from_inequalities(3, &ineqs, 3).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|u| u.degree() == 2));
    }
}
