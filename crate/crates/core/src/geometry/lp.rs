//! Exact linear programming over ℚ.
//!
//! A dense two-phase simplex with Bland's rule. Every pivot is exact, so the
//! reported optimum is attained by the reported point and degenerate cycling
//! cannot occur. Problem sizes here are a few dozen rows at most.

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::geometry::vector::QVector;
use crate::rational::Rational;

/// The linear inequality `⟨coeffs, x⟩ ≥ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub coeffs: QVector,
    pub rhs: Rational,
}

impl Constraint {
    pub fn ge(coeffs: QVector, rhs: Rational) -> Self {
        Constraint { coeffs, rhs }
    }

    /// `⟨coeffs, x⟩ ≤ rhs`, stored as its negation.
    pub fn le(coeffs: QVector, rhs: Rational) -> Self {
        Constraint {
            coeffs: coeffs.scale(&-Rational::one()),
            rhs: -rhs,
        }
    }

    /// `⟨coeffs, x⟩ = rhs` as a pair of inequalities.
    pub fn eq(coeffs: QVector, rhs: Rational) -> [Self; 2] {
        [Self::ge(coeffs.clone(), rhs.clone()), Self::le(coeffs, rhs)]
    }

    pub fn holds_at(&self, x: &QVector) -> bool {
        self.coeffs.dot(x) >= self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOptimum {
    pub value: Rational,
    pub point: QVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpOptimum),
    Unbounded,
}

impl LpOutcome {
    pub fn optimum(self) -> Option<LpOptimum> {
        match self {
            LpOutcome::Optimal(o) => Some(o),
            LpOutcome::Unbounded => None,
        }
    }
}

/// Minimize `⟨objective, x⟩` subject to `constraints`, with `x ≥ 0` when
/// `nonneg` is set and `x` free otherwise.
///
/// Infeasibility is reported as [`Error::Infeasible`], unboundedness as
/// [`LpOutcome::Unbounded`].
pub fn lp_minimize(
    objective: &QVector,
    constraints: &[Constraint],
    nonneg: bool,
) -> Result<LpOutcome> {
    let n = objective.dim();
    for c in constraints {
        check_dim(n, c.coeffs.dim())?;
    }
    let mut tableau = Tableau::build(objective, constraints, nonneg);
    tableau.phase_one()?;
    if !tableau.phase_two() {
        return Ok(LpOutcome::Unbounded);
    }
    let raw = tableau.solution();
    let point: Vec<Rational> = if nonneg {
        raw[..n].to_vec()
    } else {
        (0..n).map(|j| &raw[j] - &raw[n + j]).collect()
    };
    let point = QVector::new(point);
    let value = objective.dot(&point);
    Ok(LpOutcome::Optimal(LpOptimum { value, point }))
}

/// Whether the constraint system has a solution.
pub fn lp_feasible(dim: usize, constraints: &[Constraint], nonneg: bool) -> Result<bool> {
    match lp_minimize(&QVector::zeros(dim), constraints, nonneg) {
        Ok(_) => Ok(true),
        Err(Error::Infeasible) => Ok(false),
        Err(e) => Err(e),
    }
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced costs; the last entry is minus the current objective value.
    reduced: Vec<Rational>,
    costs: Vec<Rational>,
    num_structural: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(objective: &QVector, constraints: &[Constraint], nonneg: bool) -> Self {
        let n = objective.dim();
        let m = constraints.len();
        let num_structural = if nonneg { n } else { 2 * n };
        let first_artificial = num_structural + m;
        let width = first_artificial + m;
        let mut rows = Vec::with_capacity(m);
        for (k, c) in constraints.iter().enumerate() {
            let flip = c.rhs.is_negative();
            let sign = |q: &Rational| if flip { -q } else { q.clone() };
            let mut row = vec![Rational::zero(); width + 1];
            for j in 0..n {
                row[j] = sign(&c.coeffs[j]);
                if !nonneg {
                    row[n + j] = -&row[j];
                }
            }
            row[num_structural + k] = if flip { Rational::one() } else { -Rational::one() };
            row[first_artificial + k] = Rational::one();
            row[width] = sign(&c.rhs);
            rows.push(row);
        }
        let mut costs = vec![Rational::zero(); width];
        for j in 0..n {
            costs[j] = objective[j].clone();
            if !nonneg {
                costs[n + j] = -&objective[j];
            }
        }
        Tableau {
            rows,
            basis: (first_artificial..first_artificial + m).collect(),
            reduced: Vec::new(),
            costs,
            num_structural,
            first_artificial,
        }
    }

    fn width(&self) -> usize {
        self.costs.len()
    }

    fn price(&mut self, costs: &[Rational]) {
        let w = self.width();
        let mut reduced: Vec<Rational> = costs.to_vec();
        reduced.push(Rational::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for j in 0..=w {
                if !row[j].is_zero() {
                    let delta = cb * &row[j];
                    reduced[j] -= delta;
                }
            }
        }
        self.reduced = reduced;
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let w = self.width();
        let inv = self.rows[r][c].recip();
        for j in 0..=w {
            if !self.rows[r][j].is_zero() {
                self.rows[r][j] *= &inv;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in 0..=w {
                if !pivot_row[j].is_zero() {
                    row[j] -= &factor * &pivot_row[j];
                }
            }
        }
        if !self.reduced[c].is_zero() {
            let factor = self.reduced[c].clone();
            for j in 0..=w {
                if !pivot_row[j].is_zero() {
                    self.reduced[j] -= &factor * &pivot_row[j];
                }
            }
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations over columns `< limit`. Returns `false` if unbounded.
    fn iterate(&mut self, limit: usize) -> bool {
        let w = self.width();
        loop {
            let Some(entering) = (0..limit).find(|&j| self.reduced[j].is_negative()) else {
                return true;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[entering].is_positive() {
                    continue;
                }
                let ratio = &row[w] / &row[entering];
                let better = match &leaving {
                    None => true,
                    Some((best_i, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*best_i])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((r, _)) => self.pivot(r, entering),
                None => return false,
            }
        }
    }

    fn phase_one(&mut self) -> Result<()> {
        let w = self.width();
        let mut costs = vec![Rational::zero(); w];
        for c in costs.iter_mut().skip(self.first_artificial) {
            *c = Rational::one();
        }
        self.price(&costs);
        // Phase one is bounded below by zero.
        self.iterate(w);
        if !self.reduced[w].is_zero() {
            return Err(Error::Infeasible);
        }
        // Drive remaining artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.first_artificial {
                match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        Ok(())
    }

    fn phase_two(&mut self) -> bool {
        let costs = self.costs.clone();
        self.price(&costs);
        self.iterate(self.first_artificial)
    }

    fn solution(&self) -> Vec<Rational> {
        let w = self.width();
        let mut x = vec![Rational::zero(); self.num_structural];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.num_structural {
                x[b] = row[w].clone();
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> Rational {
        Rational::integer(a)
    }

    fn ge(c: [i64; 2], b: Rational) -> Constraint {
        Constraint::ge(QVector::from_ints(c), b)
    }

    fn opt(outcome: LpOutcome) -> LpOptimum {
        outcome.optimum().expect("bounded")
    }

    #[test]
    fn forced_corner() {
        let o = opt(lp_minimize(
            &QVector::from_ints([1, 1]),
            &[ge([1, 0], q(1)), ge([0, 1], q(1))],
            true,
        )
        .unwrap());
        assert_eq!(o.value, q(2));
        assert_eq!(o.point, QVector::from_ints([1, 1]));
    }

    #[test]
    fn single_constraint_corner() {
        let o = opt(lp_minimize(&QVector::from_ints([1, 2]), &[ge([2, 1], q(1))], true).unwrap());
        assert_eq!(o.value, Rational::new(1, 2));
        assert_eq!(o.point, QVector::new(vec![Rational::new(1, 2), q(0)]));
    }

    #[test]
    fn doubled_constraints() {
        let o = opt(lp_minimize(
            &QVector::from_ints([1, 1]),
            &[ge([2, 0], q(1)), ge([0, 2], q(1))],
            true,
        )
        .unwrap());
        assert_eq!(o.value, q(1));
    }

    #[test]
    fn infeasible_and_unbounded_are_distinct() {
        let infeasible = lp_minimize(
            &QVector::from_ints([1, 1]),
            &[ge([1, 0], q(1)), ge([-1, 0], q(0))],
            true,
        );
        assert_eq!(infeasible, Err(Error::Infeasible));
        let unbounded = lp_minimize(&QVector::from_ints([-1, 0]), &[ge([1, 0], q(1))], true);
        assert_eq!(unbounded, Ok(LpOutcome::Unbounded));
    }

    #[test]
    fn free_variables() {
        // minimize x subject to x ≥ -3, free.
        let o = opt(lp_minimize(
            &QVector::from_ints([1]),
            &[Constraint::ge(QVector::from_ints([1]), q(-3))],
            false,
        )
        .unwrap());
        assert_eq!(o.value, q(-3));
        let unbounded = lp_minimize(&QVector::from_ints([1]), &[], false).unwrap();
        assert_eq!(unbounded, LpOutcome::Unbounded);
    }

    #[test]
    fn equality_constraints_and_redundant_rows() {
        // x + y = 1 twice, minimize x - y over x, y ≥ 0.
        let mut cs = Vec::new();
        cs.extend(Constraint::eq(QVector::from_ints([1, 1]), q(1)));
        cs.extend(Constraint::eq(QVector::from_ints([2, 2]), q(2)));
        let o = opt(lp_minimize(&QVector::from_ints([1, -1]), &cs, true).unwrap());
        assert_eq!(o.value, q(-1));
        assert_eq!(o.point, QVector::from_ints([0, 1]));
    }

    #[test]
    fn dimension_mismatch() {
        let r = lp_minimize(&QVector::from_ints([1, 1]), &[ge([1, 0], q(1)), Constraint::ge(QVector::from_ints([1]), q(0))], true);
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }
}
