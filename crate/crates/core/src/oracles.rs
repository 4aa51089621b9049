//! Brute-force computations used to certify the closed forms.
//!
//! These are deliberately naive and share no code path with the staircase
//! and support-function routines they check.

use crate::error::{check_dim, Error, Result};
use crate::filtration::Filtration;
use crate::geometry::linalg::{combinations, solve_square};
use crate::geometry::{lp_minimize, Constraint, LpOutcome, QVector};
use crate::monomial::{minimal_generators, ExponentVector, MonomialIdeal};
use crate::rational::Rational;
use crate::valuation::WeightVector;

/// `v_w(𝔞_m)/m` for `m = 1, …, m_max`.
///
/// ```
/// use toric_bdiv::{Filtration, Rational, WeightVector};
/// use toric_bdiv::oracles::fekete_estimate;
///
/// let f = Filtration::valuation(WeightVector::from_ints([2, 1]).unwrap()).unwrap();
/// let w = WeightVector::from_ints([1, 2]).unwrap();
/// let seq: Vec<Rational> = fekete_estimate(&f, &w, 4).unwrap().into_iter().map(|(_, v)| v).collect();
/// assert_eq!(seq, [Rational::new(1, 1), Rational::new(1, 2), Rational::new(2, 3), Rational::new(1, 2)]);
/// ```
pub fn fekete_estimate(f: &Filtration, w: &WeightVector, m_max: u32) -> Result<Vec<(u32, Rational)>> {
    check_dim(f.dim(), w.dim())?;
    if m_max == 0 {
        return Err(Error::NonPositive("m_max"));
    }
    (1..=m_max)
        .map(|m| {
            let a = f.ideal_at(&Rational::from(m as i64))?;
            Ok((m, w.value_of_ideal(&a)? / Rational::from(m as i64)))
        })
        .collect()
}

/// The interior grid `{k/|k|₁ : k ∈ {1,…,r}ⁿ}` of the open weight simplex.
pub fn simplex_grid(dim: usize, r: u32) -> Vec<QVector> {
    let r = r.max(1);
    let mut out = Vec::new();
    let mut k = vec![1i64; dim];
    loop {
        let total: i64 = k.iter().sum();
        out.push(QVector::new(k.iter().map(|&x| Rational::new(x, total)).collect()));
        let mut i = 0;
        while i < dim {
            k[i] += 1;
            if k[i] <= r as i64 {
                break;
            }
            k[i] = 1;
            i += 1;
        }
        if i == dim {
            break;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The least value of `target` over [`simplex_grid`], with its argmin.
/// Points where `target` is undefined are skipped.
///
/// ```
/// use toric_bdiv::{QVector, Rational};
/// use toric_bdiv::oracles::grid_infimum;
///
/// let ratio = |w: &QVector| Some((&w[0] + &w[1]) / (Rational::integer(2) * w[0].clone().min(w[1].clone())));
/// let (value, _) = grid_infimum(2, 2, ratio).unwrap();
/// assert_eq!(value, Rational::one());
/// ```
pub fn grid_infimum(
    dim: usize,
    r: u32,
    target: impl Fn(&QVector) -> Option<Rational>,
) -> Result<(Rational, QVector)> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if r == 0 {
        return Err(Error::NonPositive("grid resolution"));
    }
    simplex_grid(dim, r)
        .into_iter()
        .filter_map(|w| target(&w).map(|v| (v, w)))
        .min_by(|a, b| a.0.cmp(&b.0))
        .ok_or(Error::EmptyInput("grid values"))
}

/// `min ⟨objective, x⟩` over `{x ≥ 0 : constraints}` by enumerating every
/// intersection of `n` tight constraints. Returns `None` when there is no
/// feasible vertex.
pub fn vertex_enumeration_minimum(
    objective: &QVector,
    constraints: &[Constraint],
) -> Result<Option<Rational>> {
    let n = objective.dim();
    let mut all: Vec<Constraint> = constraints.to_vec();
    for c in &all {
        check_dim(n, c.coeffs.dim())?;
    }
    all.extend((0..n).map(|i| Constraint::ge(QVector::axis(n, i, Rational::one()), Rational::zero())));
    let mut best: Option<Rational> = None;
    for combo in combinations(all.len(), n) {
        let rows: Vec<Vec<Rational>> = combo.iter().map(|&k| all[k].coeffs.entries().to_vec()).collect();
        let rhs: Vec<Rational> = combo.iter().map(|&k| all[k].rhs.clone()).collect();
        let Some(x) = solve_square(&rows, &rhs) else { continue };
        let x = QVector::new(x);
        if all.iter().all(|c| c.holds_at(&x)) {
            let v = objective.dot(&x);
            best = Some(match best {
                Some(b) => b.min(v),
                None => v,
            });
        }
    }
    Ok(best)
}

/// Whether some `w ≥ 0` has `⟨w,u⟩ < λ·min_c ⟨w,c⟩` over `vertices`.
fn valuatively_excluded(vertices: &[QVector], lambda: &Rational, u: &QVector) -> Result<bool> {
    // Variables (w, t) with Σw = 1 and t ≤ ⟨w,c⟩; minimize ⟨w,u⟩ − λt.
    let n = u.dim();
    let lift = |w: &QVector, t: Rational| {
        let mut e = w.entries().to_vec();
        e.push(t);
        QVector::new(e)
    };
    let mut cs: Vec<Constraint> = Constraint::eq(lift(&QVector::ones(n), Rational::zero()), Rational::one()).to_vec();
    for c in vertices {
        cs.push(Constraint::ge(lift(c, -Rational::one()), Rational::zero()));
    }
    let objective = lift(u, -lambda.clone());
    match lp_minimize(&objective, &cs, true)? {
        LpOutcome::Optimal(o) => Ok(o.value.is_negative()),
        LpOutcome::Unbounded => Err(Error::Internal("saturation LP unbounded".into())),
    }
}

/// The saturation of `f` at `λ`, found by testing every lattice point of
/// `[0, box]ⁿ` against all weights at once.
///
/// ```
/// use toric_bdiv::{Filtration, MonomialIdeal, Rational};
/// use toric_bdiv::oracles::saturation_oracle;
///
/// let b = MonomialIdeal::new(2, [[2, 0], [0, 2]]).unwrap();
/// let f = Filtration::ideal_power(b).unwrap();
/// let a = saturation_oracle(&f, &Rational::one(), 4).unwrap();
/// assert_eq!(a, MonomialIdeal::new(2, [[2, 0], [1, 1], [0, 2]]).unwrap());
/// ```
pub fn saturation_oracle(f: &Filtration, lambda: &Rational, box_bound: u32) -> Result<MonomialIdeal> {
    if !lambda.is_positive() {
        return Err(Error::NonPositive("lambda"));
    }
    let q = f.asymptotic_region();
    let required = match q.max_axis_intercept() {
        Some(c) => (c * lambda).ceil_u32()?,
        None => return Err(Error::NotMPrimary),
    };
    if box_bound < required {
        return Err(Error::InsufficientBox { required, given: box_bound });
    }
    let n = f.dim();
    let mut members = Vec::new();
    let mut u = vec![0u32; n];
    loop {
        let e = ExponentVector::new(u.clone());
        if !valuatively_excluded(q.vertices(), lambda, &e.to_qvector())? {
            members.push(e);
        }
        let mut i = 0;
        while i < n {
            u[i] += 1;
            if u[i] <= box_bound {
                break;
            }
            u[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    minimal_generators(n, members)
}

/// Whether `u` lies in the `k`-th power of `b`, by expanding all products.
pub fn power_membership(b: &MonomialIdeal, k: u32, u: &ExponentVector) -> Result<bool> {
    check_dim(b.dim(), u.dim())?;
    let mut layer = vec![ExponentVector::zeros(b.dim())];
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &layer {
            for g in b.generators() {
                let s = p.checked_add(g)?;
                if s.le(u) && !next.contains(&s) {
                    next.push(s);
                }
            }
        }
        layer = next;
    }
    Ok(layer.iter().any(|p| p.le(u)))
}
