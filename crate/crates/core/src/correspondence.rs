//! Machine-checkable instances of the filtration/b-divisor correspondence.
//!
//! Each check returns a [`CheckReport`] whose witnesses can be re-checked
//! independently: a monomial with the level where two ideals differ, or a
//! weight where two divisors differ.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bdivisor::{Boundedness, RayWitness, ToricBDivisor, Verdict};
use crate::error::{check_dim, Error, Result};
use crate::filtration::{Filtration, SaturationCheck};
use crate::geometry::{lp_minimize, Constraint, LpOutcome, QVector};
use crate::monomial::{ExponentVector, MonomialIdeal, Polynomial};
use crate::rational::{Extended, Rational};
use crate::valuation::WeightVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckVerdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A generator of `left` missing from `right` at level `lambda`.
    Monomial { lambda: Rational, exponent: ExponentVector, left: String, right: String },
    /// A weight where two divisors take different values.
    Ray { ray: QVector, left: Rational, right: Rational },
}

impl From<RayWitness> for Witness {
    fn from(r: RayWitness) -> Self {
        Witness::Ray { ray: r.ray, left: r.left, right: r.right }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub verdict: CheckVerdict,
    pub values: BTreeMap<String, String>,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            verdict: CheckVerdict::Pass,
            values: BTreeMap::new(),
            witnesses: Vec::new(),
        }
    }

    fn set(&mut self, key: &str, value: impl ToString) {
        self.values.insert(key.to_string(), value.to_string());
    }

    pub fn passed(&self) -> bool {
        self.verdict == CheckVerdict::Pass
    }
}

/// The first level and generator where `a` and `b` differ.
fn ideal_difference(
    lambda: &Rational,
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    names: (&str, &str),
) -> Result<Option<Witness>> {
    let mk = |exponent, left: &str, right: &str| Witness::Monomial {
        lambda: lambda.clone(),
        exponent,
        left: left.to_string(),
        right: right.to_string(),
    };
    if let Some(u) = a.generator_outside(b)? {
        return Ok(Some(mk(u, names.0, names.1)));
    }
    Ok(b.generator_outside(a)?.map(|u| mk(u, names.1, names.0)))
}

fn lambda_list(lambdas: &[Rational]) -> String {
    lambdas.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// `𝔞_•(Z(F)) = F̃` on `lambdas`, and `= F` when `F` is saturated.
///
/// ```
/// use toric_bdiv::{Filtration, MonomialIdeal, Rational};
/// use toric_bdiv::correspondence::check_saturated_roundtrip;
///
/// let b = MonomialIdeal::new(2, [[2, 0], [0, 2]]).unwrap();
/// let f = Filtration::ideal_power(b).unwrap();
/// let report = check_saturated_roundtrip(&f, &[Rational::one()]).unwrap();
/// assert!(report.passed());
/// assert_eq!(report.values["equals_input"], "false");
/// ```
pub fn check_saturated_roundtrip(f: &Filtration, lambdas: &[Rational]) -> Result<CheckReport> {
    if lambdas.is_empty() {
        return Err(Error::EmptyInput("lambda samples"));
    }
    let mut report = CheckReport::new("saturated_roundtrip");
    let extracted = ToricBDivisor::z_of_filtration(f).extract_filtration()?;
    let saturated = f.saturate();
    let mut equals_input = true;
    for lambda in lambdas {
        let a = extracted.ideal_at(lambda)?;
        if let Some(w) = ideal_difference(lambda, &a, &saturated.ideal_at(lambda)?, ("extracted", "saturation"))? {
            report.verdict = CheckVerdict::Fail;
            report.witnesses.push(w);
        }
        if equals_input {
            if let Some(w) = ideal_difference(lambda, &a, &f.ideal_at(lambda)?, ("extracted", "input"))? {
                equals_input = false;
                report.witnesses.push(w);
            }
        }
    }
    let saturated_input = f.is_saturated(lambdas)?.is_saturated();
    if saturated_input && !equals_input {
        report.verdict = CheckVerdict::Fail;
    }
    report.set("lambdas", lambda_list(lambdas));
    report.set("input_saturated", saturated_input);
    report.set("equals_input", equals_input);
    Ok(report)
}

/// `Z(𝔞_•(W)) ≤ W` for `W` in `Div^b`, with the rays where it is strict.
pub fn check_extraction_inequality(w: &ToricBDivisor) -> Result<CheckReport> {
    let (epsilon, c) = match w.boundedness_constants()? {
        Boundedness::Bounded { epsilon, c } => (epsilon, c),
        Boundedness::BoundedBelow { .. } => return Err(Error::NotBounded),
        Boundedness::NotAntiEffective { .. } => return Err(Error::NotAntiEffective),
        Boundedness::UnboundedBelow => return Err(Error::UnboundedBelow),
        Boundedness::DegenerateZero => return Err(Error::DegenerateZero),
    };
    let mut report = CheckReport::new("extraction_inequality");
    let extracted = w.extract_filtration()?;
    let z = ToricBDivisor::z_of_filtration(&extracted);
    let cmp = z.compare(w)?;
    if !cmp.is_le() {
        report.verdict = CheckVerdict::Fail;
    }
    report.set("epsilon", epsilon);
    report.set("c", c);
    report.set("comparison", verdict_name(cmp.verdict));
    report.set(
        "extracted_region",
        extracted.asymptotic_region().vertices().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
    );
    report.witnesses = cmp.witnesses.into_iter().map(Witness::from).collect();
    Ok(report)
}

/// A full-support weight separating two distinct regions.
fn separating_weight(f: &Filtration, g: &Filtration) -> Result<Option<WeightVector>> {
    let (qf, qg) = (f.asymptotic_region(), g.asymptotic_region());
    let n = f.dim();
    let mut candidates = vec![QVector::ones(n)];
    candidates.extend(qf.facets().iter().chain(qg.facets()).map(|h| h.normal_vector()));
    for normal in candidates {
        let mut t = Rational::zero();
        for _ in 0..64 {
            if t.is_zero() && !normal.iter().all(Rational::is_positive) {
                t = Rational::one();
            }
            let w = WeightVector::new(normal.add(&QVector::ones(n).scale(&t)))?;
            if f.asymptotic_value(&w)? != g.asymptotic_value(&w)? {
                return Ok(Some(w));
            }
            t = if t.is_zero() { Rational::one() } else { t * Rational::new(1, 2) };
        }
    }
    Ok(None)
}

/// Two saturated filtrations agree exactly when their divisors agree.
pub fn check_injectivity(f: &Filtration, g: &Filtration, lambdas: &[Rational]) -> Result<CheckReport> {
    check_dim(f.dim(), g.dim())?;
    for h in [f, g] {
        if let SaturationCheck::NotSaturated { lambda, witness } = h.is_saturated(lambdas)? {
            return Err(Error::NotSaturated { lambda, witness });
        }
    }
    let mut report = CheckReport::new("injectivity");
    report.set("lambdas", lambda_list(lambdas));
    if f.asymptotic_region() != g.asymptotic_region() {
        report.set("divisors", "distinct");
        let w = separating_weight(f, g)?.ok_or_else(|| Error::Internal("no separating weight".into()))?;
        report.witnesses.push(Witness::Ray {
            ray: w.as_qvector().clone(),
            left: -f.asymptotic_value(&w)?,
            right: -g.asymptotic_value(&w)?,
        });
        return Ok(report);
    }
    report.set("divisors", "equal");
    for lambda in lambdas {
        if let Some(w) = ideal_difference(lambda, &f.ideal_at(lambda)?, &g.ideal_at(lambda)?, ("left", "right"))? {
            report.verdict = CheckVerdict::Fail;
            report.witnesses.push(w);
        }
    }
    Ok(report)
}

/// `inf v_{w′}(f) / v_{w′}(𝔞_•(v_w))` over `w′ ≥ 0` with `supp w′ ⊇ supp w`,
/// restricted to `supp w′ = supp w` when `exact_support` is set.
fn ratio_infimum(w: &WeightVector, f: &Polynomial, exact_support: bool) -> Result<Rational> {
    let n = w.dim();
    let mut cs = Vec::new();
    for i in 0..n {
        let e = QVector::axis(n, i, Rational::one());
        if w.as_qvector()[i].is_positive() {
            cs.push(Constraint::ge(e, w.as_qvector()[i].clone()));
        } else if exact_support {
            cs.push(Constraint::le(e, Rational::zero()));
        }
    }
    let mut best: Option<Rational> = None;
    for u in f.support() {
        let v = match lp_minimize(&u.to_qvector(), &cs, true)? {
            LpOutcome::Optimal(o) => o.value,
            LpOutcome::Unbounded => return Err(Error::Internal("ratio LP unbounded".into())),
        };
        best = Some(best.map_or(v.clone(), |b| b.min(v)));
    }
    best.ok_or(Error::ZeroPolynomial)
}

/// `v_w(f) = ord_{Z(v_w)}(f)`, for weights of any support.
///
/// ```
/// use toric_bdiv::{Polynomial, WeightVector};
/// use toric_bdiv::correspondence::b_divisoriality;
///
/// let w = WeightVector::from_ints([1, 0]).unwrap();
/// let f = Polynomial::parse("x^2*y", 2).unwrap();
/// let report = b_divisoriality(&w, &f).unwrap();
/// assert!(report.passed());
/// assert_eq!(report.values["order"], "2");
/// ```
pub fn b_divisoriality(w: &WeightVector, f: &Polynomial) -> Result<CheckReport> {
    check_dim(w.dim(), f.dim())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut report = CheckReport::new("b_divisoriality");
    let value = match w.value_of_polynomial(f)? {
        Extended::Finite(v) => v,
        Extended::Infinity => return Err(Error::ZeroPolynomial),
    };
    let order = ratio_infimum(w, f, false)?;
    // φ(w) = −min_{i ∈ supp w} wᵢ/wᵢ.
    let z_at_w = -Rational::one();
    if w.has_full_support() {
        let z = ToricBDivisor::z_of_filtration(&Filtration::valuation(w.clone())?);
        let via = z.vanishing_order(f)?;
        if via != order {
            report.verdict = CheckVerdict::Fail;
        }
        report.set("order_via_divisor", via);
    }
    if value != order || z_at_w.is_zero() {
        report.verdict = CheckVerdict::Fail;
    }
    report.set("center", w.center());
    report.set("value", value);
    report.set("order", order);
    report.set("z_at_w", z_at_w);
    Ok(report)
}

/// The infimum over `supp w′ = supp w` is at least the one over `supp w′ ⊇ supp w`.
pub fn main_inequality(w: &WeightVector, f: &Polynomial) -> Result<CheckReport> {
    check_dim(w.dim(), f.dim())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut report = CheckReport::new("main_inequality");
    let lhs = ratio_infimum(w, f, true)?;
    let rhs = ratio_infimum(w, f, false)?;
    if lhs < rhs {
        report.verdict = CheckVerdict::Fail;
    }
    report.set("lhs", lhs);
    report.set("rhs", rhs);
    Ok(report)
}

/// `ord_{Z(F)}(f) ≥ ord_F(f)`, with equality against the saturation.
pub fn check_vanishing_order(f: &Filtration, p: &Polynomial) -> Result<CheckReport> {
    let mut report = CheckReport::new("vanishing_order");
    let order = ToricBDivisor::z_of_filtration(f).vanishing_order(p)?;
    let norm = f.norm_value(p)?;
    let saturated = f.saturate().norm_value(p)?;
    if Extended::Finite(order.clone()) < norm || Extended::Finite(order.clone()) != saturated {
        report.verdict = CheckVerdict::Fail;
    }
    let show = |e: &Extended| e.clone().finite().map_or("inf".to_string(), |v| v.to_string());
    report.set("divisor_order", &order);
    report.set("norm", show(&norm));
    report.set("saturated_norm", show(&saturated));
    Ok(report)
}

/// Renders a verdict as `equal`, `less`, `greater` or `incomparable`.
pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Equal => "equal",
        Verdict::Less => "less",
        Verdict::Greater => "greater",
        Verdict::Incomparable => "incomparable",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Region;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    fn lambdas() -> Vec<Rational> {
        vec![q(1, 2), q(1, 1), q(2, 1), q(3, 1)]
    }

    fn val(a: i64, b: i64) -> Filtration {
        Filtration::valuation(WeightVector::from_ints([a, b]).unwrap()).unwrap()
    }

    fn region(v: &[[i64; 2]]) -> Filtration {
        Filtration::region(Region::hull(v.iter().map(|&p| QVector::from_ints(p))).unwrap()).unwrap()
    }

    fn x2y2() -> Filtration {
        Filtration::ideal_power(MonomialIdeal::new(2, [[2, 0], [0, 2]]).unwrap()).unwrap()
    }

    #[test]
    fn roundtrip_examples() {
        let r = check_saturated_roundtrip(&val(1, 2), &lambdas()).unwrap();
        assert!(r.passed());
        assert_eq!(r.values["equals_input"], "true");
        assert!(check_saturated_roundtrip(&region(&[[2, 0], [0, 2]]), &lambdas()).unwrap().passed());
        assert!(check_saturated_roundtrip(&x2y2(), &lambdas()).unwrap().passed());
        let r = check_saturated_roundtrip(&x2y2(), &[q(1, 1)]).unwrap();
        assert!(r.passed());
        assert_eq!(r.values["input_saturated"], "false");
        assert_eq!(
            r.witnesses[0],
            Witness::Monomial {
                lambda: q(1, 1),
                exponent: ExponentVector::from([1, 1]),
                left: "extracted".into(),
                right: "input".into()
            }
        );
    }

    #[test]
    fn extraction_examples() {
        let r = check_extraction_inequality(&ToricBDivisor::z_m(2).unwrap()).unwrap();
        assert!(r.passed());
        assert_eq!(r.values["comparison"], "equal");
        let star = ToricBDivisor::fan_pl(
            vec![[1, 0], [2, 1], [1, 1], [1, 2], [0, 1]],
            vec![q(0, 1), q(-1, 1), q(-6, 5), q(-1, 1), q(0, 1)],
        )
        .unwrap();
        let r = check_extraction_inequality(&star).unwrap();
        assert!(r.passed());
        assert_eq!(r.values["comparison"], "less");
        assert!(r.witnesses.contains(&Witness::Ray { ray: QVector::from_ints([2, 1]), left: q(-6, 5), right: q(-1, 1) }));
        let b = MonomialIdeal::new(2, [[2, 0], [1, 1], [0, 3]]).unwrap();
        let r = check_extraction_inequality(&ToricBDivisor::z_of_ideal(&b).unwrap()).unwrap();
        assert_eq!(r.values["comparison"], "equal");
    }

    #[test]
    fn injectivity_examples() {
        let r = check_injectivity(&val(1, 1), &val(1, 2), &lambdas()).unwrap();
        assert_eq!(r.values["divisors"], "distinct");
        assert_eq!(
            r.witnesses,
            vec![Witness::Ray { ray: QVector::new(vec![q(1, 1), q(1, 1)]), left: q(-1, 1), right: q(-1, 2) }]
        );
        let r = check_injectivity(&val(1, 2), &val(1, 2), &lambdas()).unwrap();
        assert_eq!(r.values["divisors"], "equal");
        assert!(r.passed());
        let e = check_injectivity(&x2y2(), &region(&[[2, 0], [0, 2]]), &[q(1, 1)]).unwrap_err();
        assert_eq!(e, Error::NotSaturated { lambda: q(1, 1), witness: ExponentVector::from([1, 1]) });
    }

    #[test]
    fn b_divisoriality_examples() {
        for (w, f, v) in [([1, 1], "x^2*y", 3), ([1, 0], "x^2*y", 2), ([2, 3], "x + y^2", 2)] {
            let w = WeightVector::from_ints(w).unwrap();
            let r = b_divisoriality(&w, &Polynomial::parse(f, 2).unwrap()).unwrap();
            assert!(r.passed());
            assert_eq!(r.values["value"], v.to_string());
            assert_eq!(r.values["order"], v.to_string());
        }
    }

    #[test]
    fn main_inequality_examples() {
        let w = WeightVector::from_ints([1, 0]).unwrap();
        for (f, v) in [("x^2*y", "2"), ("y", "0")] {
            let r = main_inequality(&w, &Polynomial::parse(f, 2).unwrap()).unwrap();
            assert!(r.passed());
            assert_eq!((r.values["lhs"].as_str(), r.values["rhs"].as_str()), (v, v));
        }
        let r = main_inequality(&WeightVector::ones(2).unwrap(), &Polynomial::parse("x^3 + x*y^2", 2).unwrap()).unwrap();
        assert_eq!(r.values["lhs"], "3");
        assert_eq!(r.values["rhs"], "3");
    }

    #[test]
    fn vanishing_order_against_norm() {
        let p = Polynomial::parse("x*y", 2).unwrap();
        let r = check_vanishing_order(&x2y2(), &p).unwrap();
        assert!(r.passed());
        assert_eq!(r.values["divisor_order"], "1");
        assert_eq!(r.values["norm"], "0");
    }
}
