//! `𝔪`-filtrations `λ ↦ 𝔞_λ` with exactly computable ideals, asymptotic
//! values, saturation and the induced order function.

use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bdivisor::{Extraction, ToricBDivisor};
use crate::error::{check_dim, Error, Result};
use crate::geometry::{QVector, Region};
use crate::monomial::staircase::staircase_from_inequalities;
use crate::monomial::{ExponentVector, MonomialIdeal, Polynomial};
use crate::rational::{Extended, Rational};
use crate::valuation::WeightVector;

/// The constructors of a [`Filtration`].
#[derive(Clone, Debug)]
pub enum FiltrationKind {
    /// `𝔞_λ = b^⌈λ⌉`.
    IdealPower(MonomialIdeal),
    /// `𝔞_λ = ⟨xᵘ : ⟨w,u⟩ ≥ λ⟩`.
    Valuation(WeightVector),
    /// `𝔞_λ = ⟨λQ ∩ ℕⁿ⟩`.
    Region(Region),
    /// `𝔞_λ = F_{cλ}`.
    Scale(Rational, Filtration),
    /// `𝔞_λ = F_λ ∩ G_λ`.
    Intersect(Filtration, Filtration),
    /// `𝔞_λ = 𝔞_λ(W)` for a b-divisor `W` bounded below.
    Extracted(Extraction),
}

struct Node {
    kind: FiltrationKind,
    region: Region,
    powers: Mutex<Vec<MonomialIdeal>>,
}

/// A decreasing, left-continuous, multiplicative family of `𝔪`-primary
/// monomial ideals. Cheap to clone.
///
/// ```
/// use toric_bdiv::{Filtration, MonomialIdeal, Rational};
///
/// let f = Filtration::ideal_power(MonomialIdeal::new(2, [[2, 0], [0, 2]]).unwrap()).unwrap();
/// let sat = f.saturate();
/// let a1 = sat.ideal_at(&Rational::one()).unwrap();
/// assert_eq!(a1, MonomialIdeal::new(2, [[2, 0], [1, 1], [0, 2]]).unwrap());
/// ```
#[derive(Clone)]
pub struct Filtration(Arc<Node>);

/// Whether an asymptotic value came from a closed form or from an
/// intersected region, whose agreement with the limit is certified by the
/// oracle suite only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueSource {
    ClosedForm,
    OracleCertified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticValue {
    pub value: Rational,
    pub source: ValueSource,
}

/// Outcome of [`Filtration::is_saturated`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SaturationCheck {
    Saturated,
    /// `witness ∈ 𝔞̃_λ \ 𝔞_λ`.
    NotSaturated { lambda: Rational, witness: ExponentVector },
}

impl SaturationCheck {
    pub fn is_saturated(&self) -> bool {
        matches!(self, SaturationCheck::Saturated)
    }
}

impl Filtration {
    fn from_kind(kind: FiltrationKind, region: Region) -> Self {
        Filtration(Arc::new(Node { kind, region, powers: Mutex::new(Vec::new()) }))
    }

    /// Powers `b^⌈λ⌉` of an `𝔪`-primary ideal.
    pub fn ideal_power(b: MonomialIdeal) -> Result<Self> {
        if !b.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        let region = b.newton_region()?;
        Ok(Self::from_kind(FiltrationKind::IdealPower(b), region))
    }

    /// The valuation ideals of a full-support weight.
    pub fn valuation(w: WeightVector) -> Result<Self> {
        w.require_full_support()?;
        let n = w.dim();
        let region = Region::hull(
            (0..n).map(|i| QVector::axis(n, i, w.as_qvector()[i].recip())),
        )?;
        Ok(Self::from_kind(FiltrationKind::Valuation(w), region))
    }

    /// The lattice points of the dilates `λQ` of an `𝔪`-primary region.
    pub fn region(q: Region) -> Result<Self> {
        if !q.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        Ok(Self::from_kind(FiltrationKind::Region(q.clone()), q))
    }

    pub fn scale(c: Rational, inner: Filtration) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NonPositive("scale factor"));
        }
        let region = inner.asymptotic_region().scale(&c)?;
        Ok(Self::from_kind(FiltrationKind::Scale(c, inner), region))
    }

    pub fn intersect(left: Filtration, right: Filtration) -> Result<Self> {
        check_dim(left.dim(), right.dim())?;
        let region = left.asymptotic_region().intersection(right.asymptotic_region())?;
        Ok(Self::from_kind(FiltrationKind::Intersect(left, right), region))
    }

    pub(crate) fn extracted(e: Extraction) -> Self {
        let region = e.region().clone();
        Self::from_kind(FiltrationKind::Extracted(e), region)
    }

    pub fn kind(&self) -> &FiltrationKind {
        &self.0.kind
    }

    pub fn dim(&self) -> usize {
        self.0.region.dim()
    }

    fn cached_power(&self, b: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
        let mut powers = self.0.powers.lock().unwrap_or_else(|e| e.into_inner());
        if powers.is_empty() {
            powers.push(MonomialIdeal::unit(b.dim()));
        }
        while powers.len() <= k as usize {
            let next = powers.last().expect("nonempty").product(b)?;
            powers.push(next);
        }
        Ok(powers[k as usize].clone())
    }

    /// `𝔞_λ`, with `𝔞_0 = R`.
    pub fn ideal_at(&self, lambda: &Rational) -> Result<MonomialIdeal> {
        if lambda.is_negative() {
            return Err(Error::NonPositive("filtration index"));
        }
        if lambda.is_zero() {
            return Ok(MonomialIdeal::unit(self.dim()));
        }
        match self.kind() {
            FiltrationKind::IdealPower(b) => self.cached_power(b, lambda.ceil_u32()?),
            FiltrationKind::Valuation(_) | FiltrationKind::Region(_) => {
                lattice_ideal(&self.0.region, lambda)
            }
            FiltrationKind::Scale(c, inner) => inner.ideal_at(&(c * lambda)),
            FiltrationKind::Intersect(f, g) => f.ideal_at(lambda)?.intersection(&g.ideal_at(lambda)?),
            FiltrationKind::Extracted(e) => {
                let ineqs = e
                    .halfspaces()
                    .iter()
                    .map(|h| h.integer_at(lambda))
                    .collect::<Result<Vec<_>>>()?;
                let bound = (e.lower_constant() * lambda).ceil_u32()?.max(1);
                let gens = staircase_from_inequalities(self.dim(), &ineqs, bound)?;
                MonomialIdeal::new(self.dim(), gens)
            }
        }
    }

    /// The region `Q(F)` whose support function is `w ↦ v_w(𝔞_•)`.
    pub fn asymptotic_region(&self) -> &Region {
        &self.0.region
    }

    /// `v_w(𝔞_•) = lim v_w(𝔞_m)/m`.
    pub fn asymptotic_value(&self, w: &WeightVector) -> Result<Rational> {
        Ok(self.asymptotic_value_with_source(w)?.value)
    }

    pub fn asymptotic_value_with_source(&self, w: &WeightVector) -> Result<AsymptoticValue> {
        check_dim(self.dim(), w.dim())?;
        let closed = |value| Ok(AsymptoticValue { value, source: ValueSource::ClosedForm });
        match self.kind() {
            FiltrationKind::IdealPower(b) => closed(w.value_of_ideal(b)?),
            FiltrationKind::Valuation(v) => {
                let (a, b) = (w.as_qvector(), v.as_qvector());
                closed((0..w.dim()).map(|i| &a[i] / &b[i]).min().expect("dim ≥ 1"))
            }
            FiltrationKind::Region(q) => closed(q.support(w.as_qvector())),
            FiltrationKind::Scale(c, inner) => {
                let inner = inner.asymptotic_value_with_source(w)?;
                Ok(AsymptoticValue { value: c * &inner.value, source: inner.source })
            }
            FiltrationKind::Intersect(..) => Ok(AsymptoticValue {
                value: self.0.region.support(w.as_qvector()),
                source: ValueSource::OracleCertified,
            }),
            FiltrationKind::Extracted(_) => closed(self.0.region.support(w.as_qvector())),
        }
    }

    /// The saturation `𝔞̃_•`, the region filtration of `Q(F)`.
    pub fn saturate(&self) -> Filtration {
        match self.kind() {
            FiltrationKind::Region(_) => self.clone(),
            _ => Filtration::region(self.0.region.clone()).expect("asymptotic regions are m-primary"),
        }
    }

    /// Compares `𝔞_λ` with `𝔞̃_λ` at every sampled `λ`.
    pub fn is_saturated(&self, lambdas: &[Rational]) -> Result<SaturationCheck> {
        if lambdas.is_empty() {
            return Err(Error::EmptyInput("lambda samples"));
        }
        let sat = self.saturate();
        for lambda in lambdas {
            let a = self.ideal_at(lambda)?;
            let s = sat.ideal_at(lambda)?;
            let witness = match s.generator_outside(&a)? {
                Some(u) => Some(u),
                None => a.generator_outside(&s)?,
            };
            if let Some(witness) = witness {
                return Ok(SaturationCheck::NotSaturated { lambda: lambda.clone(), witness });
            }
        }
        Ok(SaturationCheck::Saturated)
    }

    /// `sup {λ : xᵘ ∈ 𝔞_λ}`.
    pub fn order_of_exponent(&self, u: &ExponentVector) -> Result<Extended> {
        check_dim(self.dim(), u.dim())?;
        match self.kind() {
            FiltrationKind::IdealPower(b) => {
                let d = b.order().expect("m-primary ideals are nonzero");
                let mut k = 0;
                while (k as u64 + 1) * d <= u.degree() && self.cached_power(b, k + 1)?.contains(u)? {
                    k += 1;
                }
                Ok(Extended::Finite(Rational::from(k)))
            }
            FiltrationKind::Valuation(w) => Ok(Extended::Finite(w.value_of_exponent(u))),
            FiltrationKind::Region(_) | FiltrationKind::Extracted(_) => {
                self.0.region.gauge(&u.to_qvector())
            }
            FiltrationKind::Scale(c, inner) => Ok(match inner.order_of_exponent(u)? {
                Extended::Finite(t) => Extended::Finite(t / c.clone()),
                Extended::Infinity => Extended::Infinity,
            }),
            FiltrationKind::Intersect(f, g) => {
                Ok(f.order_of_exponent(u)?.min(g.order_of_exponent(u)?))
            }
        }
    }

    /// `ord_{𝔞_•}(f) = sup {λ : f ∈ 𝔞_λ}`, `+∞` for `f = 0`.
    pub fn norm_value(&self, f: &Polynomial) -> Result<Extended> {
        check_dim(self.dim(), f.dim())?;
        let mut best = Extended::Infinity;
        for u in f.support() {
            best = best.min(self.order_of_exponent(u)?);
        }
        Ok(best)
    }

    /// Constants `(ε, C)` with `𝔪^⌈Cλ⌉ ⊆ 𝔞_λ ⊆ 𝔪^⌈ελ⌉`.
    ///
    /// For saturated constructors the containments hold at every `λ > 0`.
    /// Ideal powers jump only at integers, so for them (and their scalings)
    /// the left containment is guaranteed at integer `cλ`.
    pub fn linear_boundedness(&self) -> (Rational, Rational) {
        match self.kind() {
            FiltrationKind::IdealPower(b) => {
                let d = Rational::from(b.order().expect("nonzero") as u32);
                (d, Rational::from(socle_degree(b) + 1))
            }
            FiltrationKind::Valuation(_) | FiltrationKind::Region(_) | FiltrationKind::Extracted(_) => {
                region_constants(&self.0.region)
            }
            FiltrationKind::Scale(c, inner) => {
                let (e, k) = inner.linear_boundedness();
                (c * &e, c * &k)
            }
            FiltrationKind::Intersect(f, g) => {
                let (e1, c1) = f.linear_boundedness();
                let (e2, c2) = g.linear_boundedness();
                (e1.max(e2), c1.max(c2))
            }
        }
    }

    /// A step `s > 0` such that every `λ` where `𝔞_λ` jumps lies in `s·ℤ`.
    pub fn breakpoint_step(&self) -> Rational {
        match self.kind() {
            FiltrationKind::IdealPower(_) => Rational::one(),
            FiltrationKind::Valuation(_) | FiltrationKind::Region(_) => {
                facet_step(self.0.region.facets().iter().map(|h| &h.offset))
            }
            FiltrationKind::Extracted(e) => facet_step(e.halfspaces().iter().map(|h| &h.offset)),
            FiltrationKind::Scale(c, inner) => inner.breakpoint_step() / c.clone(),
            FiltrationKind::Intersect(f, g) => f.breakpoint_step().gcd(&g.breakpoint_step()),
        }
    }
}

fn lattice_ideal(region: &Region, lambda: &Rational) -> Result<MonomialIdeal> {
    let c = region.max_axis_intercept().ok_or(Error::NotMPrimary)?;
    let bound = (c * lambda).ceil_u32()?.max(1);
    Ok(MonomialIdeal::from_antichain(region.dim(), region.minimal_lattice_points(lambda, bound)?))
}

/// `(min |c|₁, max axis intercept)` of an `𝔪`-primary region.
pub(crate) fn region_constants(region: &Region) -> (Rational, Rational) {
    (
        region.min_degree(),
        region.max_axis_intercept().expect("m-primary region"),
    )
}

/// The largest degree of a monomial outside the `𝔪`-primary ideal `b`.
fn socle_degree(b: &MonomialIdeal) -> u32 {
    let n = b.dim();
    let caps: Vec<u32> = (0..n).map(|i| b.pure_power(i).expect("m-primary")).collect();
    let mut best = 0;
    let mut u = vec![0u32; n];
    loop {
        let e = ExponentVector::new(u.clone());
        if !b.generators().iter().any(|g| g.le(&e)) {
            best = best.max(e.degree() as u32);
        }
        let mut k = 0;
        loop {
            if k == n {
                return best;
            }
            u[k] += 1;
            if u[k] < caps[k] {
                break;
            }
            u[k] = 0;
            k += 1;
        }
    }
}

fn facet_step<'a>(offsets: impl Iterator<Item = &'a Rational>) -> Rational {
    offsets
        .filter(|o| o.is_positive())
        .map(Rational::recip)
        .reduce(|a, b| a.gcd(&b))
        .unwrap_or_else(Rational::one)
}

impl fmt::Debug for Filtration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FiltrationKind::IdealPower(b) => write!(f, "IdealPower({b})"),
            FiltrationKind::Valuation(w) => write!(f, "Valuation({w})"),
            FiltrationKind::Region(q) => write!(f, "{q:?}"),
            FiltrationKind::Scale(c, inner) => write!(f, "Scale({c}, {inner:?})"),
            FiltrationKind::Intersect(a, b) => write!(f, "Intersect({a:?}, {b:?})"),
            FiltrationKind::Extracted(e) => write!(f, "Extracted({:?})", e.divisor()),
        }
    }
}

/// Any family `λ ↦ 𝔞_λ` whose filtration axioms can be checked.
pub trait IdealFamily {
    fn dim(&self) -> usize;
    fn ideal_at(&self, lambda: &Rational) -> Result<MonomialIdeal>;
    /// A step `s > 0` such that the family can jump only on `s·ℤ`.
    fn breakpoint_step(&self) -> Rational;
}

impl IdealFamily for Filtration {
    fn dim(&self) -> usize {
        Filtration::dim(self)
    }
    fn ideal_at(&self, lambda: &Rational) -> Result<MonomialIdeal> {
        Filtration::ideal_at(self, lambda)
    }
    fn breakpoint_step(&self) -> Rational {
        Filtration::breakpoint_step(self)
    }
}

/// A step function `λ ↦ 𝔞_λ` given by a table: `𝔞_λ` is the ideal of the
/// first row whose bound is `≥ λ`, and `R` past the table's end is never
/// returned (the last row extends to infinity).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TabulatedFamily {
    pub n: usize,
    pub steps: Vec<(Rational, MonomialIdeal)>,
}

impl IdealFamily for TabulatedFamily {
    fn dim(&self) -> usize {
        self.n
    }
    fn ideal_at(&self, lambda: &Rational) -> Result<MonomialIdeal> {
        if lambda.is_zero() {
            return Ok(MonomialIdeal::unit(self.n));
        }
        let row = self
            .steps
            .iter()
            .find(|(bound, _)| lambda <= bound)
            .or(self.steps.last())
            .ok_or(Error::EmptyInput("table rows"))?;
        Ok(row.1.clone())
    }
    fn breakpoint_step(&self) -> Rational {
        self.steps
            .iter()
            .map(|(b, _)| b.clone())
            .filter(Rational::is_positive)
            .reduce(|a, b| a.gcd(&b))
            .unwrap_or_else(Rational::one)
    }
}

/// The first filtration axiom found to fail, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// `witness ∈ 𝔞_λ \ 𝔞_μ` although `λ > μ`.
    Decreasing { lambda: Rational, mu: Rational, witness: ExponentVector },
    /// `𝔞_{λ−δ} ≠ 𝔞_λ` with no breakpoint in `(λ−δ, λ)`.
    LeftContinuous { lambda: Rational, delta: Rational, witness: ExponentVector },
    /// `witness ∈ 𝔞_λ·𝔞_μ \ 𝔞_{λ+μ}`.
    Multiplicative { lambda: Rational, mu: Rational, witness: ExponentVector },
    MPrimary { lambda: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violation: Option<AxiomViolation>,
}

fn left_gap(lambda: &Rational, step: &Rational) -> Rational {
    // Largest multiple of the step strictly below λ.
    let k = (lambda / step.clone()).ceil() - 1;
    let prev = Rational::from(k) * step;
    (lambda - &prev) / Rational::integer(2)
}

/// Checks the decreasing, left-continuity, multiplicativity and `𝔪`-primary
/// axioms on sampled indices.
pub fn axioms_check<F: IdealFamily + ?Sized>(
    family: &F,
    lambdas: &[Rational],
    pairs: &[(Rational, Rational)],
) -> Result<AxiomReport> {
    if lambdas.is_empty() {
        return Err(Error::EmptyInput("lambda samples"));
    }
    let fail = |v| Ok(AxiomReport { passed: false, violation: Some(v) });
    let mut sorted = lambdas.to_vec();
    sorted.sort();
    sorted.dedup();
    let ideals = sorted
        .iter()
        .map(|l| family.ideal_at(l))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..sorted.len() {
        for j in 0..i {
            if let Some(witness) = ideals[i].generator_outside(&ideals[j])? {
                return fail(AxiomViolation::Decreasing {
                    lambda: sorted[i].clone(),
                    mu: sorted[j].clone(),
                    witness,
                });
            }
        }
    }
    let step = family.breakpoint_step();
    for (lambda, a) in sorted.iter().zip(&ideals) {
        if !lambda.is_positive() {
            continue;
        }
        let delta = left_gap(lambda, &step);
        let below = family.ideal_at(&(lambda - &delta))?;
        let witness = below.generator_outside(a)?.or(a.generator_outside(&below)?);
        if let Some(witness) = witness {
            return fail(AxiomViolation::LeftContinuous { lambda: lambda.clone(), delta, witness });
        }
    }
    for (lambda, mu) in pairs {
        let prod = family.ideal_at(lambda)?.product(&family.ideal_at(mu)?)?;
        let sum = family.ideal_at(&(lambda + mu))?;
        if let Some(witness) = prod.generator_outside(&sum)? {
            return fail(AxiomViolation::Multiplicative {
                lambda: lambda.clone(),
                mu: mu.clone(),
                witness,
            });
        }
    }
    for (lambda, a) in sorted.iter().zip(&ideals) {
        if lambda.is_positive() && !a.is_m_primary() {
            return fail(AxiomViolation::MPrimary { lambda: lambda.clone() });
        }
    }
    Ok(AxiomReport { passed: true, violation: None })
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum FiltrationRepr {
    IdealPower { ideal: MonomialIdeal },
    Valuation { weights: QVector },
    Region { vertices: Vec<QVector> },
    Scale { c: Rational, inner: Box<Filtration> },
    Intersect { left: Box<Filtration>, right: Box<Filtration> },
    Extracted { divisor: Box<ToricBDivisor> },
}

impl Serialize for Filtration {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self.kind() {
            FiltrationKind::IdealPower(b) => FiltrationRepr::IdealPower { ideal: b.clone() },
            FiltrationKind::Valuation(w) => {
                FiltrationRepr::Valuation { weights: w.as_qvector().clone() }
            }
            FiltrationKind::Region(q) => FiltrationRepr::Region { vertices: q.vertices().to_vec() },
            FiltrationKind::Scale(c, inner) => {
                FiltrationRepr::Scale { c: c.clone(), inner: Box::new(inner.clone()) }
            }
            FiltrationKind::Intersect(a, b) => FiltrationRepr::Intersect {
                left: Box::new(a.clone()),
                right: Box::new(b.clone()),
            },
            FiltrationKind::Extracted(e) => {
                FiltrationRepr::Extracted { divisor: Box::new(e.divisor().clone()) }
            }
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filtration {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let built = match FiltrationRepr::deserialize(d)? {
            FiltrationRepr::IdealPower { ideal } => Filtration::ideal_power(ideal),
            FiltrationRepr::Valuation { weights } => {
                WeightVector::new(weights).and_then(Filtration::valuation)
            }
            FiltrationRepr::Region { vertices } => Region::hull(vertices).and_then(Filtration::region),
            FiltrationRepr::Scale { c, inner } => Filtration::scale(c, *inner),
            FiltrationRepr::Intersect { left, right } => Filtration::intersect(*left, *right),
            FiltrationRepr::Extracted { divisor } => divisor.extract_filtration(),
        };
        built.map_err(serde::de::Error::custom)
    }
}
