//! Monomial valuations `v_w(f) = min_{u ∈ supp f} ⟨w, u⟩`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_dim, Error, Result};
use crate::geometry::QVector;
use crate::monomial::{ExponentVector, MonomialIdeal, Polynomial};
use crate::rational::{Extended, Rational};

/// A nonzero weight vector `w ≥ 0`, the monomial valuation `v_w`.
///
/// ```
/// use toric_bdiv::{Polynomial, WeightVector};
///
/// let w = WeightVector::from_ints([1, 2]).unwrap();
/// let f = Polynomial::parse("x^3 + x*y + y^2", 2).unwrap();
/// assert_eq!(w.value_of_polynomial(&f).unwrap().to_string(), "3");
/// ```
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(QVector);

impl WeightVector {
    pub fn new(weights: QVector) -> Result<Self> {
        if weights.dim() == 0 {
            return Err(Error::ZeroDimension);
        }
        if !weights.is_nonnegative() {
            return Err(Error::NegativeCoordinate("weight vector"));
        }
        if weights.is_zero() {
            return Err(Error::ZeroWeight);
        }
        Ok(WeightVector(weights))
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(weights: I) -> Result<Self> {
        Self::new(QVector::from_ints(weights))
    }

    /// `(1,…,1)`, whose valuation is `ord_𝔪`.
    pub fn ones(dim: usize) -> Result<Self> {
        Self::new(QVector::ones(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn as_qvector(&self) -> &QVector {
        &self.0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.0[i].is_positive()).collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.0.iter().all(Rational::is_positive)
    }

    pub fn require_full_support(&self) -> Result<()> {
        if self.has_full_support() {
            Ok(())
        } else {
            Err(Error::PartialSupport)
        }
    }

    pub fn scale(&self, t: &Rational) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::NonPositive("weight scale"));
        }
        Ok(WeightVector(self.0.scale(t)))
    }

    /// `⟨w, u⟩`.
    pub fn value_of_exponent(&self, u: &ExponentVector) -> Rational {
        self.0.dot_ints(u.entries())
    }

    /// `v_w(f)`, or `+∞` for `f = 0`.
    pub fn value_of_polynomial(&self, f: &Polynomial) -> Result<Extended> {
        check_dim(self.dim(), f.dim())?;
        Ok(f.support()
            .map(|u| Extended::Finite(self.value_of_exponent(u)))
            .min()
            .unwrap_or(Extended::Infinity))
    }

    /// `v_w(𝔞) = min` over the generators.
    pub fn value_of_ideal(&self, a: &MonomialIdeal) -> Result<Rational> {
        check_dim(self.dim(), a.dim())?;
        a.generators()
            .iter()
            .map(|u| self.value_of_exponent(u))
            .min()
            .ok_or(Error::ZeroIdeal)
    }

    /// The prime `(xᵢ : wᵢ > 0)` at which `v_w` is centered.
    pub fn center(&self) -> Center {
        Center { dim: self.dim(), variables: self.support() }
    }

    /// `(min wᵢ, max wᵢ)`, sandwiching `v_w` between multiples of `ord_𝔪`.
    pub fn izumi_constants(&self) -> Result<(Rational, Rational)> {
        self.require_full_support()?;
        Ok((self.0.min_entry(), self.0.max_entry()))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    weights: QVector,
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightRepr { weights: self.0.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WeightRepr::deserialize(d)?;
        WeightVector::new(r.weights).map_err(serde::de::Error::custom)
    }
}

/// A coordinate prime `(xᵢ : i ∈ variables)` of `k[x₁,…,xₙ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Center {
    pub dim: usize,
    pub variables: Vec<usize>,
}

impl Center {
    pub fn is_closed_point(&self) -> bool {
        self.variables.len() == self.dim
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_closed_point() {
            return write!(f, "m");
        }
        let names: Vec<String> = self.variables.iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "({})", names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[(i64, i64)]) -> WeightVector {
        WeightVector::new(QVector::new(v.iter().map(|&(p, q)| Rational::new(p, q)).collect()))
            .unwrap()
    }

    fn val(w: &WeightVector, f: &str) -> Extended {
        w.value_of_polynomial(&Polynomial::parse(f, w.dim()).unwrap()).unwrap()
    }

    fn fin(n: i64) -> Extended {
        Extended::Finite(Rational::integer(n))
    }

    #[test]
    fn polynomial_values() {
        assert_eq!(val(&w(&[(1, 1), (2, 1)]), "x^3 + x*y + y^2"), fin(3));
        assert_eq!(val(&w(&[(1, 1), (1, 1)]), "1 + x"), fin(0));
        assert_eq!(val(&w(&[(1, 2), (3, 1)]), "x^4*y"), fin(5));
        assert_eq!(
            w(&[(1, 1), (1, 1)]).value_of_polynomial(&Polynomial::zero(2)).unwrap(),
            Extended::Infinity
        );
    }

    #[test]
    fn ideal_values() {
        let a = MonomialIdeal::new(2, [[3, 0], [1, 1], [0, 2]]).unwrap();
        assert_eq!(w(&[(1, 1), (2, 1)]).value_of_ideal(&a).unwrap(), Rational::integer(3));
        let m = MonomialIdeal::maximal(2);
        assert_eq!(w(&[(1, 1), (1, 1)]).value_of_ideal(&m).unwrap(), Rational::one());
        let b = MonomialIdeal::new(2, [[2, 0], [0, 2]]).unwrap().power(2).unwrap();
        assert_eq!(w(&[(2, 1), (3, 1)]).value_of_ideal(&b).unwrap(), Rational::integer(8));
        assert_eq!(
            w(&[(1, 1), (1, 1)]).value_of_ideal(&MonomialIdeal::zero(2)),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn centers() {
        assert!(w(&[(1, 1), (1, 1)]).center().is_closed_point());
        assert_eq!(w(&[(1, 1), (0, 1)]).center().to_string(), "(x1)");
        assert_eq!(WeightVector::from_ints([0, 0]), Err(Error::ZeroWeight));
    }

    #[test]
    fn izumi() {
        let v = WeightVector::from_ints([1, 2]).unwrap();
        assert_eq!(v.izumi_constants().unwrap(), (Rational::integer(1), Rational::integer(2)));
        let xy = Polynomial::parse("x*y", 2).unwrap();
        assert_eq!(v.value_of_polynomial(&xy).unwrap(), fin(3));
        assert_eq!(
            WeightVector::from_ints([1, 0]).unwrap().izumi_constants(),
            Err(Error::PartialSupport)
        );
    }

    #[test]
    fn json() {
        let v: WeightVector = serde_json::from_str(r#"{"weights":["1","2"]}"#).unwrap();
        assert_eq!(v, WeightVector::from_ints([1, 2]).unwrap());
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"weights":["1","2"]}"#);
    }
}
