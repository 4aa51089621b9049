use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::rational::{common_denominator, Rational};

/// A fixed-length vector of rationals. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector(entries)
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(entries: I) -> Self {
        QVector(entries.into_iter().map(Rational::integer).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rational::zero(); dim])
    }

    pub fn ones(dim: usize) -> Self {
        QVector(vec![Rational::one(); dim])
    }

    /// The `i`-th standard basis vector scaled by `t`.
    pub fn axis(dim: usize, i: usize, t: Rational) -> Self {
        let mut v = QVector::zeros(dim);
        v.0[i] = t;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn checked_dot(&self, other: &QVector) -> Result<Rational> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.dot(other))
    }

    /// Dot product with an integer vector.
    pub fn dot_ints(&self, other: &[u32]) -> Rational {
        debug_assert_eq!(self.dim(), other.len());
        self.0
            .iter()
            .zip(other)
            .filter(|(_, &e)| e != 0)
            .map(|(a, &e)| a * Rational::from(e))
            .sum()
    }

    pub fn scale(&self, t: &Rational) -> QVector {
        QVector(self.0.iter().map(|a| a * t).collect())
    }

    pub fn add(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|a| !a.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &QVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn min_entry(&self) -> Rational {
        self.0.iter().min().cloned().unwrap_or_default()
    }

    pub fn max_entry(&self) -> Rational {
        self.0.iter().max().cloned().unwrap_or_default()
    }

    /// Rescale a nonzero vector to the primitive integer vector on the same ray.
    ///
    /// Returns the integer entries and the positive factor `s` with
    /// `integer = s · self`.
    pub fn primitive_integer(&self) -> Result<(Vec<i64>, Rational)> {
        if self.is_zero() {
            return Err(Error::Internal("primitive vector of zero".into()));
        }
        let den = common_denominator(self.0.iter());
        let scaled: Vec<BigInt> = self
            .0
            .iter()
            .map(|a| a.numer() * (&den / a.denom()))
            .collect();
        let g = scaled
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x))
            .abs();
        let ints = scaled
            .iter()
            .map(|x| (x / &g).to_i64().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        let factor = Rational::from_bigints(den, g)?;
        Ok((ints, factor))
    }

    /// `self` is a positive multiple of `other`'s ray or equals it after
    /// normalization to coordinate sum one.
    pub fn normalized(&self) -> QVector {
        let s = self.sum();
        if s.is_zero() {
            return self.clone();
        }
        let inv = s.recip();
        self.scale(&inv)
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for QVector {
    fn from(v: Vec<Rational>) -> Self {
        QVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for QVector {
    fn from(v: [i64; N]) -> Self {
        QVector::from_ints(v)
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub(crate) fn one_if(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_integer_rescaling() {
        let v = QVector::new(vec![Rational::new(1, 2), Rational::new(3, 4)]);
        let (ints, s) = v.primitive_integer().unwrap();
        assert_eq!(ints, vec![2, 3]);
        assert_eq!(s, Rational::integer(4));
        let (ints, s) = QVector::from_ints([4, 6]).primitive_integer().unwrap();
        assert_eq!(ints, vec![2, 3]);
        assert_eq!(s, Rational::new(1, 2));
    }

    #[test]
    fn lexicographic_order() {
        let a = QVector::from_ints([0, 5]);
        let b = QVector::from_ints([1, 0]);
        assert!(a < b);
    }
}
