//! Monomials, monomial ideals and polynomials in `k[x₁,…,xₙ]` localized at
//! the maximal ideal `𝔪 = (x₁,…,xₙ)`.

pub(crate) mod staircase;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_dim, Error, Result};
use crate::geometry::{QVector, Region};
use crate::rational::Rational;

/// The exponent `u` of a monomial `xᵘ`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// `k·eᵢ`.
    pub fn axis(dim: usize, i: usize, k: u32) -> Self {
        let mut v = vec![0; dim];
        v[i] = k;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|u|₁`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        check_dim(self.dim(), other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum, the exponent of `lcm(xᵘ, xᵛ)`.
    pub fn join(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn to_qvector(&self) -> QVector {
        QVector::from_ints(self.0.iter().map(|&e| e as i64))
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A monomial ideal, stored as its sorted antichain of minimal generators.
///
/// The empty antichain is the zero ideal and `{0}` is the unit ideal `R`.
///
/// ```
/// use toric_bdiv::MonomialIdeal;
///
/// let a = MonomialIdeal::new(2, [[2, 0], [0, 2]]).unwrap();
/// let a2 = a.power(2).unwrap();
/// assert_eq!(a2, MonomialIdeal::new(2, [[4, 0], [2, 2], [0, 4]]).unwrap());
/// assert!(a2.contains(&[2, 2].into()).unwrap());
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// The ideal generated by `points`; non-minimal points are discarded.
    pub fn new<I, U>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = U>,
        U: Into<ExponentVector>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let points: Vec<ExponentVector> = points.into_iter().map(Into::into).collect();
        for u in &points {
            check_dim(dim, u.dim())?;
        }
        Ok(MonomialIdeal {
            dim,
            generators: staircase::minimal_elements(dim, &points),
        })
    }

    /// Builds from an antichain already known to be sorted and minimal.
    pub(crate) fn from_antichain(dim: usize, generators: Vec<ExponentVector>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { dim, generators }
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, generators: Vec::new() }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal { dim, generators: vec![ExponentVector::zeros(dim)] }
    }

    /// `𝔪^k`: all monomials of degree `k`.
    pub fn maximal_power(dim: usize, k: u32) -> Self {
        let mut out = Vec::new();
        let mut cur = vec![0u32; dim];
        fn fill(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(ExponentVector(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                fill(i + 1, left - e, cur, out);
            }
        }
        fill(0, k, &mut cur, &mut out);
        MonomialIdeal { dim, generators: out }
    }

    pub fn maximal(dim: usize) -> Self {
        Self::maximal_power(dim, 1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(ExponentVector::is_zero)
    }

    pub fn contains(&self, u: &ExponentVector) -> Result<bool> {
        check_dim(self.dim, u.dim())?;
        Ok(self.generators.iter().any(|g| g.le(u)))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(other.generators.iter().all(|u| self.generators.iter().any(|g| g.le(u))))
    }

    /// A generator of `self` outside `other`, if any.
    pub fn generator_outside(&self, other: &MonomialIdeal) -> Result<Option<ExponentVector>> {
        check_dim(self.dim, other.dim)?;
        Ok(self
            .generators
            .iter()
            .find(|u| !other.generators.iter().any(|g| g.le(u)))
            .cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                sums.push(a.checked_add(b)?);
            }
        }
        Ok(MonomialIdeal {
            dim: self.dim,
            generators: staircase::minimal_elements(self.dim, &sums),
        })
    }

    /// `self^k`, with `self^0 = R`.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.dim);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let joins: Vec<ExponentVector> = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.join(b)))
            .collect();
        Ok(MonomialIdeal {
            dim: self.dim,
            generators: staircase::minimal_elements(self.dim, &joins),
        })
    }

    /// Proper and containing a pure power of every variable.
    pub fn is_m_primary(&self) -> bool {
        !self.is_unit() && (0..self.dim).all(|i| self.pure_power(i).is_some())
    }

    /// The least `k` with `xᵢᵏ` a generator.
    pub fn pure_power(&self, i: usize) -> Option<u32> {
        self.generators
            .iter()
            .find(|g| (0..self.dim).all(|k| k == i || g[k] == 0))
            .map(|g| g[i])
    }

    /// `ord_𝔪`, the least generator degree.
    pub fn order(&self) -> Option<u64> {
        self.generators.iter().map(ExponentVector::degree).min()
    }

    /// Convex hull of the exponents plus the orthant.
    pub fn newton_region(&self) -> Result<Region> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Region::hull(self.generators.iter().map(ExponentVector::to_qvector))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    generators: Vec<ExponentVector>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr { n: self.dim, generators: self.generators.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = IdealRepr::deserialize(d)?;
        MonomialIdeal::new(r.n, r.generators).map_err(serde::de::Error::custom)
    }
}

/// The minimal elements of `points` as a monomial ideal.
pub fn minimal_generators<I, U>(dim: usize, points: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = U>,
    U: Into<ExponentVector>,
{
    MonomialIdeal::new(dim, points)
}

/// A polynomial with rational coefficients; zero coefficients are never stored.
///
/// ```
/// use toric_bdiv::Polynomial;
///
/// let f = Polynomial::parse("x^2*y + 3/2*x*y^2 - x^2*y", 2).unwrap();
/// assert_eq!(f.to_string(), "3/2*x*y^2");
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    /// Sums the given terms, combining equal exponents.
    pub fn new<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut p = Polynomial::zero(dim);
        for (u, c) in terms {
            check_dim(dim, u.dim())?;
            p.add_term(u, c);
        }
        Ok(p)
    }

    pub fn zero(dim: usize) -> Self {
        Polynomial { dim, terms: BTreeMap::new() }
    }

    pub fn monomial(u: ExponentVector) -> Self {
        Polynomial {
            dim: u.dim(),
            terms: BTreeMap::from([(u, Rational::one())]),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(dim);
        p.add_term(ExponentVector::zeros(dim), c);
        p
    }

    fn add_term(&mut self, u: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(u) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut p = self.clone();
        for (u, c) in &other.terms {
            p.add_term(u.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn scale(&self, t: &Rational) -> Polynomial {
        if t.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(u, c)| (u.clone(), c * t)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut p = Polynomial::zero(self.dim);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                p.add_term(u.checked_add(v)?, a * b);
            }
        }
        Ok(p)
    }

    /// Parses sums of terms like `3/2*x^2*y - z + 1`.
    ///
    /// Variables are `x`, `y`, `z` when `dim ≤ 3`, and `x1`, …, `xn` always.
    pub fn parse(text: &str, dim: usize) -> Result<Polynomial> {
        Parser { s: text.as_bytes(), pos: 0, dim }.polynomial()
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    dim: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        if self.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut p = Polynomial::zero(self.dim);
        let mut sign = Rational::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return Err(self.err("empty polynomial")),
            _ => {}
        }
        loop {
            let (u, c) = self.term()?;
            p.add_term(u, c * &sign);
            match self.peek() {
                None => return Ok(p),
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(ExponentVector, Rational)> {
        let mut exp = vec![0u32; self.dim];
        let mut coef = Rational::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coef *= self.number()?,
                Some(c) if c.is_ascii_alphabetic() => {
                    let (i, e) = self.variable()?;
                    exp[i] = exp[i].checked_add(e).ok_or(Error::Overflow)?;
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            match self.peek() {
                Some(b'*') => self.pos += 1,
                Some(c) if c.is_ascii_alphabetic() => {}
                _ => return Ok((ExponentVector(exp), coef)),
            }
        }
    }

    fn number(&mut self) -> Result<Rational> {
        let num = self.digits().ok_or_else(|| self.err("expected digits"))?;
        if self.s.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let den = self.digits().ok_or_else(|| self.err("expected denominator"))?;
            return format!("{num}/{den}").parse();
        }
        num.parse()
    }

    fn variable(&mut self) -> Result<(usize, u32)> {
        let c = self.s[self.pos];
        self.pos += 1;
        let index = match (c, self.digits()) {
            (b'x', Some(ref d)) => {
                let k: usize = d.parse().map_err(|_| self.err("bad variable index"))?;
                (1..=self.dim).contains(&k).then(|| k - 1)
            }
            (b'x', None) => Some(0),
            (b'y', None) if self.dim <= 3 => Some(1),
            (b'z', None) if self.dim <= 3 => Some(2),
            _ => None,
        };
        let i = index
            .filter(|&i| i < self.dim)
            .ok_or_else(|| self.err("unknown variable"))?;
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            e = d.parse().map_err(|_| Error::Overflow)?;
        }
        Ok((i, e))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: Vec<String> = if self.dim <= 3 {
            ["x", "y", "z"][..self.dim].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=self.dim).map(|i| format!("x{i}")).collect()
        };
        for (k, (u, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            let abs = c.abs();
            if k == 0 && c.is_negative() {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            if abs != Rational::one() || u.is_zero() {
                factors.push(abs.to_string());
            }
            for (i, &e) in u.entries().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{e}", names[i])),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: ExponentVector,
    coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    terms: Vec<TermRepr>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            n: Some(self.dim),
            terms: self
                .terms
                .iter()
                .map(|(u, c)| TermRepr { exp: u.clone(), coef: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = PolyRepr::deserialize(d)?;
        let dim = r
            .n
            .or_else(|| r.terms.first().map(|t| t.exp.dim()))
            .ok_or_else(|| D::Error::custom("polynomial without terms needs \"n\""))?;
        Polynomial::new(dim, r.terms.into_iter().map(|t| (t.exp, t.coef)))
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal<const N: usize>(gens: &[[u32; N]]) -> MonomialIdeal {
        MonomialIdeal::new(N, gens.iter().copied()).unwrap()
    }

    #[test]
    fn minimal_generator_examples() {
        assert_eq!(ideal(&[[2, 0], [1, 1], [2, 1]]).generators(), &[[1, 1].into(), [2, 0].into()]);
        assert_eq!(ideal(&[[1, 0]]).generators(), &[[1, 0].into()]);
        assert_eq!(
            ideal(&[[4, 0], [2, 2], [3, 1], [0, 4]]).generators(),
            &[[0, 4].into(), [2, 2].into(), [3, 1].into(), [4, 0].into()]
        );
    }

    #[test]
    fn membership_examples() {
        let a = ideal(&[[2, 0], [0, 2]]);
        assert!(a.contains(&[3, 1].into()).unwrap());
        assert!(!a.contains(&[1, 1].into()).unwrap());
        assert!(a.power(2).unwrap().contains(&[2, 2].into()).unwrap());
        assert!(matches!(a.contains(&[1, 1, 1].into()), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn product_and_power_examples() {
        let a = ideal(&[[2, 0], [0, 2]]);
        assert_eq!(a.power(2).unwrap(), ideal(&[[4, 0], [2, 2], [0, 4]]));
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.power(3).unwrap(), ideal(&[[3, 0], [2, 1], [1, 2], [0, 3]]));
        assert_eq!(m.power(3).unwrap(), MonomialIdeal::maximal_power(2, 3));
        assert_eq!(a.product(&MonomialIdeal::unit(2)).unwrap(), a);
        assert!(a.product(&MonomialIdeal::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(ideal(&[[2, 0]]).intersection(&ideal(&[[0, 2]])).unwrap(), ideal(&[[2, 2]]));
        let a = ideal(&[[2, 0], [0, 2]]);
        assert_eq!(MonomialIdeal::maximal(2).intersection(&a).unwrap(), a);
        assert_eq!(a.intersection(&MonomialIdeal::unit(2)).unwrap(), a);
    }

    #[test]
    fn m_primary_examples() {
        assert!(ideal(&[[2, 0], [0, 2]]).is_m_primary());
        assert!(!ideal(&[[1, 0]]).is_m_primary());
        assert!(!MonomialIdeal::unit(2).is_m_primary());
    }

    #[test]
    fn newton_region_examples() {
        let q = ideal(&[[2, 0], [1, 1], [0, 3]]).newton_region().unwrap();
        assert_eq!(q.vertices().len(), 3);
        let q = ideal(&[[3, 0], [1, 1], [0, 2]]).newton_region().unwrap();
        assert_eq!(q.vertices().len(), 3);
        assert_eq!(MonomialIdeal::zero(2).newton_region(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn parse_and_print() {
        let f = Polynomial::parse("x^3 + x*y + y^2", 2).unwrap();
        assert_eq!(f.terms().count(), 3);
        assert_eq!(f.to_string(), "y^2 + x*y + x^3");
        let g = Polynomial::parse("-3/2 x1^2 x3 + 1", 3).unwrap();
        assert_eq!(g.to_string(), "1 - 3/2*x^2*z");
        assert!(Polynomial::parse("x - x", 2).unwrap().is_zero());
        assert!(Polynomial::parse("w", 2).is_err());
        assert!(Polynomial::parse("x +", 2).is_err());
    }

    #[test]
    fn polynomial_arithmetic() {
        let f = Polynomial::parse("x + y", 2).unwrap();
        let g = Polynomial::parse("x - y", 2).unwrap();
        assert_eq!(f.mul(&g).unwrap(), Polynomial::parse("x^2 - y^2", 2).unwrap());
        assert!(f.sub(&f).unwrap().is_zero());
    }

    #[test]
    fn json_round_trips() {
        let a = ideal(&[[2, 0], [0, 2]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":2,"generators":[[0,2],[2,0]]}"#);
        assert_eq!(serde_json::from_str::<MonomialIdeal>(&s).unwrap(), a);
        let f: Polynomial =
            serde_json::from_str(r#"{"terms":[{"exp":[1,1],"coef":"3/2"}]}"#).unwrap();
        assert_eq!(f.to_string(), "3/2*x*y");
    }
}
