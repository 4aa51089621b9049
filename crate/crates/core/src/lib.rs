//! Exact toric model of `𝔪`-filtrations, saturation and b-divisors over the
//! closed point of `k[x₁,…,xₙ]_𝔪`.

pub mod bdivisor;
pub mod correspondence;
pub mod error;
pub mod filtration;
pub mod geometry;
pub mod monomial;
pub mod oracles;
pub mod rational;
pub mod valuation;

pub use bdivisor::{Boundedness, Comparison, Fan2D, RayWitness, ToricBDivisor, Verdict};
pub use correspondence::{CheckReport, CheckVerdict, Witness};
pub use error::{Error, Result};
pub use filtration::{
    axioms_check, AsymptoticValue, AxiomReport, AxiomViolation, Filtration, FiltrationKind,
    IdealFamily, SaturationCheck, TabulatedFamily, ValueSource,
};
pub use geometry::{Halfspace, QVector, Region};
pub use monomial::{ExponentVector, MonomialIdeal, Polynomial};
pub use rational::{Extended, Rational};
pub use valuation::{Center, WeightVector};
