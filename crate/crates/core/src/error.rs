use thiserror::Error;

use crate::monomial::ExponentVector;
use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Each variant maps to a stable machine-readable code through [`Error::code`],
/// which the command-line front end prints alongside the message.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {dim} is not supported (maximum {max})")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("negative coordinate in {0}")]
    NegativeCoordinate(&'static str),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("box bound must be positive")]
    InvalidBoxBound,
    #[error("box bound {given} is below the required bound {required}")]
    InsufficientBox { required: u32, given: u32 },
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("ideal or region is not m-primary")]
    NotMPrimary,
    #[error("weight vector must have a positive entry")]
    ZeroWeight,
    #[error("weight vector must have full support")]
    PartialSupport,
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("boundary rays of a fan divisor must carry value 0")]
    BoundaryValueNonzero,
    #[error("operation needs an exact representation, got a sampled divisor")]
    NotExact,
    #[error("operation is not supported for this representation: {0}")]
    Unsupported(&'static str),
    #[error("b-divisor is not anti-effective")]
    NotAntiEffective,
    #[error("b-divisor is not bounded below by a multiple of Z(m)")]
    UnboundedBelow,
    #[error("the zero b-divisor is degenerate: its extracted ideals are all R")]
    DegenerateZero,
    #[error("b-divisor is not bounded above by a negative multiple of Z(m)")]
    NotBounded,
    #[error("vanishing order along the zero b-divisor is undefined")]
    ZeroSource,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("filtration is not saturated: {witness:?} lies in the saturation at level {lambda} only")]
    NotSaturated { lambda: Rational, witness: ExponentVector },
    #[error("integer overflow in exponent arithmetic")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable identifier for scripts consuming CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::DimensionTooLarge { .. } => "dimension_too_large",
            Error::ZeroDimension => "zero_dimension",
            Error::Infeasible => "infeasible",
            Error::NegativeCoordinate(_) => "negative_coordinate",
            Error::EmptyInput(_) => "empty_input",
            Error::InvalidBoxBound => "invalid_box_bound",
            Error::InsufficientBox { .. } => "insufficient_box",
            Error::ZeroIdeal => "zero_ideal",
            Error::NotMPrimary => "not_m_primary",
            Error::ZeroWeight => "zero_weight",
            Error::PartialSupport => "partial_support",
            Error::NonPositive(_) => "non_positive",
            Error::InvalidFan(_) => "invalid_fan",
            Error::BoundaryValueNonzero => "boundary_value_nonzero",
            Error::NotExact => "not_exact",
            Error::Unsupported(_) => "unsupported_representation",
            Error::NotAntiEffective => "not_anti_effective",
            Error::UnboundedBelow => "unbounded_below",
            Error::DegenerateZero => "degenerate_zero",
            Error::NotBounded => "not_bounded",
            Error::ZeroSource => "zero_source",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::NotSaturated { .. } => "not_saturated",
            Error::Overflow => "overflow",
            Error::Parse(_) => "parse_error",
            Error::Internal(_) => "internal_error",
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
