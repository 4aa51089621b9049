use std::fmt;
use std::path::Path;

use serde_json::Value;
use toric_bdiv::{
    Error, Filtration, MonomialIdeal, Polynomial, QVector, Rational, ToricBDivisor, WeightVector,
};

/// A failure reported on stderr with a stable code; exit status 2.
#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub message: String,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        CliError { code: code.to_string(), message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(e.code(), e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Anything an `--input` file may hold.
#[derive(Clone, Debug)]
pub enum Object {
    Filtration(Filtration),
    Divisor(ToricBDivisor),
    Ideal(MonomialIdeal),
    Weights(WeightVector),
    Polynomial(Polynomial),
}

const FILTRATION_TYPES: [&str; 6] =
    ["ideal_power", "valuation", "region", "scale", "intersect", "extracted"];
const DIVISOR_TYPES: [&str; 4] = ["fan_pl", "convex", "from_filtration", "scaled"];

impl Object {
    pub fn parse(text: &str) -> CliResult<Object> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::new("malformed_json", e.to_string()))?;
        let decode = |e: serde_json::Error| CliError::new("invalid_object", e.to_string());
        let ty = value.get("type").and_then(Value::as_str).map(str::to_string);
        match ty.as_deref() {
            Some(t) if FILTRATION_TYPES.contains(&t) => {
                serde_json::from_value(value).map(Object::Filtration).map_err(decode)
            }
            Some(t) if DIVISOR_TYPES.contains(&t) => {
                serde_json::from_value(value).map(Object::Divisor).map_err(decode)
            }
            Some(t) => Err(CliError::new("unsupported_representation", format!("unknown type {t:?}"))),
            None if value.get("generators").is_some() => {
                serde_json::from_value(value).map(Object::Ideal).map_err(decode)
            }
            None if value.get("weights").is_some() => {
                serde_json::from_value(value).map(Object::Weights).map_err(decode)
            }
            None if value.get("terms").is_some() => {
                serde_json::from_value(value).map(Object::Polynomial).map_err(decode)
            }
            None => Err(CliError::new("unsupported_representation", "object has no recognizable shape")),
        }
    }

    pub fn load(path: &Path) -> CliResult<Object> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new("io_error", format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn dim(&self) -> usize {
        match self {
            Object::Filtration(f) => f.dim(),
            Object::Divisor(d) => d.dim(),
            Object::Ideal(a) => a.dim(),
            Object::Weights(w) => w.dim(),
            Object::Polynomial(p) => p.dim(),
        }
    }

    /// Ideals are read as their power filtrations.
    pub fn into_filtration(self) -> CliResult<Filtration> {
        match self {
            Object::Filtration(f) => Ok(f),
            Object::Ideal(a) => Ok(Filtration::ideal_power(a)?),
            Object::Weights(w) => Ok(Filtration::valuation(w)?),
            _ => Err(CliError::new("unsupported_representation", "expected a filtration")),
        }
    }

    /// Filtrations and ideals are read as their divisors `Z(·)`.
    pub fn into_divisor(self) -> CliResult<ToricBDivisor> {
        match self {
            Object::Divisor(d) => Ok(d),
            Object::Filtration(f) => Ok(ToricBDivisor::z_of_filtration(&f)),
            Object::Ideal(a) => Ok(ToricBDivisor::z_of_ideal(&a)?),
            _ => Err(CliError::new("unsupported_representation", "expected a b-divisor")),
        }
    }
}

pub fn parse_rational(s: &str) -> CliResult<Rational> {
    s.trim().parse::<Rational>().map_err(CliError::from)
}

pub fn parse_rationals(s: &str) -> CliResult<Vec<Rational>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(parse_rational).collect()
}

pub fn parse_weights(s: &str) -> CliResult<WeightVector> {
    Ok(WeightVector::new(QVector::new(parse_rationals(s)?))?)
}
