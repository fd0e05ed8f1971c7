// SPDX-License-Identifier: Apache-2.0

use std::fmt;

/// A generator or primitive parameter outside its admissible range.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParamError {
    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("empty interval: low {low} exceeds high {high}")]
    Interval { low: f64, high: f64 },
    #[error("cardinality must be at least 1")]
    ZeroCardinality,
}

impl ParamError {
    pub(crate) fn out_of_range(name: &'static str, value: f64, range: &'static str) -> Self {
        Self::OutOfRange { name, value, range }
    }
}

/// Descriptor text that could not be turned into a descriptor.
///
/// `field` is the 1-based index of the offending comma-separated field and
/// `column` the 0-based byte offset where it starts.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("field {field} at column {column}: {kind}")]
pub struct ParseError {
    pub field: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParseErrorKind {
    Empty,
    UnknownDistribution(String),
    Arity {
        distribution: &'static str,
        expected: usize,
        found: usize,
    },
    Number {
        name: &'static str,
        text: String,
    },
    Integer {
        name: &'static str,
        text: String,
    },
    Dimension(String),
    Seed(String),
    Param(ParamError),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => f.write_str("empty descriptor"),
            Self::UnknownDistribution(s) => write!(
                f,
                "unknown distribution '{s}' (expected uniform, diagonal, gaussian, sierpinski, bit, parcel or 1-6)"
            ),
            Self::Arity {
                distribution,
                expected,
                found,
            } => write!(
                f,
                "{distribution} takes {expected} fields, found {found}"
            ),
            Self::Number { name, text } => write!(f, "{name}: '{text}' is not a finite number"),
            Self::Integer { name, text } => write!(f, "{name}: '{text}' is not a valid integer"),
            Self::Dimension(s) => write!(f, "dimension must be 2, found '{s}'"),
            Self::Seed(s) => write!(f, "malformed seed '{s}' (expected seed=<u64>)"),
            Self::Param(e) => e.fmt(f),
        }
    }
}
