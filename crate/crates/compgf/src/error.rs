//! Error type shared by all modules.

use crate::engine::{CompositionClass, StatisticName};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Arithmetic on two series with different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// Reciprocal requested for a series whose constant term is not 1.
    NotInvertible,
    /// Coefficient access beyond the truncation order.
    DegreeOutOfRange { degree: usize, order: usize },
    /// Malformed part-set spec; `pos` is a byte offset into the input.
    ParseSet { pos: usize, msg: String },
    /// Statistic is identically zero on the class and therefore rejected.
    IncompatibleStatistic {
        class: CompositionClass,
        stat: StatisticName,
    },
    /// A parts slice was requested on a series that still carries
    /// rise/level/drop markers.
    ResidualMarkers,
    /// Rational function whose denominator cannot be expanded over the
    /// integers (constant term not a unit).
    NonUnitDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "truncation order mismatch: {left} vs {right}")
            }
            Error::NotInvertible => {
                write!(f, "series is not invertible: constant term is not 1")
            }
            Error::DegreeOutOfRange { degree, order } => {
                write!(f, "degree {degree} exceeds truncation order {order}")
            }
            Error::ParseSet { pos, msg } => {
                write!(f, "invalid part-set spec at position {pos}: {msg}")
            }
            Error::IncompatibleStatistic { class, stat } => {
                write!(f, "statistic {stat} is identically zero on {class}")
            }
            Error::ResidualMarkers => {
                write!(f, "series still carries rise/level/drop markers")
            }
            Error::NonUnitDenominator => {
                write!(f, "denominator constant term is not +1 or -1")
            }
        }
    }
}

impl std::error::Error for Error {}
