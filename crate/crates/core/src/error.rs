use std::fmt;

use thiserror::Error;

/// Position of a cell in the error report, in interior indices.
///
/// Ghost cells show up as `-1` or `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Unlocated,
    Cell(isize),
    Cell2(isize, isize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Unlocated => write!(f, "<unlocated>"),
            Location::Cell(k) => write!(f, "cell {k}"),
            Location::Cell2(j, k) => write!(f, "cell ({j}, {k})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Face {
    North,
    South,
    East,
    West,
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Face::North => "north",
            Face::South => "south",
            Face::East => "east",
            Face::West => "west",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size mismatch: {0}")]
    Shape(String),

    #[error("non-positive density {value:e} at {at}")]
    NonPositiveDensity { at: Location, value: f64 },

    #[error("non-positive pressure {value:e} at {at}")]
    NonPositivePressure { at: Location, value: f64 },

    #[error("non-positive {quantity} {value:e} on the {face} face of {at}")]
    FacePositivity {
        at: Location,
        face: Face,
        quantity: &'static str,
        value: f64,
    },

    #[error("steady state construction failed at {at}: {reason}")]
    Construction { at: Location, reason: String },

    #[error("degenerate potential at {at}: the steady-state denominator vanishes")]
    DegeneratePotential { at: Location },

    #[error("coordinate {value} outside [{lo}, {hi}]")]
    OutOfDomain { value: f64, lo: f64, hi: f64 },

    #[error("non-positive equilibrium scale {value:e} in the cutoff indicator")]
    NonPositiveScale { value: f64 },

    #[error("step limit of {max_steps} reached at t = {t}")]
    StepLimit { max_steps: usize, t: f64 },

    #[error("aborted at t = {t} (step {step}): {source}")]
    Aborted {
        t: f64,
        step: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Attaches a location to an error raised by a pointwise routine.
    pub fn at(self, loc: Location) -> Self {
        match self {
            Error::NonPositiveDensity { value, .. } => Error::NonPositiveDensity { at: loc, value },
            Error::NonPositivePressure { value, .. } => {
                Error::NonPositivePressure { at: loc, value }
            }
            other => other,
        }
    }

    /// True for failures caused by the numerical state (positivity, step cap),
    /// as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::NonPositiveDensity { .. }
            | Error::NonPositivePressure { .. }
            | Error::FacePositivity { .. }
            | Error::NonPositiveScale { .. }
            | Error::StepLimit { .. }
            | Error::Construction { .. } => true,
            Error::Aborted { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
