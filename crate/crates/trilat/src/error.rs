use core::fmt;

/// Failure modes of the constructors and partial operations in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// A rational number was built with, or divided by, a zero denominator.
    ZeroDenominator,
    /// An exact square root of a negative integer was requested.
    NegativeSquareRoot,
    /// `split_power_of_two` was called on the zero Gaussian integer.
    ZeroSplit,
    /// The three vertices are collinear or not distinct.
    DegenerateTriangle,
    /// A line through two points was requested but the points coincide.
    /// For a triangle this means circumcenter and centroid are equal, so the
    /// Euler line is undefined.
    CoincidentPoints,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator is zero"),
            Error::NegativeSquareRoot => write!(f, "square root of a negative integer"),
            Error::ZeroSplit => write!(f, "cannot split the zero Gaussian integer"),
            Error::DegenerateTriangle => write!(f, "vertices are collinear or not distinct"),
            Error::CoincidentPoints => write!(f, "points coincide, no unique line through them"),
        }
    }
}

impl core::error::Error for Error {}
