//! Points of the integer lattice and of the rational plane.

use core::fmt;
use core::ops::{Add, Sub};

use crate::{Int, Rational};

/// A point (or vector) with integer coordinates.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    /// x coordinate.
    pub x: Int,
    /// y coordinate.
    pub y: Int,
}

impl LatticePoint {
    /// The origin.
    pub const ORIGIN: LatticePoint = LatticePoint {
        x: Int::ZERO,
        y: Int::ZERO,
    };

    /// Builds a point from integer coordinates.
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> LatticePoint {
        LatticePoint {
            x: x.into(),
            y: y.into(),
        }
    }

    /// Cross product `self.x·other.y − self.y·other.x`.
    pub fn cross(self, other: LatticePoint) -> Int {
        self.x * other.y - self.y * other.x
    }

    /// Largest coordinate magnitude.
    pub fn max_abs(self) -> Int {
        self.x.abs().max(self.y.abs())
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, other: LatticePoint) -> LatticePoint {
        LatticePoint {
            x: self.x + other.x,
            y: self.y + other.y,
        }
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, other: LatticePoint) -> LatticePoint {
        LatticePoint {
            x: self.x - other.x,
            y: self.y - other.y,
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A point with rational coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    /// x coordinate.
    pub x: Rational,
    /// y coordinate.
    pub y: Rational,
}

impl RationalPoint {
    /// Builds a point from rational coordinates.
    pub fn new(x: Rational, y: Rational) -> RationalPoint {
        RationalPoint { x, y }
    }

    /// Embeds a lattice point.
    pub fn from_lattice(p: LatticePoint) -> RationalPoint {
        RationalPoint {
            x: Rational::from(p.x),
            y: Rational::from(p.y),
        }
    }

    /// True when both coordinates are integers.
    pub fn is_lattice(self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// The underlying lattice point, when there is one.
    pub fn to_lattice(self) -> Option<LatticePoint> {
        Some(LatticePoint {
            x: self.x.to_int()?,
            y: self.y.to_int()?,
        })
    }

    /// Squared Euclidean distance to `other`, exactly.
    pub fn dist_squared(self, other: RationalPoint) -> Rational {
        let d = self - other;
        d.x.square() + d.y.square()
    }
}

impl Sub for RationalPoint {
    type Output = RationalPoint;
    fn sub(self, other: RationalPoint) -> RationalPoint {
        RationalPoint {
            x: self.x - other.x,
            y: self.y - other.y,
        }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_product() {
        let a = LatticePoint::new(2, 0);
        let b = LatticePoint::new(2, 3);
        assert_eq!(a.cross(b), Int::new(6));
        assert_eq!(b.cross(a), Int::new(-6));
        assert_eq!(a.cross(a), Int::ZERO);
    }

    #[test]
    fn lattice_detection() {
        let p = RationalPoint::new(Rational::new(4, 2).unwrap(), Rational::new(-3, 1).unwrap());
        assert!(p.is_lattice());
        assert_eq!(p.to_lattice(), Some(LatticePoint::new(2, -3)));
        let q = RationalPoint::new(Rational::new(1, 2).unwrap(), Rational::ZERO);
        assert!(!q.is_lattice());
        assert_eq!(q.to_lattice(), None);
    }

    #[test]
    fn distances() {
        let p = RationalPoint::from_lattice(LatticePoint::new(1, 2));
        let q = RationalPoint::from_lattice(LatticePoint::new(4, -2));
        assert_eq!(p.dist_squared(q), Rational::from_int(25));
    }
}
