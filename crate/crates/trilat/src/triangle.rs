//! Lattice triangles and their classical centers in exact arithmetic.
//!
//! The circumcenter is computed in a frame translated so the third vertex
//! sits at the origin. With side vectors `a = v1 − v3`, `b = v2 − v3` and
//! `n(v) = |v|²`, the center solves the two equidistance equations and comes
//! out as
//!
//! ```text
//! N = n(b)·a − n(a)·b,   F = v3 + (−N.y, N.x) / (2·(a × b))
//! ```
//!
//! The denominator `a × b` is twice the signed area, nonzero for every
//! non-degenerate triangle. The orthocenter then follows from the Euler
//! relation `H = 3G − 2F` without any further geometry.

use core::fmt;

use crate::{Error, Int, LatticePoint, Rational, RationalPoint};

/// A non-degenerate triangle with integer vertices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    v1: LatticePoint,
    v2: LatticePoint,
    v3: LatticePoint,
}

impl Triangle {
    /// Builds a triangle, rejecting collinear or repeated vertices.
    pub fn new(v1: LatticePoint, v2: LatticePoint, v3: LatticePoint) -> Result<Triangle, Error> {
        if (v1 - v3).cross(v2 - v3).is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle { v1, v2, v3 })
    }

    /// Builds a triangle from `[x1, y1, x2, y2, x3, y3]`.
    pub fn from_coords(c: [i128; 6]) -> Result<Triangle, Error> {
        Triangle::new(
            LatticePoint::new(c[0], c[1]),
            LatticePoint::new(c[2], c[3]),
            LatticePoint::new(c[4], c[5]),
        )
    }

    /// Triangle with `v3` at the origin from a pair already known to have
    /// positive cross product.
    pub(crate) fn from_origin_pair(v1: LatticePoint, v2: LatticePoint) -> Triangle {
        debug_assert!(!v1.cross(v2).is_zero());
        Triangle {
            v1,
            v2,
            v3: LatticePoint::ORIGIN,
        }
    }

    /// First vertex.
    pub fn v1(&self) -> LatticePoint {
        self.v1
    }

    /// Second vertex.
    pub fn v2(&self) -> LatticePoint {
        self.v2
    }

    /// Third vertex.
    pub fn v3(&self) -> LatticePoint {
        self.v3
    }

    /// The vertices in order.
    pub fn vertices(&self) -> [LatticePoint; 3] {
        [self.v1, self.v2, self.v3]
    }

    /// Side vectors `(v1 − v3, v2 − v3)`.
    pub fn side_vectors(&self) -> (LatticePoint, LatticePoint) {
        (self.v1 - self.v3, self.v2 - self.v3)
    }

    /// Twice the area, always a positive integer.
    pub fn area_twice(&self) -> Int {
        let (a, b) = self.side_vectors();
        a.cross(b).abs()
    }

    /// The exact area.
    pub fn area(&self) -> Rational {
        Rational::new(self.area_twice(), 2).expect("2 != 0")
    }

    /// Centroid `(v1 + v2 + v3) / 3`.
    pub fn centroid(&self) -> RationalPoint {
        let s = self.v1 + self.v2 + self.v3;
        RationalPoint::new(
            Rational::new(s.x, 3).expect("3 != 0"),
            Rational::new(s.y, 3).expect("3 != 0"),
        )
    }

    /// Circumcenter, the point exactly equidistant from all three vertices.
    pub fn circumcenter(&self) -> RationalPoint {
        let (a, b) = self.side_vectors();
        let na = a.x * a.x + a.y * a.y;
        let nb = b.x * b.x + b.y * b.y;
        let nx = nb * a.x - na * b.x;
        let ny = nb * a.y - na * b.y;
        let c2 = a.cross(b) + a.cross(b);
        RationalPoint::new(
            Rational::new(-ny, c2).expect("non-degenerate") + Rational::from(self.v3.x),
            Rational::new(nx, c2).expect("non-degenerate") + Rational::from(self.v3.y),
        )
    }

    /// Orthocenter via the Euler relation `H = 3G − 2F = (v1 + v2 + v3) − 2F`.
    pub fn orthocenter(&self) -> RationalPoint {
        let s = self.v1 + self.v2 + self.v3;
        let f = self.circumcenter();
        let two = Rational::from_int(2);
        RationalPoint::new(
            Rational::from(s.x) - two * f.x,
            Rational::from(s.y) - two * f.y,
        )
    }

    /// Exact squared circumradius.
    pub fn circumradius_squared(&self) -> Rational {
        self.circumcenter()
            .dist_squared(RationalPoint::from_lattice(self.v1))
    }

    /// The triangle translated by `d`.
    pub fn translated(&self, d: LatticePoint) -> Triangle {
        Triangle {
            v1: self.v1 + d,
            v2: self.v2 + d,
            v3: self.v3 + d,
        }
    }

    /// Largest vertex coordinate magnitude.
    pub fn max_abs(&self) -> Int {
        self.v1.max_abs().max(self.v2.max_abs()).max(self.v3.max_abs())
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {}", self.v1, self.v2, self.v3)
    }
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
