//! Lines with integer coefficients and the Euler line of a triangle.
//!
//! Every line through two distinct rational points can be written as
//! `a·x + b·y = c` with integers in lowest terms; that normal form makes the
//! lattice-point question a plain gcd divisibility test.

use core::fmt;

use crate::{gcd_many, Error, Int, LatticePoint, Rational, RationalPoint, Triangle};

/// The line `a·x + b·y = c` with `gcd(|a|, |b|, |c|) = 1` and the first
/// nonzero coefficient of `(a, b)` positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalLine {
    a: Int,
    b: Int,
    c: Int,
}

impl RationalLine {
    /// The unique normalized line through two distinct points.
    pub fn through(p: RationalPoint, q: RationalPoint) -> Result<RationalLine, Error> {
        if p == q {
            return Err(Error::CoincidentPoints);
        }
        // Normal form from the two-point equation, then clear denominators.
        let a = q.y - p.y;
        let b = p.x - q.x;
        let c = a * p.x + b * p.y;
        let l = lcm(lcm(a.den(), b.den()), c.den());
        let scale = |r: Rational| r.num() * l.div_exact(r.den());
        let (mut a, mut b, mut c) = (scale(a), scale(b), scale(c));
        let g = gcd_many(&[a, b, c]);
        // p != q makes (a, b) != (0, 0), so g > 0.
        a = a.div_exact(g);
        b = b.div_exact(g);
        c = c.div_exact(g);
        let leading = if a.is_zero() { b } else { a };
        if leading.is_negative() {
            (a, b, c) = (-a, -b, -c);
        }
        Ok(RationalLine { a, b, c })
    }

    /// Coefficient of `x`.
    pub fn a(&self) -> Int {
        self.a
    }

    /// Coefficient of `y`.
    pub fn b(&self) -> Int {
        self.b
    }

    /// Right-hand side.
    pub fn c(&self) -> Int {
        self.c
    }

    /// Exact residual `a·x + b·y − c` at `p`; zero exactly on the line.
    pub fn eval(&self, p: RationalPoint) -> Rational {
        Rational::from(self.a) * p.x + Rational::from(self.b) * p.y - Rational::from(self.c)
    }

    /// True when `p` lies on the line.
    pub fn contains(&self, p: RationalPoint) -> bool {
        self.eval(p) == Rational::ZERO
    }

    /// Some lattice point on the line, if one exists.
    ///
    /// A solution exists iff `gcd(a, b)` divides `c`. Among the solutions
    /// this returns the one with minimal `|x|`, ties broken by minimal `|y|`.
    pub fn lattice_point(&self) -> Option<LatticePoint> {
        let g = self.a.gcd(self.b);
        if !g.divides(self.c) {
            return None;
        }
        let (a, b, c) = (
            self.a.div_exact(g),
            self.b.div_exact(g),
            self.c.div_exact(g),
        );
        // Now gcd(a, b) = 1.
        if a.is_zero() {
            // b = ±1: the horizontal line y = c/b, so take x = 0.
            return Some(LatticePoint::new(Int::ZERO, c * b));
        }
        if b.is_zero() {
            // a = ±1: the vertical line x = c/a, so take y = 0.
            return Some(LatticePoint::new(c * a, Int::ZERO));
        }
        let (x0, _) = ext_gcd_unit(a, b);
        // General solution: x = x0·c + t·b. Reduce x modulo |b| and compare
        // the two smallest residues in absolute value.
        let m = b.abs();
        let r = (x0 * c).rem_euclid(m);
        let mut best: Option<(Int, Int, LatticePoint)> = None;
        for x in [r, r - m] {
            let y = (c - a * x).div_exact(b);
            let key = (x.abs(), y.abs(), LatticePoint { x, y });
            if best.is_none_or(|cur| key < cur) {
                best = Some(key);
            }
        }
        best.map(|(_, _, p)| p)
    }
}

/// Bézout coefficients for coprime `a`, `b`: returns `(x, y)` with
/// `a·x + b·y = 1`.
fn ext_gcd_unit(a: Int, b: Int) -> (Int, Int) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (Int::ONE, Int::ZERO);
    let (mut t0, mut t1) = (Int::ZERO, Int::ONE);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(r1);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert!(r0.abs() == Int::ONE);
    if r0.is_negative() {
        (-s0, -t0)
    } else {
        (s0, t0)
    }
}

fn lcm(a: Int, b: Int) -> Int {
    a.div_exact(a.gcd(b)) * b
}

impl Triangle {
    /// The Euler line, through circumcenter and centroid (and with them the
    /// orthocenter). Undefined when circumcenter and centroid coincide.
    pub fn euler_line(&self) -> Result<RationalLine, Error> {
        RationalLine::through(self.circumcenter(), self.centroid())
    }

    /// Some lattice point on the Euler line, if the line is defined and
    /// passes through any.
    pub fn euler_line_lattice_point(&self) -> Result<Option<LatticePoint>, Error> {
        Ok(self.euler_line()?.lattice_point())
    }
}

impl fmt::Display for RationalLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}x - {}y = {}", self.a, -self.b, self.c)
        } else {
            write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
        }
    }
}

impl fmt::Debug for RationalLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
