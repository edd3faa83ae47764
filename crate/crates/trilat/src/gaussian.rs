//! Gaussian integers and the coordinate-sum parity map.
//!
//! The map `sigma(x + yi) = (x + y) mod 2` is reduction modulo the prime
//! `1 + i` of `Z[i]`; it respects addition and multiplication, and it
//! vanishes exactly on the multiples of `1 + i`. Those facts drive the
//! even-side-sum condition in [`crate::conditions`].

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Int};

/// Coordinate-sum parity of the pair `(x, y)`: 0 when `x + y` is even.
pub fn sigma(x: Int, y: Int) -> u8 {
    x.parity() ^ y.parity()
}

/// A Gaussian integer `re + im·i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    /// Real part.
    pub re: Int,
    /// Imaginary part.
    pub im: Int,
}

impl GaussianInt {
    /// Zero.
    pub const ZERO: GaussianInt = GaussianInt {
        re: Int::ZERO,
        im: Int::ZERO,
    };

    /// Builds `re + im·i`.
    pub fn new(re: impl Into<Int>, im: impl Into<Int>) -> GaussianInt {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    /// Complex conjugate.
    pub fn conj(self) -> GaussianInt {
        GaussianInt {
            re: self.re,
            im: -self.im,
        }
    }

    /// Field norm `re² + im²`.
    pub fn norm(self) -> Int {
        self.re * self.re + self.im * self.im
    }

    /// Coordinate-sum parity of this number.
    pub fn sigma(self) -> u8 {
        sigma(self.re, self.im)
    }

    /// True for zero.
    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Exact quotient `self / rhs`, when `rhs` divides `self` in `Z[i]`.
    pub fn checked_div(self, rhs: GaussianInt) -> Option<GaussianInt> {
        if rhs.is_zero() {
            return None;
        }
        let n = rhs.norm();
        let w = self * rhs.conj();
        (n.divides(w.re) && n.divides(w.im)).then(|| GaussianInt {
            re: w.re.div_exact(n),
            im: w.im.div_exact(n),
        })
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: GaussianInt) -> GaussianInt {
        GaussianInt {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// True when `1 + i` divides `v` in `Z[i]`, i.e. `v = (a + bi)(1 + i)` for
/// some Gaussian integer. Equivalent to `sigma(v) == 0`.
pub fn divisible_by_one_plus_i(v: GaussianInt) -> bool {
    // v / (1 + i) = v·(1 − i) / 2, so divisibility means both components of
    // v·(1 − i) are even.
    let w = v * GaussianInt::new(1, -1);
    w.re.is_even() && w.im.is_even()
}

/// Splits `v = 2^k · v'` with the components of `v'` not both even.
/// Errors on zero, which is divisible by every power of two.
pub fn split_power_of_two(v: GaussianInt) -> Result<(u32, GaussianInt), Error> {
    if v.is_zero() {
        return Err(Error::ZeroSplit);
    }
    let tz = |n: Int| {
        if n.is_zero() {
            u32::MAX
        } else {
            n.raw().unsigned_abs().trailing_zeros()
        }
    };
    let k = tz(v.re).min(tz(v.im));
    let p = Int::pow2(k);
    Ok((
        k,
        GaussianInt {
            re: v.re.div_exact(p),
            im: v.im.div_exact(p),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i128, im: i128) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn arithmetic() {
        assert_eq!(g(1, 1) * g(1, -1), g(2, 0));
        assert_eq!(g(3, 4).conj(), g(3, -4));
        assert_eq!(g(3, 4).norm(), Int::new(25));
        assert_eq!(g(1, 2) + g(3, -5), g(4, -3));
        assert_eq!(-g(1, -2), g(-1, 2));
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(Int::new(2), Int::new(3)), 1);
        assert_eq!(sigma(Int::new(19), Int::new(17)), 0);
        assert_eq!(sigma(Int::ZERO, Int::ZERO), 0);
        assert_eq!(sigma(Int::new(-1), Int::new(2)), 1);
    }

    #[test]
    fn one_plus_i_divisibility() {
        assert!(divisible_by_one_plus_i(g(1, 1)));
        assert!(!divisible_by_one_plus_i(g(1, 0)));
        assert!(divisible_by_one_plus_i(g(2, 0)));
        assert!(divisible_by_one_plus_i(GaussianInt::ZERO));
        assert!(!divisible_by_one_plus_i(g(2, 1)));
    }

    #[test]
    fn exact_division() {
        // 2 = (1 + i)(1 − i)
        assert_eq!(g(2, 0).checked_div(g(1, 1)), Some(g(1, -1)));
        assert_eq!(g(1, 0).checked_div(g(1, 1)), None);
        assert_eq!(g(5, 0).checked_div(GaussianInt::ZERO), None);
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_power_of_two(g(12, 4)), Ok((2, g(3, 1))));
        assert_eq!(split_power_of_two(g(3, 5)), Ok((0, g(3, 5))));
        assert_eq!(split_power_of_two(g(0, 8)), Ok((3, g(0, 1))));
        assert_eq!(split_power_of_two(g(-4, 0)), Ok((2, g(-1, 0))));
        assert_eq!(split_power_of_two(GaussianInt::ZERO), Err(Error::ZeroSplit));
    }
}
