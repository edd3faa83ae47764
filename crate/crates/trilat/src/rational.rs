//! Exact rational numbers over [`Int`].
//!
//! Values are always kept in canonical form: positive denominator, fraction
//! fully reduced. Two rationals are equal exactly when their fields are.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::{Error, Int};

/// A rational number `num / den` in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Int,
    den: Int,
}

impl Rational {
    /// Zero.
    pub const ZERO: Rational = Rational {
        num: Int::ZERO,
        den: Int::ONE,
    };
    /// One.
    pub const ONE: Rational = Rational {
        num: Int::ONE,
        den: Int::ONE,
    };

    /// Builds `num / den` in canonical form. Errors when `den` is zero.
    pub fn new(num: impl Into<Int>, den: impl Into<Int>) -> Result<Rational, Error> {
        Self::normalized(num.into(), den.into())
    }

    fn normalized(num: Int, den: Int) -> Result<Rational, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num, den)
        };
        let g = num.gcd(den);
        Ok(Rational {
            num: num.div_exact(g),
            den: den.div_exact(g),
        })
    }

    /// Like [`Rational::new`] for denominators known to be nonzero.
    fn exact(num: Int, den: Int) -> Rational {
        Self::normalized(num, den).expect("denominator is nonzero")
    }

    /// The embedded integer `n / 1`.
    pub fn from_int(n: impl Into<Int>) -> Rational {
        Rational {
            num: n.into(),
            den: Int::ONE,
        }
    }

    /// Numerator of the canonical form (carries the sign).
    pub const fn num(self) -> Int {
        self.num
    }

    /// Denominator of the canonical form (always positive).
    pub const fn den(self) -> Int {
        self.den
    }

    /// True when the value is an integer.
    pub fn is_integer(self) -> bool {
        self.den == Int::ONE
    }

    /// The value as an integer, when it is one.
    pub fn to_int(self) -> Option<Int> {
        self.is_integer().then_some(self.num)
    }

    /// True for zero.
    pub fn is_zero(self) -> bool {
        self.num.is_zero()
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(self, rhs: Rational) -> Result<Rational, Error> {
        if rhs.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational::exact(self.num * rhs.den, self.den * rhs.num))
    }

    /// `self * self`.
    pub fn square(self) -> Rational {
        self * self
    }
}

impl From<Int> for Rational {
    fn from(n: Int) -> Rational {
        Rational::from_int(n)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational::exact(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational::exact(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational::exact(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(rhs).expect("rational division by zero")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Int::ONE {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i128, d: i128) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn canonical_form() {
        let r = rat(4, 6);
        assert_eq!(r.num(), Int::new(2));
        assert_eq!(r.den(), Int::new(3));
        let r = rat(3, -9);
        assert_eq!(r.num(), Int::new(-1));
        assert_eq!(r.den(), Int::new(3));
        let r = rat(0, 5);
        assert_eq!(r, Rational::ZERO);
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert_eq!(rat(1, 2) - rat(1, 3), rat(1, 6));
        assert_eq!(rat(2, 3) * rat(9, 4), rat(3, 2));
        assert_eq!(rat(1, 2) / rat(3, 4), rat(2, 3));
        assert_eq!(-rat(1, 2), rat(-1, 2));
        assert_eq!(
            rat(1, 2).checked_div(Rational::ZERO),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn integrality() {
        assert!(!rat(4, 3).is_integer());
        assert!(rat(6, 2).is_integer());
        assert_eq!(rat(6, 2).to_int(), Some(Int::new(3)));
        assert_eq!(rat(4, 3).to_int(), None);
    }

    #[test]
    fn ordering() {
        assert!(rat(1, 3) < rat(1, 2));
        assert!(rat(-1, 2) < rat(-1, 3));
        assert!(rat(7, 7) == Rational::ONE);
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", rat(4, 6)), "2/3");
        assert_eq!(format!("{}", rat(-8, 2)), "-4");
        assert_eq!(format!("{}", rat(3, -2)), "-3/2");
    }
}
