//! Overflow-checked integer scalar used throughout the crate.
//!
//! [`Int`] wraps `i128` with operators that panic on overflow instead of
//! wrapping. 128 bits cover every intermediate value for vertex coordinates
//! up to roughly 1e5 (the largest intermediates grow like the sixth power of
//! the coordinate size); beyond that a computation aborts loudly rather than
//! returning a silently corrupted result.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::Error;

/// Signed 128-bit integer whose arithmetic panics on overflow.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Int(i128);

impl Int {
    /// Zero.
    pub const ZERO: Int = Int(0);
    /// One.
    pub const ONE: Int = Int(1);

    /// Wraps a raw `i128`.
    pub const fn new(v: i128) -> Int {
        Int(v)
    }

    /// The wrapped `i128`.
    pub const fn raw(self) -> i128 {
        self.0
    }

    /// Absolute value.
    pub fn abs(self) -> Int {
        Int(self.0.checked_abs().expect("Int overflow in abs"))
    }

    /// True for zero.
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// True for values below zero.
    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// True for even values.
    pub const fn is_even(self) -> bool {
        self.0 & 1 == 0
    }

    /// Parity bit: 0 for even values, 1 for odd, independent of sign.
    pub const fn parity(self) -> u8 {
        (self.0 & 1) as u8
    }

    /// `2^k`. Panics for `k > 126`.
    pub fn pow2(k: u32) -> Int {
        assert!(k <= 126, "Int overflow in pow2");
        Int(1i128 << k)
    }

    /// True when `self` divides `n` exactly. Zero divides only zero.
    pub fn divides(self, n: Int) -> bool {
        if self.0 == 0 {
            n.0 == 0
        } else {
            n.0 % self.0 == 0
        }
    }

    /// Exact quotient. Panics when `divisor` does not divide `self`.
    pub fn div_exact(self, divisor: Int) -> Int {
        assert!(divisor.divides(self), "inexact division");
        Int(self.0 / divisor.0)
    }

    /// Truncating quotient and remainder. Panics on a zero divisor.
    pub fn div_rem(self, divisor: Int) -> (Int, Int) {
        let q = self.0.checked_div(divisor.0).expect("Int division by zero");
        let r = self.0.checked_rem(divisor.0).expect("Int division by zero");
        (Int(q), Int(r))
    }

    /// Least nonnegative residue of `self` modulo `m`.
    pub fn rem_euclid(self, m: Int) -> Int {
        assert!(!m.is_zero(), "Int modulus is zero");
        Int(self.0.rem_euclid(m.0))
    }

    /// Greatest common divisor, always nonnegative. `gcd(0, 0) = 0`.
    pub fn gcd(self, other: Int) -> Int {
        let (mut a, mut b) = (self.0.unsigned_abs(), other.0.unsigned_abs());
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        Int(i128::try_from(a).expect("Int overflow in gcd"))
    }
}

macro_rules! int_from {
    ($($t:ty),*) => {
        $(impl From<$t> for Int {
            fn from(v: $t) -> Int {
                Int(v as i128)
            }
        })*
    };
}
int_from!(i8, i16, i32, i64, i128, u8, u16, u32, u64);

impl Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        Int(self.0.checked_add(rhs.0).expect("Int overflow in add"))
    }
}

impl Sub for Int {
    type Output = Int;
    fn sub(self, rhs: Int) -> Int {
        Int(self.0.checked_sub(rhs.0).expect("Int overflow in sub"))
    }
}

impl Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        Int(self.0.checked_mul(rhs.0).expect("Int overflow in mul"))
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        Int(self.0.checked_neg().expect("Int overflow in neg"))
    }
}

impl AddAssign for Int {
    fn add_assign(&mut self, rhs: Int) {
        *self = *self + rhs;
    }
}

impl SubAssign for Int {
    fn sub_assign(&mut self, rhs: Int) {
        *self = *self - rhs;
    }
}

impl MulAssign for Int {
    fn mul_assign(&mut self, rhs: Int) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Greatest common divisor of a list of integers; 0 for an empty list.
pub fn gcd_many(values: &[Int]) -> Int {
    values.iter().fold(Int::ZERO, |g, v| g.gcd(*v))
}

/// Exact integer square root: `Some(r)` iff `r * r == n`, `None` when `n` is
/// not a perfect square, an error for negative `n`.
pub fn int_sqrt_exact(n: Int) -> Result<Option<Int>, Error> {
    if n.is_negative() {
        return Err(Error::NegativeSquareRoot);
    }
    let r = (n.0 as u128).isqrt() as i128;
    Ok((r * r == n.0).then_some(Int(r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i128) -> Int {
        Int::new(v)
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(int(12).gcd(int(18)), int(6));
        assert_eq!(int(-12).gcd(int(18)), int(6));
        assert_eq!(int(0).gcd(int(0)), int(0));
        assert_eq!(int(0).gcd(int(-7)), int(7));
    }

    #[test]
    fn gcd_many_examples() {
        let vals: Vec<Int> = [12, 0, 12, 18].into_iter().map(int).collect();
        assert_eq!(gcd_many(&vals), int(6));
        let vals: Vec<Int> = [4, 2, 1, 5].into_iter().map(int).collect();
        assert_eq!(gcd_many(&vals), int(1));
        assert_eq!(gcd_many(&[int(0), int(0)]), int(0));
        assert_eq!(gcd_many(&[]), int(0));
    }

    #[test]
    fn sqrt_exact_examples() {
        assert_eq!(int_sqrt_exact(int(25)), Ok(Some(int(5))));
        assert_eq!(int_sqrt_exact(int(117)), Ok(None));
        assert_eq!(int_sqrt_exact(int(0)), Ok(Some(int(0))));
        assert_eq!(int_sqrt_exact(int(1)), Ok(Some(int(1))));
        assert_eq!(int_sqrt_exact(int(2)), Ok(None));
        assert_eq!(int_sqrt_exact(int(-4)), Err(Error::NegativeSquareRoot));
    }

    #[test]
    fn sqrt_exact_matches_enumerated_squares() {
        // Independent cross-check: mark every square below the limit by
        // enumeration, then compare against int_sqrt_exact for each n.
        let limit = 5_000i128;
        let mut is_square = vec![false; limit as usize];
        let mut root = vec![0i128; limit as usize];
        let mut k = 0i128;
        while k * k < limit {
            is_square[(k * k) as usize] = true;
            root[(k * k) as usize] = k;
            k += 1;
        }
        for n in 0..limit {
            let got = int_sqrt_exact(int(n)).unwrap();
            if is_square[n as usize] {
                assert_eq!(got, Some(int(root[n as usize])), "n = {n}");
            } else {
                assert_eq!(got, None, "n = {n}");
            }
        }
    }

    #[test]
    fn divides_and_div_exact() {
        assert!(int(3).divides(int(-9)));
        assert!(!int(3).divides(int(10)));
        assert!(int(0).divides(int(0)));
        assert!(!int(0).divides(int(5)));
        assert_eq!(int(-9).div_exact(int(3)), int(-3));
    }

    #[test]
    fn parity_handles_negatives() {
        assert_eq!(int(-3).parity(), 1);
        assert_eq!(int(-4).parity(), 0);
        assert!(int(-4).is_even());
        assert!(!int(-3).is_even());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn mul_overflow_panics() {
        let _ = int(i128::MAX) * int(2);
    }

    #[test]
    #[should_panic(expected = "inexact division")]
    fn div_exact_rejects_inexact() {
        let _ = int(10).div_exact(int(3));
    }
}
