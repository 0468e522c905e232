//! Exact half-integers, stored as twice their value.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::string::ToString;

use crate::error::Error;

/// A number in `Z/2`, stored as `twice = 2 * value`.
///
/// Mode indices `r, s, t` live in `Z + l1` and `u, v, w` in `Z + l2`; both
/// are half-integers when the spin value is half-odd.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn to_integer(self) -> Option<i32> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    /// True when `self - other` is an integer.
    pub const fn same_lattice(self, other: HalfInt) -> bool {
        (self.0 - other.0) % 2 == 0
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Ascending points of `Z + offset` with absolute value at most `bound`.
    pub fn lattice(offset: HalfInt, bound: HalfInt) -> impl Iterator<Item = HalfInt> + Clone {
        let bound = bound.0.max(-1);
        let mut start = -bound;
        if (start - offset.0).rem_euclid(2) != 0 {
            start += 1;
        }
        (start..=bound).step_by(2).map(HalfInt)
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Accepts `"n"` or `"p/q"` as long as the value is a multiple of 1/2.
impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| bad())?,
                d.trim().parse::<i64>().map_err(|_| bad())?,
            ),
            None => (t.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if den == 0 || (2 * num) % den != 0 {
            return Err(bad());
        }
        let twice = i32::try_from(2 * num / den).map_err(|_| bad())?;
        Ok(HalfInt(twice))
    }
}

impl From<i32> for HalfInt {
    fn from(n: i32) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Add<i32> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i32) -> HalfInt {
        HalfInt(self.0 + 2 * rhs)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Mul<i32> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i32) -> HalfInt {
        HalfInt(self.0 * rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn parses_fraction_text() {
        assert_eq!("3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(3));
        assert_eq!("0".parse::<HalfInt>().unwrap(), HalfInt::ZERO);
        assert_eq!("-1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("x".parse::<HalfInt>().is_err());
        assert!("1/0".parse::<HalfInt>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for t in -7..=7 {
            let h = HalfInt::from_twice(t);
            assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        }
    }

    #[test]
    fn lattice_respects_offset_parity() {
        let ints: Vec<_> = HalfInt::lattice(HalfInt::ZERO, HalfInt::from_int(2)).collect();
        assert_eq!(ints, [-2, -1, 0, 1, 2].map(HalfInt::from_int));
        let halves: Vec<_> = HalfInt::lattice(HalfInt::from_twice(3), HalfInt::from_int(2)).collect();
        assert_eq!(halves, [-3, -1, 1, 3].map(HalfInt::from_twice));
        let halves: Vec<_> = HalfInt::lattice(HalfInt::HALF, HalfInt::from_twice(3)).collect();
        assert_eq!(halves, [-3, -1, 1, 3].map(HalfInt::from_twice));
    }
}
