//! Gaussian rationals `a + b i` with `a, b` exact rationals.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::halfint::HalfInt;

pub type Rational = num_rational::Ratio<i64>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub const fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Rational::from_integer(n), Rational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::new(Rational::new(num, den), Rational::zero())
    }

    pub fn re(&self) -> Rational {
        self.re
    }

    pub fn im(&self) -> Rational {
        self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(self) -> Self {
        Scalar::new(self.re, -self.im)
    }
}

impl From<HalfInt> for Scalar {
    fn from(h: HalfInt) -> Self {
        Scalar::from_ratio(h.twice() as i64, 2)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::new(r, Rational::zero())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::new(self.re * rhs.re, Rational::zero());
        }
        Scalar::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

fn fmt_ratio(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// `3/2`, `-i`, `1/2+3i`, `2-1/3i`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_ratio(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_ratio(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im == Rational::one() {
            f.write_str("i")
        } else if self.im == -Rational::one() {
            f.write_str("-i")
        } else {
            fmt_ratio(&self.im, f)?;
            f.write_str("i")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn gaussian_arithmetic() {
        let a = Scalar::from_int(2) + Scalar::i();
        let b = Scalar::from_int(1) - Scalar::i();
        assert_eq!(a * b, Scalar::from_int(3) - Scalar::i());
        assert_eq!(a.conj(), Scalar::from_int(2) - Scalar::i());
        assert_eq!(Scalar::i() * Scalar::i(), -Scalar::one());
        assert!((a - a).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::from_ratio(3, 2).to_string(), "3/2");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!((Scalar::from_ratio(1, 2) + Scalar::i() * Scalar::from_int(3)).to_string(), "1/2+3i");
        assert_eq!((Scalar::from_int(2) - Scalar::i() * Scalar::from_ratio(1, 3)).to_string(), "2-1/3i");
    }
}
