use core::fmt;
use core::ops::Add;

/// An element of `Z2 x Z2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Degree {
    a1: bool,
    a2: bool,
}

impl Degree {
    pub const ZERO: Degree = Degree::new(false, false);
    pub const D01: Degree = Degree::new(false, true);
    pub const D10: Degree = Degree::new(true, false);
    pub const D11: Degree = Degree::new(true, true);
    pub const ALL: [Degree; 4] = [Degree::ZERO, Degree::D01, Degree::D10, Degree::D11];

    pub const fn new(a1: bool, a2: bool) -> Self {
        Degree { a1, a2 }
    }

    pub const fn components(self) -> (u8, u8) {
        (self.a1 as u8, self.a2 as u8)
    }

    /// `a1*b1 + a2*b2 mod 2`.
    pub const fn dot(self, other: Degree) -> u8 {
        ((self.a1 & other.a1) ^ (self.a2 & other.a2)) as u8
    }

    /// `(-1)^(a.b)`: `1` when the bracket is a commutator, `-1` for an
    /// anticommutator.
    pub const fn sign(self, other: Degree) -> i32 {
        if self.dot(other) == 0 {
            1
        } else {
            -1
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree::new(self.a1 ^ rhs.a1, self.a2 ^ rhs.a2)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.components();
        write!(f, "({a},{b})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_products() {
        assert_eq!(Degree::ZERO.dot(Degree::ZERO), 0);
        assert_eq!(Degree::D01.dot(Degree::D01), 1);
        assert_eq!(Degree::D10.dot(Degree::D10), 1);
        assert_eq!(Degree::D11.dot(Degree::D11), 0);
    }

    #[test]
    fn group_laws() {
        for a in Degree::ALL {
            assert_eq!(a + Degree::ZERO, a);
            assert_eq!(a + a, Degree::ZERO);
            for b in Degree::ALL {
                assert_eq!(a.dot(b), b.dot(a));
                assert_eq!(a + b, b + a);
                for c in Degree::ALL {
                    assert_eq!((a + b) + c, a + (b + c));
                    // bilinearity of the sign form
                    assert_eq!(a.dot(b + c), (a.dot(b) + a.dot(c)) % 2);
                }
            }
        }
    }
}
