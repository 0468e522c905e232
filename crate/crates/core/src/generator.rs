//! Basis symbols of the centrally extended color superalgebra.

use core::fmt;

use crate::degree::Degree;
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::params::AlgebraParams;

/// Central symbols. `C` is the Virasoro charge; the others are the
/// extension classes, each admissible only at particular `(l1, l2)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Central {
    C,
    Cp,
    Cx,
    Ch,
    Ceta,
    CkapA,
    CkapS,
    CzetA,
    CzetS,
}

impl Central {
    pub const ALL: [Central; 9] = [
        Central::C,
        Central::Cp,
        Central::Cx,
        Central::Ch,
        Central::Ceta,
        Central::CkapA,
        Central::CkapS,
        Central::CzetA,
        Central::CzetS,
    ];

    pub const fn degree(self) -> Degree {
        match self {
            Central::C => Degree::ZERO,
            Central::Cp | Central::Ch | Central::CzetA | Central::CzetS => Degree::D01,
            Central::Cx | Central::Ceta | Central::CkapA | Central::CkapS => Degree::D11,
        }
    }

    /// Whether the Kronecker-delta factors of the extension leave this
    /// symbol alive at `(l1, l2)`.
    pub fn admissible(self, l1: HalfInt, l2: HalfInt) -> bool {
        let (a, b) = (l1.twice(), l2.twice());
        match self {
            Central::C => true,
            Central::Cp => a == 0 || a == 2,
            Central::Cx => b == 0 || b == 2,
            Central::Ch => a == 0,
            Central::Ceta => b == 0,
            Central::CkapA => (a, b) == (0, 0) || (a, b) == (1, 0),
            Central::CkapS => (a, b) == (0, 0) || (a, b) == (0, 2),
            Central::CzetA => (a, b) == (0, 0) || (a, b) == (0, 1),
            Central::CzetS => (a, b) == (0, 0) || (a, b) == (2, 0),
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Central::C => "c",
            Central::Cp => "c_p",
            Central::Cx => "c_x",
            Central::Ch => "c_h",
            Central::Ceta => "c_eta",
            Central::CkapA => "c_kA",
            Central::CkapS => "c_kS",
            Central::CzetA => "c_zA",
            Central::CzetS => "c_zS",
        }
    }
}

/// Generator families, in the order used for sorting and for naming
/// triple shapes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    L,
    P,
    X,
    P2,
    X2,
    T,
    Central,
}

impl Family {
    pub const fn name(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::P => "P",
            Family::X => "X",
            Family::P2 => "P2",
            Family::X2 => "X2",
            Family::T => "T",
            Family::Central => "C",
        }
    }
}

/// A basis element. `P2(r, s)` is kept with `r <= s` and `X2(u, v)` with
/// `u < v`; use [`Generator::canonicalize`] on freshly built composites.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    L(i32),
    P(HalfInt),
    X(HalfInt),
    P2(HalfInt, HalfInt),
    X2(HalfInt, HalfInt),
    T(HalfInt, HalfInt),
    Central(Central),
}

impl Generator {
    pub const C: Generator = Generator::Central(Central::C);

    pub const fn family(&self) -> Family {
        match self {
            Generator::L(_) => Family::L,
            Generator::P(_) => Family::P,
            Generator::X(_) => Family::X,
            Generator::P2(..) => Family::P2,
            Generator::X2(..) => Family::X2,
            Generator::T(..) => Family::T,
            Generator::Central(_) => Family::Central,
        }
    }

    /// Degree by family; does not check validity.
    pub const fn degree(&self) -> Degree {
        match self {
            Generator::L(_) | Generator::P2(..) | Generator::X2(..) => Degree::ZERO,
            Generator::P(_) => Degree::D01,
            Generator::T(..) => Degree::D10,
            Generator::X(_) => Degree::D11,
            Generator::Central(c) => c.degree(),
        }
    }

    /// Sum of the mode indices (zero for central symbols).
    pub fn index(&self) -> HalfInt {
        match *self {
            Generator::L(m) => HalfInt::from_int(m),
            Generator::P(r) | Generator::X(r) => r,
            Generator::P2(a, b) | Generator::X2(a, b) | Generator::T(a, b) => a + b,
            Generator::Central(_) => HalfInt::ZERO,
        }
    }

    pub const fn is_central(&self) -> bool {
        matches!(self, Generator::Central(_))
    }

    /// Puts composite indices in storage order. Returns the canonical
    /// generator and the sign absorbed, or `None` for `X2(u, u) = 0`.
    pub fn canonicalize(self) -> Option<(Generator, i8)> {
        match self {
            Generator::P2(r, s) if r > s => Some((Generator::P2(s, r), 1)),
            Generator::X2(u, v) if u > v => Some((Generator::X2(v, u), -1)),
            Generator::X2(u, v) if u == v => None,
            g => Some((g, 1)),
        }
    }
}

/// Degree of a generator after checking it belongs to `g(l1, l2)` (or its
/// extension, when `p.extended`).
pub fn degree_of(g: &Generator, p: &AlgebraParams) -> Result<Degree> {
    p.validate(g)?;
    Ok(g.degree())
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(m) => write!(f, "L({m})"),
            Generator::P(r) => write!(f, "P({r})"),
            Generator::X(u) => write!(f, "X({u})"),
            Generator::P2(r, s) => write!(f, "P2({r},{s})"),
            Generator::X2(u, v) => write!(f, "X2({u},{v})"),
            Generator::T(r, u) => write!(f, "T({r},{u})"),
            Generator::Central(c) => f.write_str(c.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn degrees_by_family() {
        let p = AlgebraParams::from_twice(1, 0).unwrap().extended(true);
        assert_eq!(degree_of(&Generator::L(3), &p).unwrap(), Degree::ZERO);
        assert_eq!(degree_of(&Generator::T(h(1), h(0)), &p).unwrap(), Degree::D10);
        assert_eq!(degree_of(&Generator::Central(Central::CkapA), &p).unwrap(), Degree::D11);
        assert_eq!(degree_of(&Generator::P(h(-1)), &p).unwrap(), Degree::D01);
        // wrong parity for l1 = 1/2
        assert!(degree_of(&Generator::P(h(2)), &p).is_err());
        // c_p needs l1 in {0, 1}
        assert!(degree_of(&Generator::Central(Central::Cp), &p).is_err());
        // no extension symbols without the extension
        let plain = AlgebraParams::from_twice(0, 0).unwrap();
        assert!(degree_of(&Generator::Central(Central::Cx), &plain).is_err());
        assert!(degree_of(&Generator::C, &plain).is_ok());
    }

    #[test]
    fn canonical_order() {
        assert_eq!(
            Generator::P2(h(4), h(-2)).canonicalize(),
            Some((Generator::P2(h(-2), h(4)), 1))
        );
        assert_eq!(
            Generator::X2(h(6), h(2)).canonicalize(),
            Some((Generator::X2(h(2), h(6)), -1))
        );
        assert_eq!(Generator::X2(h(2), h(2)).canonicalize(), None);
        assert_eq!(Generator::L(4).canonicalize(), Some((Generator::L(4), 1)));
    }
}
