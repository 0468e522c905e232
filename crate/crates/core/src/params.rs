use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::generator::{Central, Generator};
use crate::halfint::HalfInt;

/// Which formula backs the central term of `[P_rs, X_u]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum RhoMode {
    /// `rho(r,s) = -2 kappa_S(r,s)`, symmetric in `r, s`. Satisfies the
    /// graded Jacobi identity.
    #[default]
    Corrected,
    /// The antisymmetric `c_kA` formula of the published classification,
    /// evaluated on the stored index order `r <= s`.
    TheoremVerbatim,
}

impl fmt::Display for RhoMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RhoMode::Corrected => "corrected",
            RhoMode::TheoremVerbatim => "theorem-verbatim",
        })
    }
}

/// Spin values `(l1, l2)` selecting the algebra `g(l1, l2)`, plus whether
/// the central extension is switched on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraParams {
    l1: HalfInt,
    l2: HalfInt,
    pub extended: bool,
    pub rho: RhoMode,
}

impl AlgebraParams {
    pub fn new(l1: HalfInt, l2: HalfInt) -> Result<Self> {
        for l in [l1, l2] {
            if l.is_negative() {
                return Err(Error::NotASpinValue(l));
            }
        }
        Ok(AlgebraParams {
            l1,
            l2,
            extended: false,
            rho: RhoMode::Corrected,
        })
    }

    /// Shorthand taking `2*l1`, `2*l2`.
    pub fn from_twice(l1: i32, l2: i32) -> Result<Self> {
        Self::new(HalfInt::from_twice(l1), HalfInt::from_twice(l2))
    }

    pub fn extended(mut self, on: bool) -> Self {
        self.extended = on;
        self
    }

    pub fn with_rho(mut self, rho: RhoMode) -> Self {
        self.rho = rho;
        self
    }

    pub fn l1(&self) -> HalfInt {
        self.l1
    }

    pub fn l2(&self) -> HalfInt {
        self.l2
    }

    /// Central symbols present in this algebra. `c` is always there; the
    /// rest only with the extension switched on.
    pub fn centrals(&self) -> Vec<Central> {
        Central::ALL
            .into_iter()
            .filter(|c| *c == Central::C || (self.extended && c.admissible(self.l1, self.l2)))
            .collect()
    }

    pub fn validate(&self, g: &Generator) -> Result<()> {
        let (l1, l2) = (self.l1, self.l2);
        let ok = match *g {
            Generator::L(_) => true,
            Generator::P(r) => r.same_lattice(l1),
            Generator::X(u) => u.same_lattice(l2),
            Generator::P2(r, s) => r.same_lattice(l1) && s.same_lattice(l1) && r <= s,
            Generator::X2(u, v) => u.same_lattice(l2) && v.same_lattice(l2) && u < v,
            Generator::T(r, u) => r.same_lattice(l1) && u.same_lattice(l2),
            Generator::Central(c) => c == Central::C || (self.extended && c.admissible(l1, l2)),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGenerator {
                generator: *g,
                l1,
                l2,
            })
        }
    }
}

/// A finite truncation of the mode indices: `|m| <= m_max`, `|r| <= r_max`,
/// `|u| <= u_max`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Window {
    pub m_max: i32,
    pub r_max: HalfInt,
    pub u_max: HalfInt,
}

impl Window {
    pub fn new(m_max: i32, r_max: HalfInt, u_max: HalfInt) -> Result<Self> {
        if m_max < 1 || r_max < HalfInt::ONE || u_max < HalfInt::ONE {
            return Err(Error::EmptyWindow);
        }
        Ok(Window { m_max, r_max, u_max })
    }

    /// Same bound `n` on every index family.
    pub fn uniform(n: i32) -> Result<Self> {
        Self::new(n, HalfInt::from_int(n), HalfInt::from_int(n))
    }

    fn in_r(&self, r: HalfInt) -> bool {
        r.abs() <= self.r_max
    }

    fn in_u(&self, u: HalfInt) -> bool {
        u.abs() <= self.u_max
    }

    /// Central symbols are always inside.
    pub fn contains(&self, g: &Generator) -> bool {
        match *g {
            Generator::L(m) => m.abs() <= self.m_max,
            Generator::P(r) => self.in_r(r),
            Generator::X(u) => self.in_u(u),
            Generator::P2(r, s) => self.in_r(r) && self.in_r(s),
            Generator::X2(u, v) => self.in_u(u) && self.in_u(v),
            Generator::T(r, u) => self.in_r(r) && self.in_u(u),
            Generator::Central(_) => true,
        }
    }

    /// Every valid non-central generator inside the window, sorted.
    pub fn generators(&self, p: &AlgebraParams) -> Vec<Generator> {
        let rs: Vec<HalfInt> = HalfInt::lattice(p.l1(), self.r_max).collect();
        let us: Vec<HalfInt> = HalfInt::lattice(p.l2(), self.u_max).collect();
        let mut out = Vec::new();
        out.extend((-self.m_max..=self.m_max).map(Generator::L));
        out.extend(rs.iter().map(|&r| Generator::P(r)));
        out.extend(us.iter().map(|&u| Generator::X(u)));
        for (i, &r) in rs.iter().enumerate() {
            for &s in &rs[i..] {
                out.push(Generator::P2(r, s));
            }
        }
        for (i, &u) in us.iter().enumerate() {
            for &v in &us[i + 1..] {
                out.push(Generator::X2(u, v));
            }
        }
        for &r in &rs {
            for &u in &us {
                out.push(Generator::T(r, u));
            }
        }
        out.sort();
        out
    }

    /// [`Window::generators`] followed by the central symbols of `p`.
    pub fn generators_with_centrals(&self, p: &AlgebraParams) -> Vec<Generator> {
        let mut out = self.generators(p);
        out.extend(p.centrals().into_iter().map(Generator::Central));
        out.sort();
        out
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m<={} r<={} u<={}", self.m_max, self.r_max, self.u_max)
    }
}
