//! The general Lie bracket of `g(l1, l2)` and its central extension.
//!
//! [`color_bracket`] implements the full table on generators; every pair
//! not listed there brackets to zero. Graded antisymmetry
//! `[[b, a]] = -(-1)^(a.b) [[a, b]]` is used to fill in the reversed
//! orientation of each listed pair.

use crate::element::{Element, ElementBuilder};
use crate::error::{Error, Result};
use crate::generator::{Central, Generator};
use crate::halfint::HalfInt;
use crate::params::{AlgebraParams, RhoMode};
use crate::scalar::Scalar;

fn s(h: HalfInt) -> Scalar {
    Scalar::from(h)
}

fn central(c: Scalar, z: Central) -> Element {
    Element::term(c, Generator::Central(z))
}

/// `(m l - r)`, the coefficient of the density-module action.
fn action(m: i32, l: HalfInt, r: HalfInt) -> Scalar {
    s(l * m - r)
}

/// The central-term functions of the extended algebra at fixed `(l1, l2)`.
///
/// Each method returns a multiple of a single central symbol (possibly a
/// sum of two for `kappa` and `zeta` at `l1 = l2 = 0`), or zero when the
/// delta factors vanish.
#[derive(Clone, Copy, Debug)]
pub struct CocycleTables {
    l1: HalfInt,
    l2: HalfInt,
    rho_mode: RhoMode,
}

impl CocycleTables {
    pub fn new(p: &AlgebraParams) -> Self {
        CocycleTables {
            l1: p.l1(),
            l2: p.l2(),
            rho_mode: p.rho,
        }
    }

    fn at(&self, a: i32, b: i32) -> bool {
        self.l1.twice() == a && self.l2.twice() == b
    }

    /// Central term of `[L_m, P_{-m}]`.
    pub fn p(&self, m: i32) -> Element {
        let m = m as i64;
        let c = match self.l1.twice() {
            0 => m * m,
            2 => m * m * m,
            _ => 0,
        };
        central(Scalar::from_int(c), Central::Cp)
    }

    /// Central term of `[L_m, X_{-m}]`.
    pub fn x(&self, m: i32) -> Element {
        let m = m as i64;
        let c = match self.l2.twice() {
            0 => m * m,
            2 => m * m * m,
            _ => 0,
        };
        central(Scalar::from_int(c), Central::Cx)
    }

    /// Central term of `[P_rs, P_t]`, `t = -r-s`.
    pub fn h(&self, r: HalfInt, t: HalfInt) -> Element {
        if self.l1.is_zero() {
            central(s(r + t), Central::Ch)
        } else {
            Element::zero()
        }
    }

    /// Central term of `[X_uv, X_w]`, `w = -u-v`.
    pub fn eta(&self, u: HalfInt, v: HalfInt) -> Element {
        if self.l2.is_zero() {
            central(s(u - v), Central::Ceta)
        } else {
            Element::zero()
        }
    }

    /// Central term of `[T_ru, P_s]`, `u = -r-s`.
    pub fn kappa(&self, r: HalfInt, t: HalfInt) -> Element {
        let (r, t) = (s(r), s(t));
        let mut b = ElementBuilder::new();
        if self.at(0, 0) {
            b.add(r + t, Generator::Central(Central::CkapS));
            b.add(r - t, Generator::Central(Central::CkapA));
        }
        if self.at(1, 0) {
            b.add(r * r - t * t, Generator::Central(Central::CkapA));
        }
        if self.at(0, 2) {
            b.add(r * t, Generator::Central(Central::CkapS));
        }
        b.build()
    }

    /// Central term of `{T_ru, X_v}`, `r = -u-v`.
    pub fn zeta(&self, u: HalfInt, v: HalfInt) -> Element {
        let (u, v) = (s(u), s(v));
        let mut b = ElementBuilder::new();
        if self.at(0, 0) {
            b.add(u + v, Generator::Central(Central::CzetS));
            b.add(u - v, Generator::Central(Central::CzetA));
        }
        if self.at(0, 1) {
            b.add(u * u - v * v, Generator::Central(Central::CzetA));
        }
        if self.at(2, 0) {
            b.add(u * v, Generator::Central(Central::CzetS));
        }
        b.build()
    }

    /// Central term of `[X_uv, P_r]`: `-2` times the antisymmetric part of
    /// `zeta`.
    pub fn q(&self, u: HalfInt, v: HalfInt) -> Element {
        let (u, v) = (s(u), s(v));
        let c = if self.at(0, 0) {
            u - v
        } else if self.at(0, 1) {
            u * u - v * v
        } else {
            return Element::zero();
        };
        central(Scalar::from_int(-2) * c, Central::CzetA)
    }

    /// Central term of `[P_rs, X_u]`.
    ///
    /// In [`RhoMode::Corrected`] this is `-2` times the symmetric part of
    /// `kappa`. The verbatim mode uses the antisymmetric `c_kA` expression,
    /// which is only meaningful relative to the storage order `r <= s`.
    pub fn rho(&self, r: HalfInt, t: HalfInt) -> Element {
        let (r, t) = (s(r), s(t));
        let minus_two = Scalar::from_int(-2);
        match self.rho_mode {
            RhoMode::Corrected => {
                let c = if self.at(0, 0) {
                    r + t
                } else if self.at(0, 2) {
                    r * t
                } else {
                    return Element::zero();
                };
                central(minus_two * c, Central::CkapS)
            }
            RhoMode::TheoremVerbatim => {
                let c = if self.at(0, 0) {
                    r - t
                } else if self.at(1, 0) {
                    r * r - t * t
                } else {
                    return Element::zero();
                };
                central(minus_two * c, Central::CkapA)
            }
        }
    }
}

/// `[L_m, L_n] = (m-n) L_{m+n} + c/12 m(m^2-1) delta_{m+n,0}`.
pub fn vir_bracket(m: i32, n: i32) -> Element {
    let mut b = ElementBuilder::new();
    b.add(Scalar::from_int((m - n) as i64), Generator::L(m + n));
    if m + n == 0 {
        let m = m as i64;
        b.add(Scalar::from_ratio(m * (m * m - 1), 12), Generator::C);
    }
    b.build()
}

/// The bracket of the superalgebra `v(l1, l2) = Vir + F(-l1) + PiF(-l2)`.
pub fn super_bracket(a: &Generator, b: &Generator, p: &AlgebraParams) -> Result<Element> {
    let plain = p.extended(false);
    for g in [a, b] {
        match g {
            Generator::L(_) | Generator::P(_) | Generator::X(_) | Generator::Central(Central::C) => {
                plain.validate(g)?
            }
            _ => return Err(Error::NotInSuperalgebra(*g)),
        }
    }
    Ok(super_bracket_unchecked(a, b, p))
}

pub(crate) fn super_bracket_unchecked(a: &Generator, b: &Generator, p: &AlgebraParams) -> Element {
    let oriented = |a: &Generator, b: &Generator| -> Option<Element> {
        match (*a, *b) {
            (Generator::L(m), Generator::L(n)) => Some(vir_bracket(m, n)),
            (Generator::L(m), Generator::P(r)) => {
                Some(Element::term(action(m, p.l1(), r), Generator::P(r + m)))
            }
            (Generator::L(m), Generator::X(u)) => {
                Some(Element::term(action(m, p.l2(), u), Generator::X(u + m)))
            }
            _ => None,
        }
    };
    oriented(a, b)
        .or_else(|| oriented(b, a).map(|e| -e))
        .unwrap_or_default()
}

/// The general Lie bracket of two generators of `g(l1, l2)`, including the
/// central terms when `p.extended`.
pub fn color_bracket(a: &Generator, b: &Generator, p: &AlgebraParams) -> Result<Element> {
    p.validate(a)?;
    p.validate(b)?;
    Ok(color_bracket_unchecked(a, b, p))
}

/// [`color_bracket`] without the validity check; callers guarantee both
/// generators belong to the algebra.
pub fn color_bracket_unchecked(a: &Generator, b: &Generator, p: &AlgebraParams) -> Element {
    if let Some(e) = oriented(a, b, p) {
        return e;
    }
    if let Some(e) = oriented(b, a, p) {
        let sign = -a.degree().sign(b.degree());
        return e.scale(Scalar::from_int(sign as i64));
    }
    Element::zero()
}

fn oriented(a: &Generator, b: &Generator, p: &AlgebraParams) -> Option<Element> {
    use Generator::*;
    let (l1, l2) = (p.l1(), p.l2());
    let tables = CocycleTables::new(p);
    let ext = p.extended;
    let zero_sum = |x: HalfInt| x.is_zero();
    let e = match (*a, *b) {
        (L(m), L(n)) => vir_bracket(m, n),
        (L(m), P(r)) => {
            let mut e = Element::term(action(m, l1, r), P(r + m));
            if ext && zero_sum(r + m) {
                e = e + tables.p(m);
            }
            e
        }
        (L(m), X(u)) => {
            let mut e = Element::term(action(m, l2, u), X(u + m));
            if ext && zero_sum(u + m) {
                e = e + tables.x(m);
            }
            e
        }
        (L(m), P2(r, t)) => Element::from_terms([
            (P2(r + m, t), action(m, l1, r)),
            (P2(r, t + m), action(m, l1, t)),
        ]),
        (L(m), X2(u, v)) => Element::from_terms([
            (X2(u + m, v), action(m, l2, u)),
            (X2(u, v + m), action(m, l2, v)),
        ]),
        (L(m), T(r, u)) => Element::from_terms([
            (T(r + m, u), action(m, l1, r)),
            (T(r, u + m), action(m, l2, u)),
        ]),
        (P(r), P(t)) => Element::from_generator(P2(r, t)),
        (X(u), X(v)) => Element::from_generator(X2(u, v)),
        (P(r), X(u)) => Element::from_generator(T(r, u)),
        (P2(r, t), P(w)) if ext && zero_sum(r + t + w) => tables.h(r, t),
        (X2(u, v), X(w)) if ext && zero_sum(u + v + w) => tables.eta(u, v),
        (P2(r, t), X(u)) if ext && zero_sum(r + t + u) => tables.rho(r, t),
        (X2(u, v), P(r)) if ext && zero_sum(u + v + r) => tables.q(u, v),
        (T(r, u), P(t)) if ext && zero_sum(r + u + t) => tables.kappa(r, t),
        (T(r, u), X(v)) if ext && zero_sum(r + u + v) => tables.zeta(u, v),
        _ => return None,
    };
    Some(e)
}

/// Bilinear extension of [`color_bracket`] to arbitrary elements.
pub fn bracket_elements(a: &Element, b: &Element, p: &AlgebraParams) -> Result<Element> {
    let mut out = ElementBuilder::new();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            let e = color_bracket(x, y, p)?;
            out.add_element(*cx * *cy, &e);
        }
    }
    Ok(out.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Degree;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn params(a: i32, b: i32) -> AlgebraParams {
        AlgebraParams::from_twice(a, b).unwrap()
    }

    #[test]
    fn virasoro() {
        assert_eq!(
            vir_bracket(2, -2),
            Element::from_terms([
                (Generator::L(0), Scalar::from_int(4)),
                (Generator::C, Scalar::from_ratio(1, 2)),
            ])
        );
        for m in -5..=5 {
            assert!(vir_bracket(m, m).is_zero());
        }
        assert_eq!(vir_bracket(1, -1), Element::term(Scalar::from_int(2), Generator::L(0)));
    }

    #[test]
    fn superalgebra_action() {
        let p = params(1, 0);
        let e = super_bracket(&Generator::L(2), &Generator::P(h(-1)), &p).unwrap();
        assert_eq!(e, Element::term(Scalar::from_ratio(3, 2), Generator::P(h(3))));
        let p = params(0, 0);
        let (x1, x2) = (Generator::X(h(2)), Generator::X(h(-4)));
        assert!(super_bracket(&x1, &x2, &p).unwrap().is_zero());
        assert!(super_bracket(&Generator::P(h(0)), &Generator::C, &p).unwrap().is_zero());
        assert!(super_bracket(&Generator::P2(h(0), h(0)), &Generator::L(1), &p).is_err());
    }

    #[test]
    fn color_table_examples() {
        let p = params(0, 0).extended(true);
        let (r, t) = (h(2), h(-6));
        assert_eq!(
            color_bracket(&Generator::P(r), &Generator::P(t), &p).unwrap(),
            Element::from_generator(Generator::P2(t, r))
        );
        assert_eq!(
            color_bracket(&Generator::L(3), &Generator::P(h(-6)), &p).unwrap(),
            Element::from_terms([
                (Generator::P(h(0)), Scalar::from_int(3)),
                (Generator::Central(Central::Cp), Scalar::from_int(9)),
            ])
        );
        // X(1), T(0, 1): index sum 2, no central term
        assert!(color_bracket(&Generator::X(h(2)), &Generator::T(h(0), h(2)), &p)
            .unwrap()
            .is_zero());
        let p = params(2, 2);
        assert_eq!(
            color_bracket(&Generator::L(1), &Generator::T(h(0), h(2)), &p).unwrap(),
            Element::from_generator(Generator::T(h(2), h(2)))
        );
    }

    #[test]
    fn bilinear_extension() {
        let p = params(2, 0);
        let a = Element::from_generator(Generator::L(1)) + Element::from_generator(Generator::L(2));
        let b = Element::from_generator(Generator::P(h(0)));
        assert_eq!(
            bracket_elements(&a, &b, &p).unwrap(),
            Element::from_terms([
                (Generator::P(h(2)), Scalar::one()),
                (Generator::P(h(4)), Scalar::from_int(2)),
            ])
        );
        assert!(bracket_elements(&a, &Element::zero(), &p).unwrap().is_zero());
        assert!(bracket_elements(&Element::from_generator(Generator::C), &a, &p)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn central_terms_respect_degree() {
        let p = params(0, 0).extended(true);
        let cases = [
            (Generator::P2(h(-2), h(4)), Generator::X(h(-2))),
            (Generator::X2(h(-2), h(4)), Generator::P(h(-2))),
            (Generator::T(h(2), h(4)), Generator::P(h(-6))),
            (Generator::T(h(2), h(4)), Generator::X(h(-6))),
            (Generator::P2(h(2), h(4)), Generator::P(h(-6))),
            (Generator::X2(h(2), h(4)), Generator::X(h(-6))),
        ];
        for (a, b) in cases {
            let e = color_bracket(&a, &b, &p).unwrap();
            assert!(!e.is_zero(), "{a} {b}");
            assert_eq!(e.degree(), Some(a.degree() + b.degree()));
        }
        assert_eq!(Degree::D01 + Degree::D10, Degree::D11);
    }

    #[test]
    fn rho_modes_differ_only_where_expected() {
        let corrected = CocycleTables::new(&params(0, 2).extended(true));
        assert_eq!(
            corrected.rho(h(2), h(4)),
            central(Scalar::from_int(-4), Central::CkapS)
        );
        let verbatim = CocycleTables::new(&params(0, 2).with_rho(RhoMode::TheoremVerbatim));
        assert!(verbatim.rho(h(2), h(4)).is_zero());
        let verbatim = CocycleTables::new(&params(0, 0).with_rho(RhoMode::TheoremVerbatim));
        assert_eq!(
            verbatim.rho(h(-2), h(2)),
            central(Scalar::from_int(4), Central::CkapA)
        );
    }
}
