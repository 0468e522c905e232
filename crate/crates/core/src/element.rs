//! Finite linear combinations of generators.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::degree::Degree;
use crate::generator::Generator;
use crate::scalar::Scalar;

/// A linear combination of canonical generators with Gaussian-rational
/// coefficients. Terms are sorted by generator; zero coefficients are never
/// stored, so structural equality is algebraic equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: Vec<(Generator, Scalar)>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn from_generator(g: Generator) -> Self {
        Element::term(Scalar::one(), g)
    }

    /// `c * g`, with `g` canonicalized.
    pub fn term(c: Scalar, g: Generator) -> Self {
        let mut e = Element::zero();
        e.push(c, g);
        e.normalize();
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Generator, Scalar)>>(terms: I) -> Self {
        let mut e = Element::zero();
        for (g, c) in terms {
            e.push(c, g);
        }
        e.normalize();
        e
    }

    /// Appends without normalizing; call [`Element::normalize`] afterwards.
    fn push(&mut self, c: Scalar, g: Generator) {
        if c.is_zero() {
            return;
        }
        if let Some((g, sign)) = g.canonicalize() {
            let c = if sign < 0 { -c } else { c };
            self.terms.push((g, c));
        }
    }

    fn normalize(&mut self) {
        self.terms.sort_by_key(|t| t.0);
        let mut out: Vec<(Generator, Scalar)> = Vec::with_capacity(self.terms.len());
        for (g, c) in self.terms.drain(..) {
            match out.last_mut() {
                Some((last, acc)) if *last == g => *acc += c,
                _ => out.push((g, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        self.terms = out;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Scalar)> {
        self.terms.iter().map(|(g, c)| (g, c))
    }

    pub fn coefficient(&self, g: &Generator) -> Scalar {
        self.terms
            .binary_search_by(|(h, _)| h.cmp(g))
            .map(|i| self.terms[i].1)
            .unwrap_or_default()
    }

    /// `c * self`.
    pub fn scale(&self, c: Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|&(g, a)| (g, a * c)).collect(),
        }
    }

    /// Complex-conjugates every coefficient.
    pub fn conjugate_scalars(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|&(g, a)| (g, a.conj())).collect(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: Scalar, other: &Element) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        self.terms.extend(other.terms.iter().map(|&(g, a)| (g, a * c)));
        self.normalize();
    }

    /// The common degree of all terms, or `None` for zero or mixed elements.
    pub fn degree(&self) -> Option<Degree> {
        let mut it = self.terms.iter().map(|(g, _)| g.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn non_central(&self) -> impl Iterator<Item = (&Generator, &Scalar)> {
        self.iter().filter(|(g, _)| !g.is_central())
    }

    pub fn central_part(&self) -> Element {
        Element {
            terms: self.terms.iter().filter(|(g, _)| g.is_central()).cloned().collect(),
        }
    }

    pub fn without_central(&self) -> Element {
        Element {
            terms: self.terms.iter().filter(|(g, _)| !g.is_central()).cloned().collect(),
        }
    }
}

/// Accumulates terms cheaply and normalizes once.
#[derive(Default, Debug)]
pub struct ElementBuilder {
    inner: Element,
}

impl ElementBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, c: Scalar, g: Generator) -> &mut Self {
        self.inner.push(c, g);
        self
    }

    pub fn add_element(&mut self, c: Scalar, e: &Element) -> &mut Self {
        if !c.is_zero() {
            self.inner.terms.extend(e.terms.iter().map(|&(g, a)| (g, a * c)));
        }
        self
    }

    pub fn build(mut self) -> Element {
        self.inner.normalize();
        self.inner
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Element::from_generator(g)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(Scalar::one(), rhs);
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(-Scalar::one(), rhs);
        out
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-Scalar::one())
    }
}

impl Mul<Element> for Scalar {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        rhs.scale(self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c == Scalar::one() {
                write!(f, "{g}")?;
            } else if c.is_real() {
                write!(f, "{c}*{g}")?;
            } else {
                write!(f, "({c})*{g}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Central;
    use crate::halfint::HalfInt;

    #[test]
    fn cancellation_and_scaling() {
        let a = Element::term(Scalar::from_int(2), Generator::L(0));
        let b = Element::term(Scalar::from_int(-2), Generator::L(0));
        assert!((a + b).is_zero());
        let c = Element::from_generator(Generator::C).scale(Scalar::from_ratio(1, 12));
        assert_eq!(c.coefficient(&Generator::C), Scalar::from_ratio(1, 12));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn conjugation() {
        let p0 = Generator::P(HalfInt::ZERO);
        let e = Element::term(Scalar::from_int(2) + Scalar::i(), p0);
        assert_eq!(e.conjugate_scalars(), Element::term(Scalar::from_int(2) - Scalar::i(), p0));
    }

    #[test]
    fn canonicalizes_composites() {
        let (u, v) = (HalfInt::from_int(1), HalfInt::from_int(3));
        let e = Element::from_generator(Generator::X2(v, u));
        assert_eq!(e, Element::term(-Scalar::one(), Generator::X2(u, v)));
        assert!(Element::from_generator(Generator::X2(u, u)).is_zero());
        let sum = &Element::from_generator(Generator::X2(u, v)) + &e;
        assert!(sum.is_zero());
    }

    #[test]
    fn degree_of_mixed_element() {
        let e = Element::from_terms([
            (Generator::L(1), Scalar::one()),
            (Generator::Central(Central::Cp), Scalar::one()),
        ]);
        assert_eq!(e.degree(), None);
        assert_eq!(Element::from_generator(Generator::L(2)).degree(), Some(Degree::ZERO));
        assert_eq!(Element::zero().degree(), None);
    }
}
