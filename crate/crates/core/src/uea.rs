//! Normal ordering in the enveloping algebra `U(v(l1, l2))` and the
//! realization of `g(l1, l2)` inside it.
//!
//! Words are products of `C`, `L_m`, `P_r`, `X_u`. A word is normal-ordered
//! when its factors ascend in the order `C < L < P < X` (by index inside a
//! family), with `X` factors strictly ascending. Adjacent out-of-order
//! factors are swapped with `ab = (-1)^{|a||b|} ba + [a, b]` where `[,]` is
//! the superbracket and only `X` is odd.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use crate::brackets::{color_bracket, super_bracket_unchecked};
use crate::degree::Degree;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::generator::{Central, Generator};
use crate::halfint::HalfInt;
use crate::params::{AlgebraParams, Window};
use crate::scalar::Scalar;

/// A generator of the superalgebra `v(l1, l2)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Factor {
    C,
    L(i32),
    P(HalfInt),
    X(HalfInt),
}

impl Factor {
    fn generator(self) -> Generator {
        match self {
            Factor::C => Generator::C,
            Factor::L(m) => Generator::L(m),
            Factor::P(r) => Generator::P(r),
            Factor::X(u) => Generator::X(u),
        }
    }

    fn from_generator(g: &Generator) -> Option<Factor> {
        Some(match *g {
            Generator::Central(Central::C) => Factor::C,
            Generator::L(m) => Factor::L(m),
            Generator::P(r) => Factor::P(r),
            Generator::X(u) => Factor::X(u),
            _ => return None,
        })
    }

    fn is_odd(self) -> bool {
        matches!(self, Factor::X(_))
    }

    pub fn degree(self) -> Degree {
        self.generator().degree()
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.generator(), f)
    }
}

/// A coefficient times an ordered product of factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    pub factors: Vec<Factor>,
    pub coefficient: Scalar,
}

impl Word {
    pub fn new(coefficient: Scalar, factors: Vec<Factor>) -> Self {
        Word {
            factors,
            coefficient,
        }
    }

    pub fn is_normal(&self) -> bool {
        self.factors.windows(2).all(|w| match (w[0], w[1]) {
            (Factor::X(a), Factor::X(b)) => a < b,
            (a, b) => a <= b,
        })
    }

    /// Sum of the factor degrees.
    pub fn degree(&self) -> Degree {
        self.factors.iter().fold(Degree::ZERO, |d, f| d + f.degree())
    }
}

/// Which adjacent inversion the rewriter resolves first. The result does
/// not depend on the choice; both are exposed so that can be tested.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

/// A linear combination of distinct normal-ordered words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NormalForm {
    terms: BTreeMap<Vec<Factor>, Scalar>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
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

    pub fn iter(&self) -> impl Iterator<Item = (&[Factor], &Scalar)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn coefficient(&self, factors: &[Factor]) -> Scalar {
        self.terms.get(factors).copied().unwrap_or_default()
    }

    fn accumulate(&mut self, factors: Vec<Factor>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(factors).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: Scalar) -> NormalForm {
        if c.is_zero() {
            return NormalForm::zero();
        }
        NormalForm {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), *v * c)).collect(),
        }
    }

    /// Product in `U(v)`, normal-ordered.
    pub fn mul(&self, other: &NormalForm, p: &AlgebraParams) -> NormalForm {
        let mut out = NormalForm::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut factors = a.clone();
                factors.extend_from_slice(b);
                out = out + normal_order(&Word::new(*ca * *cb, factors), p);
            }
        }
        out
    }
}

impl Add for NormalForm {
    type Output = NormalForm;
    fn add(mut self, rhs: NormalForm) -> NormalForm {
        for (w, c) in rhs.terms {
            self.accumulate(w, c);
        }
        self
    }
}

impl Sub for NormalForm {
    type Output = NormalForm;
    fn sub(self, rhs: NormalForm) -> NormalForm {
        self + rhs.scale(-Scalar::one())
    }
}

impl Mul<NormalForm> for Scalar {
    type Output = NormalForm;
    fn mul(self, rhs: NormalForm) -> NormalForm {
        rhs.scale(self)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for factor in w {
                write!(f, "*{factor}")?;
            }
        }
        Ok(())
    }
}

/// Position `i` such that factors `i, i+1` must be rewritten.
fn inversion(factors: &[Factor], strategy: Strategy) -> Option<usize> {
    let bad = |i: &usize| match (factors[*i], factors[*i + 1]) {
        (Factor::X(a), Factor::X(b)) => a >= b,
        (a, b) => a > b,
    };
    let n = factors.len().saturating_sub(1);
    match strategy {
        Strategy::LeftmostFirst => (0..n).find(bad),
        Strategy::RightmostFirst => (0..n).rev().find(bad),
    }
}

/// Rewrites a word into normal order using the relations of `v(l1, l2)`.
pub fn normal_order(w: &Word, p: &AlgebraParams) -> NormalForm {
    normal_order_with(w, p, Strategy::default())
}

pub fn normal_order_with(w: &Word, p: &AlgebraParams, strategy: Strategy) -> NormalForm {
    let mut out = NormalForm::zero();
    let mut pending = vec![(w.factors.clone(), w.coefficient)];
    while let Some((factors, c)) = pending.pop() {
        if c.is_zero() {
            continue;
        }
        let Some(i) = inversion(&factors, strategy) else {
            out.accumulate(factors, c);
            continue;
        };
        let (a, b) = (factors[i], factors[i + 1]);
        if a == b {
            // only reachable for X_u X_u, which vanishes
            continue;
        }
        let mut swapped = factors.clone();
        swapped.swap(i, i + 1);
        let sign = if a.is_odd() && b.is_odd() { -c } else { c };
        pending.push((swapped, sign));
        let bracket = super_bracket_unchecked(&a.generator(), &b.generator(), p);
        for (g, k) in bracket.iter() {
            let factor = Factor::from_generator(g).expect("superbracket stays in v");
            let mut shorter = Vec::with_capacity(factors.len() - 1);
            shorter.extend_from_slice(&factors[..i]);
            shorter.push(factor);
            shorter.extend_from_slice(&factors[i + 2..]);
            pending.push((shorter, c * *k));
        }
    }
    out
}

fn single(c: Scalar, factors: Vec<Factor>, p: &AlgebraParams) -> NormalForm {
    normal_order(&Word::new(c, factors), p)
}

/// The image of a generator of `g(l1, l2)` in `U(v)`:
/// `P_rs = 2 P_r P_s`, `X_uv = 2 X_u X_v`, `T_ru = 2 P_r X_u`.
pub fn realize(g: &Generator, p: &AlgebraParams) -> Result<NormalForm> {
    if let Generator::Central(z) = g {
        if *z != Central::C {
            return Err(Error::NoRealization(*g));
        }
    }
    // composites may arrive in either index order
    let Some((g, sign)) = g.canonicalize() else {
        return Ok(NormalForm::zero());
    };
    p.extended(false).validate(&g)?;
    let two = Scalar::from_int(sign as i64 * 2);
    let one = Scalar::from_int(sign as i64);
    Ok(match g {
        Generator::L(m) => single(one, vec![Factor::L(m)], p),
        Generator::P(r) => single(one, vec![Factor::P(r)], p),
        Generator::X(u) => single(one, vec![Factor::X(u)], p),
        Generator::Central(_) => single(one, vec![Factor::C], p),
        Generator::P2(r, s) => single(two, vec![Factor::P(r), Factor::P(s)], p),
        Generator::X2(u, v) => single(two, vec![Factor::X(u), Factor::X(v)], p),
        Generator::T(r, u) => single(two, vec![Factor::P(r), Factor::X(u)], p),
    })
}

/// Realizes every term of an element.
pub fn realize_element(e: &Element, p: &AlgebraParams) -> Result<NormalForm> {
    let mut out = NormalForm::zero();
    for (g, c) in e.iter() {
        out = out + realize(g, p)?.scale(*c);
    }
    Ok(out)
}

/// `ab - (-1)^(A.B) ba` for the realized generators.
pub fn color_bracket_uea(a: &Generator, b: &Generator, p: &AlgebraParams) -> Result<NormalForm> {
    let (ra, rb) = (realize(a, p)?, realize(b, p)?);
    let sign = Scalar::from_int(a.degree().sign(b.degree()) as i64);
    Ok(ra.mul(&rb, p) - rb.mul(&ra, p).scale(sign))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationMismatch {
    pub pair: [Generator; 2],
    /// The graded commutator computed in `U(v)`.
    pub enveloping: NormalForm,
    /// The realization of the abstract bracket.
    pub abstract_table: NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationReport {
    pub params: AlgebraParams,
    pub window: Window,
    pub pairs_checked: u64,
    pub mismatches: Vec<RealizationMismatch>,
}

impl RealizationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(&mut self, other: RealizationReport) {
        self.pairs_checked += other.pairs_checked;
        self.mismatches.extend(other.mismatches);
    }
}

/// Compares the enveloping-algebra commutator with the abstract table for
/// every unordered pair `gens[i], gens[j]` with `j >= i`.
pub fn check_realization_pairs_from(
    gens: &[Generator],
    i: usize,
    p: &AlgebraParams,
    w: &Window,
) -> Result<RealizationReport> {
    let plain = p.extended(false);
    let mut report = RealizationReport {
        params: plain,
        window: *w,
        pairs_checked: 0,
        mismatches: Vec::new(),
    };
    let a = &gens[i];
    for b in &gens[i..] {
        let enveloping = color_bracket_uea(a, b, &plain)?;
        let abstract_table = realize_element(&color_bracket(a, b, &plain)?, &plain)?;
        report.pairs_checked += 1;
        if enveloping != abstract_table {
            report.mismatches.push(RealizationMismatch {
                pair: [*a, *b],
                enveloping,
                abstract_table,
            });
        }
    }
    Ok(report)
}

/// The generators checked by [`verify_realization`]: the window's
/// non-central generators plus `c`.
pub fn realization_generators(p: &AlgebraParams, w: &Window) -> Vec<Generator> {
    let mut gens = w.generators(&p.extended(false));
    gens.push(Generator::C);
    gens
}

/// Checks that the composites reproduce the abstract bracket table on
/// every in-window pair.
pub fn verify_realization(p: &AlgebraParams, w: &Window) -> Result<RealizationReport> {
    let gens = realization_generators(p, w);
    let mut report = RealizationReport {
        params: p.extended(false),
        window: *w,
        pairs_checked: 0,
        mismatches: Vec::new(),
    };
    for i in 0..gens.len() {
        report.merge(check_realization_pairs_from(&gens, i, p, w)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn nf(terms: &[(i64, &[Factor])]) -> NormalForm {
        let mut out = NormalForm::zero();
        for (c, w) in terms {
            out.accumulate(w.to_vec(), Scalar::from_int(*c));
        }
        out
    }

    #[test]
    fn virasoro_swap() {
        let p = AlgebraParams::from_twice(0, 0).unwrap();
        let w = Word::new(Scalar::one(), vec![Factor::L(1), Factor::L(-1)]);
        assert_eq!(
            normal_order(&w, &p),
            nf(&[(1, &[Factor::L(-1), Factor::L(1)]), (2, &[Factor::L(0)])])
        );
        // m = 2 brings in the central charge: L2 L-2 = L-2 L2 + 4 L0 + c/2
        let w = Word::new(Scalar::one(), vec![Factor::L(2), Factor::L(-2)]);
        let got = normal_order(&w, &p);
        assert_eq!(got.coefficient(&[Factor::C]), Scalar::from_ratio(1, 2));
        assert_eq!(got.coefficient(&[Factor::L(0)]), Scalar::from_int(4));
    }

    #[test]
    fn odd_square_vanishes() {
        let p = AlgebraParams::from_twice(0, 1).unwrap();
        let w = Word::new(Scalar::one(), vec![Factor::X(h(3)), Factor::X(h(3))]);
        assert!(normal_order(&w, &p).is_zero());
        let w = Word::new(Scalar::one(), vec![Factor::X(h(3)), Factor::X(h(1))]);
        assert_eq!(normal_order(&w, &p), nf(&[(-1, &[Factor::X(h(1)), Factor::X(h(3))])]));
    }

    #[test]
    fn density_swap() {
        // [L_0, P_1] = -P_1 at l1 = 0, so P_1 L_0 = L_0 P_1 + P_1
        let p = AlgebraParams::from_twice(0, 0).unwrap();
        let w = Word::new(Scalar::one(), vec![Factor::P(h(2)), Factor::L(0)]);
        assert_eq!(
            normal_order(&w, &p),
            nf(&[(1, &[Factor::L(0), Factor::P(h(2))]), (1, &[Factor::P(h(2))])])
        );
    }

    #[test]
    fn composites() {
        let p = AlgebraParams::from_twice(1, 0).unwrap();
        assert_eq!(
            realize(&Generator::X2(h(2), h(4)), &p).unwrap(),
            nf(&[(2, &[Factor::X(h(2)), Factor::X(h(4))])])
        );
        assert_eq!(
            realize(&Generator::T(h(-1), h(6)), &p).unwrap(),
            nf(&[(2, &[Factor::P(h(-1)), Factor::X(h(6))])])
        );
        let p = AlgebraParams::from_twice(0, 0).unwrap();
        assert_eq!(
            realize(&Generator::P2(h(0), h(0)), &p).unwrap(),
            nf(&[(2, &[Factor::P(h(0)), Factor::P(h(0))])])
        );
        assert!(realize(&Generator::Central(Central::Cp), &p).is_err());
    }

    #[test]
    fn enveloping_brackets() {
        let p = AlgebraParams::from_twice(0, 0).unwrap();
        let (r, u, v) = (h(2), h(-4), h(6));
        assert!(color_bracket_uea(&Generator::X(u), &Generator::T(r, v), &p)
            .unwrap()
            .is_zero());
        assert_eq!(
            color_bracket_uea(&Generator::P(r), &Generator::X(u), &p).unwrap(),
            realize(&Generator::T(r, u), &p).unwrap()
        );
        // [L_m, P_rs] at l1 = 1
        let p = AlgebraParams::from_twice(2, 0).unwrap();
        let (m, r, t) = (2, h(-2), h(6));
        let lhs = color_bracket_uea(&Generator::L(m), &Generator::P2(r, t), &p).unwrap();
        let rhs = realize(&Generator::P2(r + m, t), &p).unwrap().scale(Scalar::from(HalfInt::from_int(m) - r))
            + realize(&Generator::P2(r, t + m), &p).unwrap().scale(Scalar::from(HalfInt::from_int(m) - t));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn l_only_window_reduces_to_virasoro() {
        let p = AlgebraParams::from_twice(1, 2).unwrap();
        let w = Window::uniform(4).unwrap();
        let gens: Vec<_> = (-4..=4).map(Generator::L).collect();
        for i in 0..gens.len() {
            let r = check_realization_pairs_from(&gens, i, &p, &w).unwrap();
            assert!(r.passed());
        }
    }

    #[test]
    fn small_window_realizes() {
        for (a, b) in [(0, 0), (1, 0), (2, 3)] {
            let p = AlgebraParams::from_twice(a, b).unwrap();
            let r = verify_realization(&p, &Window::uniform(2).unwrap()).unwrap();
            assert!(r.passed(), "{:?}", r.mismatches.first());
        }
    }
}
