//! Adjoint and superadjoint operations on the extended algebra.
//!
//! Both are antilinear maps fixed by their values on generators. The
//! adjoint reverses brackets, `[[X, Y]]^+ = [[Y^+, X^+]]`, and squares to
//! the identity. The superadjoint reverses them with the color sign,
//! `[[X, Y]]^# = (-1)^(A.B) [[Y^#, X^#]]`, and squares to `(-1)^(A.A)`.
//! The superadjoint below exists only for `l1` in `N + 1/2`, `l2` in `N`.

use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::brackets::color_bracket_unchecked;
use crate::element::{Element, ElementBuilder};
use crate::error::{Error, Result};
use crate::generator::{Central, Generator};
use crate::halfint::HalfInt;
use crate::params::{AlgebraParams, Window};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum InvolutionKind {
    Adjoint,
    Superadjoint,
}

impl InvolutionKind {
    pub const ALL: [InvolutionKind; 2] = [InvolutionKind::Adjoint, InvolutionKind::Superadjoint];

    /// Whether the operation is defined at `p`.
    pub fn admits(self, p: &AlgebraParams) -> bool {
        match self {
            InvolutionKind::Adjoint => true,
            InvolutionKind::Superadjoint => !p.l1().is_integer() && p.l2().is_integer(),
        }
    }

    fn check(self, p: &AlgebraParams) -> Result<()> {
        if self.admits(p) {
            Ok(())
        } else {
            Err(Error::InvolutionUndefined {
                kind: self,
                l1: p.l1(),
                l2: p.l2(),
            })
        }
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionKind::Adjoint => "adjoint",
            InvolutionKind::Superadjoint => "superadjoint",
        })
    }
}

/// `(-1)^e` for an exponent that must be an integer.
fn parity_sign(e: HalfInt) -> i64 {
    let n = e
        .to_integer()
        .expect("sign exponent is an integer at admissible parameters");
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn adjoint_central(z: Central, p: &AlgebraParams) -> i64 {
    let (a, b) = (p.l1().twice(), p.l2().twice());
    match z {
        Central::C | Central::Ch => 1,
        Central::Ceta => -1,
        Central::Cp => if a == 0 { -1 } else { 1 },
        Central::Cx => if b == 0 { -1 } else { 1 },
        Central::CkapA => if (a, b) == (0, 0) { 1 } else { -1 },
        Central::CkapS => if (a, b) == (0, 0) { 1 } else { -1 },
        Central::CzetA => if (a, b) == (0, 0) { -1 } else { 1 },
        Central::CzetS => if (a, b) == (0, 0) { -1 } else { 1 },
    }
}

fn superadjoint_central(z: Central, p: &AlgebraParams) -> Option<i64> {
    Some(match z {
        Central::C => 1,
        Central::Ceta | Central::CkapA => -1,
        Central::Cx => if p.l2().is_zero() { -1 } else { 1 },
        _ => return None,
    })
}

/// Image of a single generator as `sign * generator`.
pub fn image(kind: InvolutionKind, g: &Generator, p: &AlgebraParams) -> Result<(i64, Generator)> {
    kind.check(p)?;
    p.validate(g)?;
    use Generator::*;
    let out = match kind {
        InvolutionKind::Adjoint => match *g {
            L(m) => (1, L(-m)),
            P(r) => (1, P(-r)),
            X(u) => (1, X(-u)),
            P2(r, s) => (1, P2(-r, -s)),
            X2(u, v) => (-1, X2(-u, -v)),
            T(r, u) => (1, T(-r, -u)),
            Central(z) => (adjoint_central(z, p), Central(z)),
        },
        InvolutionKind::Superadjoint => {
            let l1 = p.l1();
            match *g {
                L(m) => (parity_sign(HalfInt::from_int(m)), L(-m)),
                P(r) => (parity_sign(l1 + r), P(-r)),
                X(u) => (parity_sign(u), X(-u)),
                P2(r, s) => (parity_sign(r + s), P2(-r, -s)),
                X2(u, v) => (-parity_sign(u + v), X2(-u, -v)),
                T(r, u) => (-parity_sign(l1 + r + u), T(-r, -u)),
                Central(z) => match superadjoint_central(z, p) {
                    Some(s) => (s, Central(z)),
                    None => return Err(Error::NoInvolutionImage { kind, generator: *g }),
                },
            }
        }
    };
    Ok(out)
}

/// Applies the operation antilinearly to an element.
pub fn apply(kind: InvolutionKind, a: &Element, p: &AlgebraParams) -> Result<Element> {
    let mut out = ElementBuilder::new();
    for (g, c) in a.iter() {
        let (sign, h) = image(kind, g, p)?;
        out.add(c.conj() * Scalar::from_int(sign), h);
    }
    Ok(out.build())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketMismatch {
    pub pair: [Generator; 2],
    /// `[[a, b]]` mapped by the operation.
    pub lhs: Element,
    /// The reversed bracket of the images, with the color sign for the
    /// superadjoint.
    pub rhs: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    pub kind: InvolutionKind,
    pub params: AlgebraParams,
    pub window: Window,
    pub generators_checked: u64,
    pub pairs_checked: u64,
    pub samples_checked: u64,
    /// Generators whose image leaves their degree sector (condition i).
    pub degree_failures: Vec<Generator>,
    /// Sample indices where antilinearity failed (condition ii).
    pub antilinearity_failures: Vec<u64>,
    /// Condition iii.
    pub bracket_failures: Vec<BracketMismatch>,
    /// Generators failing condition iv.
    pub involutivity_failures: Vec<Generator>,
    /// Central symbols present or produced by brackets that the operation
    /// gives no image for.
    pub unlisted_centrals: Vec<Central>,
}

impl InvolutionReport {
    pub fn new(kind: InvolutionKind, params: AlgebraParams, window: Window) -> Self {
        InvolutionReport {
            kind,
            params,
            window,
            generators_checked: 0,
            pairs_checked: 0,
            samples_checked: 0,
            degree_failures: Vec::new(),
            antilinearity_failures: Vec::new(),
            bracket_failures: Vec::new(),
            involutivity_failures: Vec::new(),
            unlisted_centrals: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.degree_failures.is_empty()
            && self.antilinearity_failures.is_empty()
            && self.bracket_failures.is_empty()
            && self.involutivity_failures.is_empty()
            && self.unlisted_centrals.is_empty()
    }

    pub fn merge(&mut self, other: InvolutionReport) {
        self.generators_checked += other.generators_checked;
        self.pairs_checked += other.pairs_checked;
        self.samples_checked += other.samples_checked;
        self.degree_failures.extend(other.degree_failures);
        self.antilinearity_failures.extend(other.antilinearity_failures);
        self.bracket_failures.extend(other.bracket_failures);
        self.involutivity_failures.extend(other.involutivity_failures);
        for z in other.unlisted_centrals {
            if !self.unlisted_centrals.contains(&z) {
                self.unlisted_centrals.push(z);
            }
        }
        self.unlisted_centrals.sort();
    }
}

/// The generators an involution is checked on: the window's generators and
/// every central symbol admissible at `p`.
pub fn involution_generators(p: &AlgebraParams, w: &Window) -> Vec<Generator> {
    w.generators_with_centrals(p)
}

fn note_unlisted(report: &mut InvolutionReport, e: &Element, p: &AlgebraParams) {
    for (g, _) in e.iter() {
        if let Generator::Central(z) = g {
            let listed = match report.kind {
                InvolutionKind::Adjoint => true,
                InvolutionKind::Superadjoint => superadjoint_central(*z, p).is_some(),
            };
            if !listed && !report.unlisted_centrals.contains(z) {
                report.unlisted_centrals.push(*z);
                report.unlisted_centrals.sort();
            }
        }
    }
}

/// Conditions (i) and (iv) on every generator.
pub fn check_generators(kind: InvolutionKind, p: &AlgebraParams, w: &Window) -> Result<InvolutionReport> {
    kind.check(p)?;
    let mut report = InvolutionReport::new(kind, *p, *w);
    for g in involution_generators(p, w) {
        report.generators_checked += 1;
        let e = Element::from_generator(g);
        note_unlisted(&mut report, &e, p);
        if !report.unlisted_centrals.is_empty() {
            continue;
        }
        let once = apply(kind, &e, p)?;
        if once.degree() != Some(g.degree()) || once.len() != 1 {
            report.degree_failures.push(g);
        }
        let twice = apply(kind, &once, p)?;
        let expected = match kind {
            InvolutionKind::Adjoint => e,
            InvolutionKind::Superadjoint => {
                let d = g.degree();
                e.scale(Scalar::from_int(d.sign(d) as i64))
            }
        };
        if twice != expected {
            report.involutivity_failures.push(g);
        }
    }
    Ok(report)
}

/// Condition (iii) on the pairs `(gens[i], b)` for every `b` in `gens`.
pub fn check_bracket_pairs_from(
    kind: InvolutionKind,
    p: &AlgebraParams,
    w: &Window,
    gens: &[Generator],
    i: usize,
) -> Result<InvolutionReport> {
    kind.check(p)?;
    let mut report = InvolutionReport::new(kind, *p, *w);
    let a = &gens[i];
    for b in gens {
        let bracket = color_bracket_unchecked(a, b, p);
        note_unlisted(&mut report, &bracket, p);
        if !report.unlisted_centrals.is_empty() {
            continue;
        }
        report.pairs_checked += 1;
        let lhs = apply(kind, &bracket, p)?;
        let (sa, ga) = image(kind, a, p)?;
        let (sb, gb) = image(kind, b, p)?;
        let mut sign = sa * sb;
        if kind == InvolutionKind::Superadjoint {
            sign *= a.degree().sign(b.degree()) as i64;
        }
        let rhs = color_bracket_unchecked(&gb, &ga, p).scale(Scalar::from_int(sign));
        if lhs != rhs {
            report.bracket_failures.push(BracketMismatch {
                pair: [*a, *b],
                lhs,
                rhs,
            });
        }
    }
    Ok(report)
}

fn random_scalar<R: RngCore>(rng: &mut R) -> Scalar {
    let mut part = || {
        let num = (rng.next_u32() % 19) as i64 - 9;
        let den = (rng.next_u32() % 6) as i64 + 1;
        Rational::new(num, den)
    };
    Scalar::new(part(), part())
}

fn random_element<R: RngCore>(rng: &mut R, gens: &[Generator]) -> Element {
    let terms = 1 + (rng.next_u32() % 4) as usize;
    Element::from_terms((0..terms).map(|_| {
        let g = gens[rng.next_u32() as usize % gens.len()];
        (g, random_scalar(rng))
    }))
}

/// Condition (ii) on `samples` random combinations
/// `(alpha X + beta Y)^+ = alpha* X^+ + beta* Y^+`.
pub fn check_antilinearity<R: RngCore>(
    kind: InvolutionKind,
    p: &AlgebraParams,
    w: &Window,
    rng: &mut R,
    samples: u64,
) -> Result<InvolutionReport> {
    kind.check(p)?;
    let mut report = InvolutionReport::new(kind, *p, *w);
    let gens: Vec<Generator> = involution_generators(p, w)
        .into_iter()
        .filter(|g| image(kind, g, p).is_ok())
        .collect();
    for n in 0..samples {
        let (x, y) = (random_element(rng, &gens), random_element(rng, &gens));
        let (alpha, beta) = (random_scalar(rng), random_scalar(rng));
        let combined = &x.scale(alpha) + &y.scale(beta);
        let lhs = apply(kind, &combined, p)?;
        let rhs = &apply(kind, &x, p)?.scale(alpha.conj()) + &apply(kind, &y, p)?.scale(beta.conj());
        report.samples_checked += 1;
        if lhs != rhs {
            report.antilinearity_failures.push(n);
        }
    }
    Ok(report)
}

/// Default number of antilinearity samples.
pub const DEFAULT_SAMPLES: u64 = 256;

/// Checks conditions (i)-(iv) on the window.
pub fn verify_involution<R: RngCore>(
    kind: InvolutionKind,
    p: &AlgebraParams,
    w: &Window,
    rng: &mut R,
) -> Result<InvolutionReport> {
    let mut report = check_generators(kind, p, w)?;
    report.merge(check_antilinearity(kind, p, w, rng, DEFAULT_SAMPLES)?);
    let gens = involution_generators(p, w);
    for i in 0..gens.len() {
        report.merge(check_bracket_pairs_from(kind, p, w, &gens, i)?);
    }
    Ok(report)
}
