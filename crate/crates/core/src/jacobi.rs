//! Exhaustive graded Jacobi checks over a finite window.
//!
//! For homogeneous `a, b, c` of degrees `A, B, C` the residual is
//!
//! ```text
//! (-1)^(A.C) [[a,[[b,c]]]] + (-1)^(B.A) [[b,[[c,a]]]] + (-1)^(C.B) [[c,[[a,b]]]]
//! ```
//!
//! and must vanish exactly. [`JacobiPlan`] tabulates every bracket between
//! window generators once, so each triple costs a handful of lookups.

use alloc::vec::Vec;

use crate::brackets::{bracket_elements, color_bracket, color_bracket_unchecked};
use crate::element::{Element, ElementBuilder};
use crate::error::Result;
use crate::generator::{Family, Generator};
use crate::params::{AlgebraParams, Window};
use crate::scalar::Scalar;

/// The Jacobi residual of three generators, computed directly from the
/// bracket table.
pub fn jacobi_residual(
    a: &Generator,
    b: &Generator,
    c: &Generator,
    p: &AlgebraParams,
) -> Result<Element> {
    let (da, db, dc) = (a.degree(), b.degree(), c.degree());
    let nested = |x: &Generator, y: &Generator, z: &Generator| -> Result<Element> {
        let inner = color_bracket(y, z, p)?;
        bracket_elements(&Element::from_generator(*x), &inner, p)
    };
    let mut out = ElementBuilder::new();
    out.add_element(Scalar::from_int(da.sign(dc) as i64), &nested(a, b, c)?);
    out.add_element(Scalar::from_int(db.sign(da) as i64), &nested(b, c, a)?);
    out.add_element(Scalar::from_int(dc.sign(db) as i64), &nested(c, a, b)?);
    Ok(out.build())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: [Generator; 3],
    pub residual: Element,
}

impl JacobiFailure {
    /// Families of the triple, sorted, e.g. `[P, P, X]`.
    pub fn shape(&self) -> [Family; 3] {
        let mut s = self.triple.map(|g| g.family());
        s.sort();
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub params: AlgebraParams,
    pub window: Window,
    pub triples_checked: u64,
    /// Triples skipped because an inner bracket left the window.
    pub triples_escaped: u64,
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn new(params: AlgebraParams, window: Window) -> Self {
        JacobiReport {
            params,
            window,
            triples_checked: 0,
            triples_escaped: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Appends a partial report. Merging in slice order keeps failure
    /// order independent of how the work was split.
    pub fn merge(&mut self, other: JacobiReport) {
        self.triples_checked += other.triples_checked;
        self.triples_escaped += other.triples_escaped;
        self.failures.extend(other.failures);
    }
}

struct Entry {
    value: Element,
    /// `value` expressed over window indices, or `None` if some term lies
    /// outside the window.
    indexed: Option<Vec<(u32, Scalar)>>,
}

/// Precomputed bracket table over the generators of a window (central
/// symbols included).
pub struct JacobiPlan {
    params: AlgebraParams,
    window: Window,
    gens: Vec<Generator>,
    table: Vec<Entry>,
}

impl JacobiPlan {
    pub fn new(params: AlgebraParams, window: Window) -> Self {
        Self::with_generators(params, window, window.generators_with_centrals(&params))
    }

    /// Plan over an explicit sorted generator list (used to check small
    /// hand-picked sets).
    pub fn with_generators(params: AlgebraParams, window: Window, mut gens: Vec<Generator>) -> Self {
        gens.sort();
        gens.dedup();
        let n = gens.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &gens {
            for b in &gens {
                let value = color_bracket_unchecked(a, b, &params);
                let indexed = value
                    .iter()
                    .map(|(g, c)| gens.binary_search(g).ok().map(|i| (i as u32, *c)))
                    .collect();
                table.push(Entry { value, indexed });
            }
        }
        JacobiPlan {
            params,
            window,
            gens,
            table,
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn entry(&self, i: usize, j: usize) -> &Entry {
        &self.table[i * self.gens.len() + j]
    }

    /// Checks every unordered triple `i <= j <= k` with the given first
    /// index.
    pub fn check_first(&self, i: usize) -> JacobiReport {
        let mut report = JacobiReport::new(self.params, self.window);
        let n = self.gens.len();
        for j in i..n {
            for k in j..n {
                match self.residual(i, j, k) {
                    None => report.triples_escaped += 1,
                    Some(res) => {
                        report.triples_checked += 1;
                        if !res.is_zero() {
                            report.failures.push(JacobiFailure {
                                triple: [self.gens[i], self.gens[j], self.gens[k]],
                                residual: res,
                            });
                        }
                    }
                }
            }
        }
        report
    }

    /// Runs every first index in order on the current thread.
    pub fn verify(&self) -> JacobiReport {
        let mut report = JacobiReport::new(self.params, self.window);
        for i in 0..self.len() {
            report.merge(self.check_first(i));
        }
        report
    }

    fn residual(&self, i: usize, j: usize, k: usize) -> Option<Element> {
        let inner = [(i, j, k), (j, k, i), (k, i, j)];
        let mut any = false;
        for &(_, y, z) in &inner {
            let e = self.entry(y, z);
            e.indexed.as_ref()?;
            any |= !e.value.is_zero();
        }
        if !any {
            return Some(Element::zero());
        }
        let mut out = ElementBuilder::new();
        for &(x, y, z) in &inner {
            let sign = self.gens[x].degree().sign(self.gens[z].degree());
            let sign = Scalar::from_int(sign as i64);
            for &(g, c) in self.entry(y, z).indexed.as_ref()? {
                out.add_element(sign * c, &self.entry(x, g as usize).value);
            }
        }
        Some(out.build())
    }
}

/// Checks every unordered homogeneous triple of window generators whose
/// inner brackets stay inside the window.
pub fn verify_window(p: &AlgebraParams, w: &Window) -> JacobiReport {
    JacobiPlan::new(*p, *w).verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Central;
    use crate::halfint::HalfInt;
    use crate::params::RhoMode;
    use alloc::vec;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn virasoro_triple_vanishes() {
        let p = AlgebraParams::from_twice(0, 0).unwrap();
        let r = jacobi_residual(&Generator::L(1), &Generator::L(2), &Generator::L(-3), &p).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn ppx_with_corrected_rho() {
        let p = AlgebraParams::from_twice(0, 0).unwrap().extended(true);
        for (r, t, u) in [(2, 4, -6), (2, -2, 0), (0, 0, 0), (-6, 2, 4)] {
            let res = jacobi_residual(&Generator::P(h(r)), &Generator::P(h(t)), &Generator::X(h(u)), &p)
                .unwrap();
            assert!(res.is_zero(), "{r} {t} {u}: {res}");
        }
    }

    #[test]
    fn ppx_with_verbatim_rho_fails() {
        // Hand expansion: the residual of (P_r, P_s, X_u) is
        // kappa(r,s) + kappa(s,r) + rho(r<=s). With r = 1, s = -1 the kappa_S
        // part cancels and rho(-1, 1) = -2 * (-1 - 1) c_kA = 4 c_kA.
        let p = AlgebraParams::from_twice(0, 0)
            .unwrap()
            .extended(true)
            .with_rho(RhoMode::TheoremVerbatim);
        let res = jacobi_residual(&Generator::P(h(2)), &Generator::P(h(-2)), &Generator::X(h(0)), &p)
            .unwrap();
        assert_eq!(res, Element::term(Scalar::from_int(4), Generator::Central(Central::CkapA)));
    }

    #[test]
    fn plan_matches_direct_residual() {
        let p = AlgebraParams::from_twice(0, 2).unwrap().extended(true);
        let w = Window::uniform(2).unwrap();
        let plan = JacobiPlan::new(p, w);
        let gens = plan.generators().to_vec();
        let mut seen = 0;
        for (i, a) in gens.iter().enumerate().step_by(7) {
            for (j, b) in gens.iter().enumerate().skip(i).step_by(5) {
                for (k, c) in gens.iter().enumerate().skip(j).step_by(3) {
                    if let Some(r) = plan.residual(i, j, k) {
                        assert_eq!(r, jacobi_residual(a, b, c, &p).unwrap());
                        seen += 1;
                    }
                }
            }
        }
        assert!(seen > 100);
    }

    #[test]
    fn only_l0_window_is_trivial() {
        let p = AlgebraParams::from_twice(1, 3).unwrap();
        let w = Window::uniform(1).unwrap();
        let report = JacobiPlan::with_generators(p, w, vec![Generator::L(0)]).verify();
        assert_eq!(report.triples_checked, 1);
        assert!(report.passed());
    }

    #[test]
    fn small_windows_close() {
        for (a, b) in [(0, 0), (1, 0), (2, 1), (1, 2)] {
            for ext in [false, true] {
                let p = AlgebraParams::from_twice(a, b).unwrap().extended(ext);
                let report = verify_window(&p, &Window::uniform(2).unwrap());
                assert!(report.passed(), "({a},{b}) ext={ext}: {:?}", report.failures.first());
                assert!(report.triples_checked > 0);
            }
        }
    }
}
