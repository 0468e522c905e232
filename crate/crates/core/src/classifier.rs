//! Classification of scalar central extensions of `g(l1, l2)` over a
//! window, by exact linear algebra.
//!
//! The baseline algebra is `g(l1, l2)` with the Virasoro central term
//! removed, so the `(0,0)` sector rediscovers it. For a sector `d` the
//! unknowns are the values `w(a, b)` of a 2-cochain on canonical pairs
//! `a <= b` of in-window generators with `deg a + deg b = d` and total mode
//! index 0; the constraints are the graded Jacobi identities of the
//! extended bracket `[[a, b]] + w(a, b) z`. Cocycles are taken modulo the
//! coboundaries `w(a, b) = f([[a, b]])`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::brackets::color_bracket_unchecked;
use crate::degree::Degree;
use crate::element::Element;
use crate::generator::{Central, Family, Generator};
use crate::halfint::HalfInt;
use crate::linalg::{self, Echelon, SparseVec};
use crate::params::{AlgebraParams, RhoMode, Window};
use crate::scalar::{Rational, Scalar};

/// Canonical pair `(a, b)` with `a <= b`.
pub type Pair = (Generator, Generator);

/// The cocycle constraint system of one degree sector.
#[derive(Clone, Debug)]
pub struct CocycleSystem {
    pub params: AlgebraParams,
    pub window: Window,
    pub sector: Degree,
    pub unknowns: Vec<Pair>,
    pub constraints: Vec<SparseVec>,
    /// `(g, f_g)` where `f_g(a, b)` is the coefficient of `g` in `[[a, b]]`.
    pub coboundaries: Vec<(Generator, SparseVec)>,
    /// Triples dropped because an inner bracket left the window.
    pub rows_dropped: u64,
}

/// Brackets of the central-free baseline, tabulated over the window.
struct Table {
    gens: Vec<Generator>,
    brackets: Vec<Element>,
}

impl Table {
    fn new(p: &AlgebraParams, w: &Window) -> Self {
        let base = p.extended(false);
        let gens = w.generators(&base);
        let mut brackets = Vec::with_capacity(gens.len() * gens.len());
        for a in &gens {
            for b in &gens {
                brackets.push(color_bracket_unchecked(a, b, &base).without_central());
            }
        }
        Table { gens, brackets }
    }

    fn bracket(&self, i: usize, j: usize) -> &Element {
        &self.brackets[i * self.gens.len() + j]
    }
}

/// Maps ordered pairs to a signed unknown column.
struct Columns {
    index: BTreeMap<Pair, usize>,
}

impl Columns {
    /// `w(a, b)` as `sign * column`, or `None` when it vanishes
    /// identically (a repeated generator whose self-bracket is symmetric).
    fn lookup(&self, a: Generator, b: Generator) -> Option<(usize, i64)> {
        if a == b && a.degree().dot(a.degree()) == 0 {
            return None;
        }
        let (pair, sign) = if a <= b {
            ((a, b), 1)
        } else {
            ((b, a), -(a.degree().sign(b.degree()) as i64))
        };
        let col = *self
            .index
            .get(&pair)
            .expect("in-window pair of the right degree and index");
        Some((col, sign))
    }
}

fn rational(s: &Scalar) -> Rational {
    debug_assert!(s.is_real());
    s.re()
}

/// Assembles the constraint system of `sector` over `w`. `p.extended` is
/// ignored.
pub fn build_system(p: &AlgebraParams, w: &Window, sector: Degree) -> CocycleSystem {
    let table = Table::new(p, w);
    let gens = &table.gens;
    let position: BTreeMap<Generator, usize> =
        gens.iter().enumerate().map(|(i, g)| (*g, i)).collect();

    let mut unknowns = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            let keep = (a.degree() + b.degree()) == sector
                && (a.index() + b.index()).is_zero()
                && !(a == b && a.degree().dot(a.degree()) == 0);
            if keep {
                unknowns.push((*a, *b));
            }
        }
    }
    let columns = Columns {
        index: unknowns.iter().enumerate().map(|(i, p)| (*p, i)).collect(),
    };

    // generators grouped by (index, degree) to find the third member of a
    // triple directly
    let mut by_key: BTreeMap<(HalfInt, Degree), Vec<usize>> = BTreeMap::new();
    for (i, g) in gens.iter().enumerate() {
        by_key.entry((g.index(), g.degree())).or_default().push(i);
    }

    let mut rows = Vec::new();
    let mut dropped = 0u64;
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let need_index = -(gens[i].index() + gens[j].index());
            let need_degree = sector + gens[i].degree() + gens[j].degree();
            let Some(ks) = by_key.get(&(need_index, need_degree)) else {
                continue;
            };
            for &k in ks.iter().filter(|&&k| k >= j) {
                match constraint_row(&table, &position, &columns, [i, j, k]) {
                    Some(row) if !row.is_empty() => rows.push(linalg::primitive(row)),
                    Some(_) => {}
                    None => dropped += 1,
                }
            }
        }
    }
    rows.sort();
    rows.dedup();

    let mut cob: BTreeMap<Generator, Vec<(usize, Rational)>> = BTreeMap::new();
    for g in gens.iter().filter(|g| g.degree() == sector && g.index().is_zero()) {
        cob.insert(*g, Vec::new());
    }
    for (col, (a, b)) in unknowns.iter().enumerate() {
        for (g, c) in table.bracket(position[a], position[b]).iter() {
            if let Some(v) = cob.get_mut(g) {
                v.push((col, rational(c)));
            }
        }
    }
    let coboundaries = cob
        .into_iter()
        .map(|(g, v)| (g, linalg::from_rationals(v)))
        .filter(|(_, v)| !v.is_empty())
        .collect();

    CocycleSystem {
        params: p.extended(false),
        window: *w,
        sector,
        unknowns,
        constraints: rows,
        coboundaries,
        rows_dropped: dropped,
    }
}

/// `sum_cyc (-1)^(X.Z) w(x, [[y, z]])` for the triple, or `None` if an
/// inner bracket leaves the window.
fn constraint_row(
    table: &Table,
    position: &BTreeMap<Generator, usize>,
    columns: &Columns,
    [i, j, k]: [usize; 3],
) -> Option<SparseVec> {
    let gens = &table.gens;
    let mut entries = Vec::new();
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        let sign = gens[x].degree().sign(gens[z].degree()) as i64;
        for (g, c) in table.bracket(y, z).iter() {
            position.get(g)?;
            if let Some((col, s)) = columns.lookup(gens[x], *g) {
                entries.push((col, rational(c) * Rational::from(sign * s)));
            }
        }
    }
    Some(linalg::from_rationals(entries))
}

/// Solution of one sector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorSolution {
    pub sector: Degree,
    pub unknowns: usize,
    pub constraint_rank: usize,
    pub cocycle_dim: usize,
    pub coboundary_rank: usize,
    pub quotient_dim: usize,
    /// One primitive integer cocycle per class, reduced against the
    /// coboundaries.
    pub representatives: Vec<Vec<(Pair, BigInt)>>,
}

/// Echelon forms shared by [`solve`] and the Theorem checks.
pub struct SolvedSystem {
    pub constraints: Echelon,
    pub coboundaries: Echelon,
    pub cocycles: Vec<SparseVec>,
}

pub fn solve_system(sys: &CocycleSystem) -> SolvedSystem {
    let mut constraints = Echelon::new();
    for row in &sys.constraints {
        constraints.insert(row.clone());
    }
    let mut coboundaries = Echelon::new();
    for (_, v) in &sys.coboundaries {
        coboundaries.insert(v.clone());
    }
    let cocycles = constraints.nullspace(sys.unknowns.len());
    SolvedSystem {
        constraints,
        coboundaries,
        cocycles,
    }
}

/// Cocycle dimension, coboundary rank, quotient dimension and
/// representatives of the classes.
pub fn solve(sys: &CocycleSystem) -> SectorSolution {
    let solved = solve_system(sys);
    let mut span = solved.coboundaries.clone();
    let mut representatives = Vec::new();
    for z in &solved.cocycles {
        let r = span.reduce_full(z.clone());
        if r.is_empty() {
            continue;
        }
        span.insert(r.clone());
        representatives.push(r.into_iter().map(|(c, x)| (sys.unknowns[c], x)).collect());
    }
    let cocycle_dim = solved.cocycles.len();
    let coboundary_rank = solved.coboundaries.rank();
    SectorSolution {
        sector: sys.sector,
        unknowns: sys.unknowns.len(),
        constraint_rank: solved.constraints.rank(),
        cocycle_dim,
        coboundary_rank,
        quotient_dim: span.rank() - coboundary_rank,
        representatives,
    }
}

/// The closed-form cocycle of central symbol `z` on the system's unknowns:
/// the coefficient of `z` in the extended bracket (corrected `rho`).
pub fn theorem_cocycle(sys: &CocycleSystem, z: Central) -> SparseVec {
    let p = sys.params.extended(true).with_rho(RhoMode::Corrected);
    let g = Generator::Central(z);
    let entries = sys.unknowns.iter().enumerate().map(|(col, (a, b))| {
        let e = color_bracket_unchecked(a, b, &p);
        (col, rational(&e.coefficient(&g)))
    });
    linalg::from_rationals(entries)
}

/// The Theorem's central symbols living in `sector` at `p`.
pub fn theorem_symbols(p: &AlgebraParams, sector: Degree) -> Vec<Central> {
    Central::ALL
        .into_iter()
        .filter(|z| z.degree() == sector && z.admissible(p.l1(), p.l2()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub sector: Degree,
    pub symbols: Vec<Central>,
    /// Every closed-form cocycle satisfies every constraint.
    pub in_kernel: bool,
    /// They are independent modulo coboundaries.
    pub independent: bool,
    /// With the coboundaries they span the cocycle space.
    pub spanning: bool,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.in_kernel && self.independent && self.spanning
    }
}

pub fn check_theorem_sector(sys: &CocycleSystem, solved: &SolvedSystem) -> TheoremCheck {
    let symbols = theorem_symbols(&sys.params, sys.sector);
    let vectors: Vec<SparseVec> = symbols.iter().map(|z| theorem_cocycle(sys, *z)).collect();
    let in_kernel = vectors
        .iter()
        .all(|t| sys.constraints.iter().all(|row| linalg::dot(row, t).is_zero()));
    let mut span = solved.coboundaries.clone();
    let independent = vectors.iter().all(|t| span.insert(t.clone()));
    let spanning = span.rank() == solved.cocycles.len();
    TheoremCheck {
        sector: sys.sector,
        symbols,
        in_kernel,
        independent,
        spanning,
    }
}

/// Full result for one parameter point and window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub params: AlgebraParams,
    pub window: Window,
    pub sectors: Vec<SectorSolution>,
    pub theorem: Vec<TheoremCheck>,
}

impl ExtensionReport {
    pub fn total_quotient_dim(&self) -> usize {
        self.sectors.iter().map(|s| s.quotient_dim).sum()
    }

    pub fn theorem_match(&self) -> bool {
        self.theorem.iter().all(TheoremCheck::passed)
    }

    pub fn sector(&self, d: Degree) -> Option<&SectorSolution> {
        self.sectors.iter().find(|s| s.sector == d)
    }
}

/// Solves one sector and checks it against the Theorem.
pub fn classify_sector(p: &AlgebraParams, w: &Window, sector: Degree) -> (SectorSolution, TheoremCheck) {
    let sys = build_system(p, w, sector);
    let solved = solve_system(&sys);
    let check = check_theorem_sector(&sys, &solved);
    (solve(&sys), check)
}

/// All four sectors, in [`Degree::ALL`] order.
pub fn classify(p: &AlgebraParams, w: &Window) -> ExtensionReport {
    let mut sectors = Vec::new();
    let mut theorem = Vec::new();
    for d in Degree::ALL {
        let (s, t) = classify_sector(p, w, d);
        sectors.push(s);
        theorem.push(t);
    }
    ExtensionReport {
        params: p.extended(false),
        window: *w,
        sectors,
        theorem,
    }
}

/// Checks (a)-(c) of the closed-form basis in every sector.
pub fn verify_theorem_basis(p: &AlgebraParams, w: &Window) -> bool {
    Degree::ALL.into_iter().all(|d| {
        let sys = build_system(p, w, d);
        check_theorem_sector(&sys, &solve_system(&sys)).passed()
    })
}

/// Quotient dimensions per sector across increasing windows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationScan {
    pub params: AlgebraParams,
    pub windows: Vec<Window>,
    /// `dims[i]` lists the quotient dimensions at `windows[i]` in
    /// [`Degree::ALL`] order.
    pub dims: Vec<[usize; 4]>,
}

impl StabilizationScan {
    /// Index of the first window from which the dimensions stay constant.
    pub fn stable_from(&self) -> Option<usize> {
        let last = self.dims.last()?;
        let mut i = self.dims.len() - 1;
        while i > 0 && self.dims[i - 1] == *last {
            i -= 1;
        }
        Some(i)
    }

    /// Whether no sector dimension grows with the window.
    pub fn non_increasing(&self) -> bool {
        self.dims
            .windows(2)
            .all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| b <= a))
    }
}

pub fn stabilization_scan(p: &AlgebraParams, windows: &[Window]) -> StabilizationScan {
    let dims = windows
        .iter()
        .map(|w| {
            let r = classify(p, w);
            let mut d = [0; 4];
            for (slot, s) in d.iter_mut().zip(&r.sectors) {
                *slot = s.quotient_dim;
            }
            d
        })
        .collect();
    StabilizationScan {
        params: p.extended(false),
        windows: windows.to_vec(),
        dims,
    }
}

/// Pair shapes whose central terms the Theorem shows to be removable by
/// redefining generators.
pub fn is_trivial_shape(pair: &Pair) -> bool {
    use Family::*;
    let mut s = [pair.0.family(), pair.1.family()];
    s.sort();
    matches!(
        s,
        [P2, P2] | [X2, X2] | [P2, X2] | [P2, T] | [X2, T] | [T, T]
            | [P, P] | [X, X] | [P, X] | [L, P2] | [L, X2] | [L, T]
    )
}

/// Cocycles supported only on the unknowns selected by `keep`, as a basis.
pub fn cocycles_supported_on<F: Fn(&Pair) -> bool>(sys: &CocycleSystem, keep: F) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for row in &sys.constraints {
        e.insert(row.clone());
    }
    for (col, pair) in sys.unknowns.iter().enumerate() {
        if !keep(pair) {
            e.insert(alloc::vec![(col, BigInt::from(1))]);
        }
    }
    e.nullspace(sys.unknowns.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: i32, b: i32) -> AlgebraParams {
        AlgebraParams::from_twice(a, b).unwrap()
    }

    #[test]
    fn virasoro_pairs_are_unknowns() {
        let sys = build_system(&params(0, 0), &Window::uniform(3).unwrap(), Degree::ZERO);
        for m in 1..=3 {
            assert!(sys.unknowns.contains(&(Generator::L(-m), Generator::L(m))));
        }
        assert!(!sys.unknowns.contains(&(Generator::L(0), Generator::L(0))));
    }

    #[test]
    fn virasoro_sector_is_one_dimensional() {
        let (s, t) = classify_sector(&params(3, 4), &Window::uniform(4).unwrap(), Degree::ZERO);
        assert_eq!(s.quotient_dim, 1);
        assert!(t.passed(), "{t:?}");
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let sys = build_system(&params(0, 0), &Window::uniform(3).unwrap(), Degree::D01);
        assert!(!sys.coboundaries.is_empty());
        for (_, v) in &sys.coboundaries {
            for row in &sys.constraints {
                assert!(linalg::dot(row, v).is_zero());
            }
        }
    }
}
