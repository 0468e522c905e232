//! Sparse exact linear algebra over the integers.
//!
//! Vectors are sorted `(column, value)` lists with no zero entries.
//! Elimination is fraction-free: combining two rows multiplies through
//! instead of dividing, and every stored row is kept primitive (content 1,
//! positive leading entry) so coefficients stay small.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

pub type SparseVec = Vec<(usize, BigInt)>;

/// Clears denominators of a rational sparse vector. Entries are summed per
/// column first, so the input may be unsorted and contain repeats.
pub fn from_rationals<I: IntoIterator<Item = (usize, Rational)>>(entries: I) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in entries {
        *acc.entry(c).or_insert_with(Rational::zero) += v;
    }
    acc.retain(|_, v| !v.is_zero());
    let lcm = acc.values().fold(1i64, |l, v| l.lcm(v.denom()));
    acc.into_iter()
        .map(|(c, v)| (c, BigInt::from(*v.numer()) * BigInt::from(lcm / v.denom())))
        .collect()
}

/// Divides out the content and makes the leading entry positive.
pub fn primitive(mut v: SparseVec) -> SparseVec {
    let Some(first) = v.first() else {
        return v;
    };
    let mut g = first.1.abs();
    for (_, x) in &v[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    let flip = first.1.is_negative();
    if !g.is_one() || flip {
        for (_, x) in v.iter_mut() {
            if !g.is_one() {
                *x /= &g;
            }
            if flip {
                *x = -&*x;
            }
        }
    }
    v
}

pub fn dot(a: &SparseVec, b: &SparseVec) -> BigInt {
    let (mut i, mut j) = (0, 0);
    let mut acc = BigInt::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                acc += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

pub fn get(v: &SparseVec, col: usize) -> Option<&BigInt> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|i| &v[i].1)
}

/// `x * a - y * b`, dropping zeros.
fn combine(x: &BigInt, a: &SparseVec, y: &BigInt, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, x * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(y * &b[j].1)));
            j += 1;
        } else {
            let v = x * &a[i].1 - y * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Eliminates column `col` of `v` using `pivot`, whose entry there is
/// nonzero.
fn eliminate(v: &SparseVec, pivot: &SparseVec, col: usize) -> SparseVec {
    let a = get(pivot, col).expect("pivot entry");
    let b = get(v, col).expect("eliminated entry");
    let g = a.gcd(b);
    primitive(combine(&(a / &g), v, &(b / &g), pivot))
}

/// Row echelon form built incrementally. Each stored row is keyed by its
/// leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces until the leading column is not a pivot.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some(&(c, _)) = v.first() {
            match self.rows.get(&c) {
                Some(p) => v = eliminate(&v, p, c),
                None => break,
            }
        }
        primitive(v)
    }

    /// Clears every pivot column of `v`.
    pub fn reduce_full(&self, mut v: SparseVec) -> SparseVec {
        let mut from = 0;
        loop {
            let next = v
                .iter()
                .map(|e| e.0)
                .find(|&c| c >= from && self.rows.contains_key(&c));
            let Some(c) = next else { break };
            v = eliminate(&v, &self.rows[&c], c);
            from = c + 1;
        }
        primitive(v)
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        match v.first() {
            Some(&(c, _)) => {
                self.rows.insert(c, v);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Reduced row echelon form: every pivot column is zero outside its
    /// own row.
    pub fn reduced(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let cols: Vec<usize> = rows.keys().rev().copied().collect();
        for &c in &cols {
            let pivot = rows[&c].clone();
            for (_, row) in rows.range_mut(..c) {
                if get(row, c).is_some() {
                    *row = eliminate(row, &pivot, c);
                }
            }
        }
        Echelon { rows }
    }

    /// A basis of `{x : row . x = 0 for every row}` in `ncols` unknowns,
    /// one primitive vector per free column, in column order.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec> {
        let rref = self.reduced();
        // free column -> [(pivot column, entry, pivot entry)]
        let mut hits: BTreeMap<usize, Vec<(usize, &BigInt, &BigInt)>> = BTreeMap::new();
        for (&c, row) in &rref.rows {
            let lead = &row[0].1;
            for (f, x) in &row[1..] {
                hits.entry(*f).or_default().push((c, x, lead));
            }
        }
        let mut out = Vec::new();
        for f in (0..ncols).filter(|f| !rref.rows.contains_key(f)) {
            let deps = hits.get(&f).map(Vec::as_slice).unwrap_or(&[]);
            let scale = deps.iter().fold(BigInt::one(), |l, (_, _, p)| l.lcm(p));
            let mut v: SparseVec = deps
                .iter()
                .map(|&(c, x, p)| (c, -(x * (&scale / p))))
                .collect();
            v.push((f, scale));
            v.sort_by_key(|e| e.0);
            out.push(primitive(v));
        }
        out
    }
}

/// Rank of a set of vectors.
pub fn rank<'a, I: IntoIterator<Item = &'a SparseVec>>(vs: I) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v.clone());
    }
    e.rank()
}
