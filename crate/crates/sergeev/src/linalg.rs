//! Exact sparse linear algebra over the rationals: rank and nullspace by
//! Gauss-Jordan elimination with a deterministic, sparsity-aware pivot rule.

use std::collections::BTreeMap;

use num::Zero;

use crate::scalar::{self, Scalar};

/// A sparse row: sorted `(column, value)` pairs with nonzero values.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PivotRule {
    /// Smallest column index of the reduced row.
    FirstColumn,
    /// Column of the reduced row used by the fewest existing pivot rows,
    /// ties broken by smallest index (Markowitz-flavoured).
    Sparsest,
}

/// Incremental Gauss-Jordan eliminator. Pivot rows are kept fully reduced
/// against one another, each normalized to a unit pivot.
pub struct Eliminator {
    ncols: usize,
    rule: PivotRule,
    /// pivot column -> fully reduced row with unit coefficient there
    pivots: BTreeMap<usize, SparseVec>,
}

fn get(row: &SparseVec, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |&(c, _)| c).ok().map(|i| &row[i].1)
}

/// `row - c * other`, keeping sorted sparse form.
fn axpy(row: &SparseVec, c: &Scalar, other: &SparseVec) -> SparseVec {
    let mut out = SparseVec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_left = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_right = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_left {
            out.push(row[i].clone());
            i += 1;
        } else if take_right {
            let v = -(c.clone() * &other[j].1);
            if !v.is_zero() {
                out.push((other[j].0, v));
            }
            j += 1;
        } else {
            let v = row[i].1.clone() - c.clone() * &other[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Eliminator {
    pub fn new(ncols: usize, rule: PivotRule) -> Self {
        Eliminator { ncols, rule, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces a row against the current pivot rows.
    pub fn reduce(&self, row: &SparseVec) -> SparseVec {
        let mut cur = row.clone();
        loop {
            let hit = cur.iter().find(|(c, _)| self.pivots.contains_key(c)).cloned();
            match hit {
                None => return cur,
                Some((col, coeff)) => {
                    cur = axpy(&cur, &coeff, &self.pivots[&col]);
                }
            }
        }
    }

    /// Inserts a row; returns true when it increased the rank.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let reduced = self.reduce(&row);
        if reduced.is_empty() {
            return false;
        }
        let pivot_col = match self.rule {
            PivotRule::FirstColumn => reduced[0].0,
            PivotRule::Sparsest => {
                let mut best = reduced[0].0;
                let mut best_count = usize::MAX;
                for (c, _) in &reduced {
                    let count = self.pivots.values().filter(|r| get(r, *c).is_some()).count();
                    if count < best_count {
                        best_count = count;
                        best = *c;
                    }
                }
                best
            }
        };
        let inv = get(&reduced, pivot_col).expect("pivot present").clone();
        let normalized: SparseVec = reduced
            .into_iter()
            .map(|(c, v)| (c, v / inv.clone()))
            .collect();
        // keep existing pivot rows reduced against the new one
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for col in cols {
            let row = &self.pivots[&col];
            if let Some(c) = get(row, pivot_col).cloned() {
                let newrow = axpy(row, &c, &normalized);
                self.pivots.insert(col, newrow);
            }
        }
        self.pivots.insert(pivot_col, normalized);
        true
    }

    /// A basis of the kernel of the inserted row system, one vector per free
    /// column in ascending order; each vector has a unit entry at its free
    /// column. Deterministic.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivots.contains_key(&f) {
                continue;
            }
            let mut v: SparseVec = vec![(f, scalar::one())];
            for (&p, row) in &self.pivots {
                if let Some(c) = get(row, f) {
                    v.push((p, -c.clone()));
                }
            }
            v.sort_by_key(|&(c, _)| c);
            out.push(v);
        }
        out
    }
}

/// Exact kernel basis of the matrix whose rows are given.
pub fn nullspace(rows: &[SparseVec], ncols: usize, rule: PivotRule) -> Vec<SparseVec> {
    let mut e = Eliminator::new(ncols, rule);
    for r in rows {
        e.insert(r.clone());
    }
    e.kernel_basis()
}

pub fn rank(rows: &[SparseVec], ncols: usize, rule: PivotRule) -> usize {
    let mut e = Eliminator::new(ncols, rule);
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

/// Dot-free sanity check: does the matrix annihilate the vector?
pub fn annihilates(rows: &[SparseVec], v: &SparseVec) -> bool {
    for row in rows {
        let mut acc = scalar::zero();
        for (c, val) in row {
            if let Some(x) = get(v, *c) {
                acc += val.clone() * x;
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}
