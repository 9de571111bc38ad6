//! Sparse row echelon forms over an exact field.

use std::collections::HashMap;

use crate::exactnum::Field;

/// Sparse vector as `(column, value)` pairs, strictly increasing in column and
/// free of zeros. Smaller columns are eliminated first.
pub type SparseRow<F> = Vec<(usize, F)>;

/// `a - c * b`.
pub fn sub_scaled<F: Field>(a: &[(usize, F)], b: &[(usize, F)], c: &F) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, b[j].1.mul_ref(c).neg_ref()));
            j += 1;
        } else {
            let v = a[i].1.sub_ref(&b[j].1.mul_ref(c));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Builds a sparse row from unsorted entries, summing duplicates.
pub fn row_from_entries<F: Field>(entries: impl IntoIterator<Item = (usize, F)>) -> SparseRow<F> {
    let mut v: Vec<(usize, F)> = entries.into_iter().collect();
    v.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow<F> = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx = lx.add_ref(&x),
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Incrementally built echelon basis of a row space. Each stored row has
/// leading coefficient 1 and a distinct leading column.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    pivots: HashMap<usize, SparseRow<F>>,
    order: Vec<usize>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { pivots: HashMap::new(), order: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.order.len()
    }

    /// Eliminates leading entries until the leading column is not a pivot.
    /// The result is zero iff `row` lies in the span.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        while let Some((c, x)) = row.first() {
            match self.pivots.get(c) {
                Some(p) => {
                    let x = x.clone();
                    row = sub_scaled(&row, p, &x);
                }
                None => break,
            }
        }
        row
    }

    /// Eliminates every entry that sits in a pivot column.
    pub fn reduce_fully(&self, row: SparseRow<F>) -> SparseRow<F> {
        let mut row = self.reduce(row);
        let mut k = 1;
        while k < row.len() {
            let (c, x) = row[k].clone();
            match self.pivots.get(&c) {
                Some(p) => {
                    row = sub_scaled(&row, p, &x);
                    // entries before k are untouched since p starts at c
                }
                None => k += 1,
            }
        }
        row
    }

    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row; returns its new pivot column, or `None` if it was dependent.
    pub fn insert(&mut self, row: SparseRow<F>) -> Option<usize> {
        let row = self.reduce(row);
        let (c, lead) = row.first()?.clone();
        let inv = lead.inv().expect("nonzero leading coefficient");
        let row: SparseRow<F> = row.into_iter().map(|(k, x)| (k, x.mul_ref(&inv))).collect();
        self.pivots.insert(c, row);
        self.order.push(c);
        Some(c)
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    /// Pivot rows in insertion order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseRow<F>> {
        self.order.iter().map(move |c| &self.pivots[c])
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.order
    }
}

/// Solves `A x = b` for a dense system given by rows of `A` and entries of
/// `b`. Returns one solution with free variables set to zero, or `None`.
pub fn solve_dense<F: Field>(a: &[Vec<F>], b: &[F], unknowns: usize) -> Option<Vec<F>> {
    // Augmented rows: columns 0..unknowns are variables, column `unknowns` the
    // right hand side.
    let mut ech = Echelon::new();
    for (row, rhs) in a.iter().zip(b) {
        let entries = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .chain(std::iter::once((unknowns, rhs.clone())).filter(|(_, x)| !x.is_zero()));
        ech.insert(row_from_entries(entries));
    }
    if ech.is_pivot(unknowns) {
        return None;
    }
    let mut x = vec![F::zero(); unknowns];
    let mut cols: Vec<usize> = ech.pivot_columns().to_vec();
    cols.sort_unstable_by(|a, b| b.cmp(a));
    for c in cols {
        let row = &ech.pivots[&c];
        let mut val = F::zero();
        for (k, v) in row.iter().skip(1) {
            if *k == unknowns {
                val = val.add_ref(v);
            } else {
                val = val.sub_ref(&v.mul_ref(&x[*k]));
            }
        }
        x[c] = val;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use crate::Ring;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(vec![(0, q(1)), (2, q(2))]).is_some());
        assert!(e.insert(vec![(1, q(1)), (2, q(1))]).is_some());
        assert!(e.insert(vec![(0, q(2)), (1, q(3)), (2, q(7))]).is_none());
        assert_eq!(e.rank(), 2);
        assert!(e.contains(vec![(0, q(1)), (1, q(1)), (2, q(3))]));
        assert!(!e.contains(vec![(2, q(1))]));
    }

    #[test]
    fn full_reduction_clears_pivots() {
        let mut e = Echelon::new();
        e.insert(vec![(1, q(1)), (3, q(1))]);
        let r = e.reduce_fully(vec![(0, q(1)), (1, q(2)), (2, q(5))]);
        assert_eq!(r, vec![(0, q(1)), (2, q(5)), (3, q(-2))]);
    }

    #[test]
    fn dense_solve() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        let x = solve_dense(&a, &[q(3), q(1)], 2).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let inconsistent = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert!(solve_dense(&inconsistent, &[q(1), q(3)], 2).is_none());
    }
}
