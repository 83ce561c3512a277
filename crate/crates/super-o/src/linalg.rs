//! Exact dense linear algebra and sparse column-major operators.
//!
//! The dense side is plain Gauss–Jordan over an exact field; the dimensions
//! that occur (single weight spaces of truncated modules) are small, so
//! clarity and exactness win over asymptotics. The sparse side stores linear
//! maps column-wise and is used for generator actions, where matrices are
//! very sparse and mostly get applied to vectors rather than decomposed.

use crate::scalar::Scalar;
use crate::Q;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Dense row-major matrix over an exact scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Build from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows in Matrix::from_rows"
        );
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c).clone() + a.clone() * b.clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Stack blocks vertically; all must share a column count.
    pub fn vstack(blocks: &[&Matrix<S>]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(blocks.iter().all(|b| b.cols == cols), "vstack shape mismatch");
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduce to reduced row-echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = S::one() / self.at(r, c).clone();
            for j in c..self.cols {
                let v = self.at(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j).clone() - f.clone() * self.at(r, j).clone();
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right kernel {x : Ax = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut x = vec![S::zero(); self.cols];
            x[free] = S::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -m.at(row, free).clone();
            }
            basis.push(x);
        }
        basis
    }

    /// One solution of Ax = b, or None if inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows, "solve shape mismatch");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "apply shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for c in 0..self.cols {
                    if !self.at(r, c).is_zero() && !v[c].is_zero() {
                        acc = acc + self.at(r, c).clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}

/// Sparse vector: sorted, duplicate-free, zero-free (index, value) pairs.
pub type SparseCol = Vec<(usize, Q)>;

/// Canonicalize arbitrary (index, value) pairs into a `SparseCol`.
pub fn sparse_normalize(entries: Vec<(usize, Q)>) -> SparseCol {
    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
    for (i, v) in entries {
        if v.is_zero() {
            continue;
        }
        let e = acc.entry(i).or_insert_with(Q::zero);
        *e += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `acc += c * col`, in map form.
pub fn sparse_axpy(acc: &mut BTreeMap<usize, Q>, c: &Q, col: &SparseCol) {
    if c.is_zero() {
        return;
    }
    for (i, v) in col {
        let e = acc.entry(*i).or_insert_with(Q::zero);
        *e += c * v;
    }
}

pub fn sparse_from_map(m: BTreeMap<usize, Q>) -> SparseCol {
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn sparse_to_dense(col: &SparseCol, len: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); len];
    for (i, c) in col {
        v[*i] = c.clone();
    }
    v
}

/// Sparse linear operator stored column-wise: `cols[j]` is the image of the
/// j-th domain basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOp {
    rows: usize,
    cols: Vec<SparseCol>,
}

impl SparseOp {
    pub fn new(rows: usize, ncols: usize) -> Self {
        SparseOp {
            rows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Install a canonical column (sorted, unique, nonzero entries).
    pub fn set_col(&mut self, j: usize, col: SparseCol) {
        debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(col.iter().all(|(i, v)| *i < self.rows && !v.is_zero()));
        self.cols[j] = col;
    }

    pub fn col(&self, j: usize) -> &SparseCol {
        &self.cols[j]
    }

    pub fn apply_sparse(&self, v: &SparseCol) -> SparseCol {
        let mut acc = BTreeMap::new();
        for (j, c) in v {
            sparse_axpy(&mut acc, c, &self.cols[*j]);
        }
        sparse_from_map(acc)
    }

    pub fn apply_dense(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.ncols(), "apply shape mismatch");
        let mut out = vec![Q::zero(); self.rows];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                out[*i] += a * c;
            }
        }
        out
    }

    pub fn to_dense(&self) -> Matrix<Q> {
        let mut m = Matrix::zeros(self.rows, self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.to_dense().rank()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }
}

/// Kernel of several operators with a common domain, stacked.
pub fn kernel_of_stack(ops: &[&SparseOp]) -> Vec<Vec<Q>> {
    assert!(!ops.is_empty(), "kernel_of_stack needs at least one operator");
    let ncols = ops[0].ncols();
    assert!(ops.iter().all(|o| o.ncols() == ncols));
    let dense: Vec<Matrix<Q>> = ops.iter().map(|o| o.to_dense()).collect();
    let refs: Vec<&Matrix<Q>> = dense.iter().collect();
    Matrix::vstack(&refs).kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;
    use proptest::prelude::*;

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<Q> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(qi).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_and_rank_small() {
        let m = qm(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let id = Matrix::<Q>::identity(3);
        assert_eq!(id.rank(), 3);
        assert_eq!(Matrix::<Q>::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = qm(vec![vec![1, 1], vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // The kernel vector must actually be annihilated.
        assert!(m.apply(&k[0]).iter().all(|v| v.is_zero()));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = qm(vec![vec![1, 2], vec![3, 4]]);
        let x = m.solve(&[qi(5), qi(11)]).unwrap();
        assert_eq!(m.apply(&x), vec![qi(5), qi(11)]);
        let sing = qm(vec![vec![1, 1], vec![1, 1]]);
        assert!(sing.solve(&[qi(0), qi(1)]).is_none());
        assert!(sing.solve(&[qi(2), qi(2)]).is_some());
    }

    #[test]
    fn sparse_matches_dense() {
        let mut op = SparseOp::new(3, 2);
        op.set_col(0, vec![(0, qi(2)), (2, qi(-1))]);
        op.set_col(1, vec![(1, qi(5))]);
        let d = op.to_dense();
        let v = vec![qi(3), qi(4)];
        assert_eq!(op.apply_dense(&v), d.apply(&v));
        let sv: SparseCol = vec![(0, qi(3)), (1, qi(4))];
        let got = sparse_to_dense(&op.apply_sparse(&sv), 3);
        assert_eq!(got, d.apply(&v));
        assert_eq!(op.rank(), 2);
    }

    #[test]
    fn stacked_kernel() {
        let mut a = SparseOp::new(1, 3);
        a.set_col(0, vec![(0, qi(1))]);
        a.set_col(1, vec![(0, qi(-1))]);
        let mut b = SparseOp::new(1, 3);
        b.set_col(1, vec![(0, qi(1))]);
        b.set_col(2, vec![(0, qi(-1))]);
        // Joint kernel of (x - y) and (y - z) is the diagonal line.
        let k = kernel_of_stack(&[&a, &b]);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], k[0][1]);
        assert_eq!(k[0][1], k[0][2]);
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            // Deterministic small pseudo-random rational matrix.
            let mut s = seed;
            let mut next = || {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((s >> 33) as i64 % 7) - 3
            };
            let m = Matrix::from_rows(
                (0..rows).map(|_| (0..cols).map(|_| qi(next())).collect()).collect::<Vec<_>>(),
            );
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), cols);
            for v in &k {
                prop_assert!(m.apply(v).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn solve_roundtrip(cols in 1usize..5, seed in any::<u64>()) {
            let mut s = seed;
            let mut next = || {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((s >> 33) as i64 % 5) - 2
            };
            let rows = cols + 1;
            let m = Matrix::from_rows(
                (0..rows).map(|_| (0..cols).map(|_| qi(next())).collect()).collect::<Vec<_>>(),
            );
            let x: Vec<Q> = (0..cols).map(|_| qi(next())).collect();
            let b = m.apply(&x);
            // A solution must exist (b is in the column space by construction)
            // and must reproduce b exactly.
            let got = m.solve(&b).expect("consistent system");
            prop_assert_eq!(m.apply(&got), b);
        }
    }
}
