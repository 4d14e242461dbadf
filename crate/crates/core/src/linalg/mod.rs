//! Dense linear algebra over finite fields.
//!
//! Everything here is exact. Elimination always picks the first nonzero
//! entry in scan order as pivot, so echelon forms, kernel bases and quotient
//! representatives are reproducible bit for bit.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

mod field;

pub use field::{Field, FiniteField, PrimeField};

/// Matrices over GF(p), as used for boundary maps.
pub type PrimeFieldMatrix = Matrix<PrimeField>;

/// Matrices with at least this many entries are eliminated in parallel.
const PARALLEL_ENTRIES: usize = 1 << 16;

/// Row-major dense matrix with entries in `[0, p)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows, reducing each entry mod p.
    pub fn from_rows(field: F, cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.residue(x));
            }
        }
        m
    }

    /// Builds a matrix from residue rows (entries already in `[0, p)`).
    pub fn from_residue_rows(field: F, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend(row.into_iter().map(|x| x % field.order() as u32));
        }
        Matrix {
            field,
            rows: n_rows,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        debug_assert!((x as u64) < self.field.order());
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = f.add(out.get(i, j), f.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: F, cols: usize, blocks: &[&Matrix<F>]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Reduced row echelon form of the row space.
    pub fn echelon(&self) -> Echelon<F> {
        let f = self.field;
        let cols = self.cols;
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    a.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(a[r * cols + c]);
            for j in c..cols {
                a[r * cols + j] = f.mul(a[r * cols + j], inv);
            }
            let (head, tail) = a.split_at_mut(r * cols);
            let (pivot_row, rest) = tail.split_at_mut(cols);
            let support: Vec<(usize, u32)> = (c..cols)
                .filter(|&j| pivot_row[j] != 0)
                .map(|j| (j, pivot_row[j]))
                .collect();
            let eliminate = |row: &mut [u32]| {
                let factor = row[c];
                if factor != 0 {
                    for &(j, x) in &support {
                        row[j] = f.sub(row[j], f.mul(factor, x));
                    }
                }
            };
            if self.rows * cols >= PARALLEL_ENTRIES {
                head.par_chunks_mut(cols).for_each(eliminate);
                rest.par_chunks_mut(cols).for_each(eliminate);
            } else {
                head.chunks_mut(cols).for_each(eliminate);
                rest.chunks_mut(cols).for_each(eliminate);
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r * cols);
        Echelon {
            field: f,
            cols,
            rows: a,
            pivots,
        }
    }

    /// Basis of `{x : Mx = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let e = self.echelon();
        let f = self.field;
        e.free_columns()
            .into_iter()
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1;
                for (i, &pc) in e.pivots.iter().enumerate() {
                    v[pc] = f.neg(e.row(i)[free]);
                }
                v
            })
            .collect()
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A subspace of `GF(p)^cols` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<u32>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    /// The zero subspace of `GF(p)^cols`.
    pub fn zero(field: F, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i * self.cols..(i + 1) * self.cols]
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` modulo the subspace in place; afterwards every pivot
    /// coordinate of `v` is zero.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (i, &pc) in self.pivots.iter().enumerate() {
            let factor = v[pc];
            if factor == 0 {
                continue;
            }
            let row = self.row(i);
            for j in pc..self.cols {
                if row[j] != 0 {
                    v[j] = f.sub(v[j], f.mul(factor, row[j]));
                }
            }
        }
    }

    /// Coordinates of the class of `v` in the quotient, read off at the
    /// free columns after reduction.
    pub fn quotient_coords(&self, v: &[u32], free: &[usize]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        free.iter().map(|&c| w[c]).collect()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}

/// Coordinate representatives for `GF(p)^ambient / span`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientBasis {
    /// Pivot columns of the span in reduced echelon form.
    pub pivots: Vec<usize>,
    /// Non-pivot columns; their unit vectors form a basis of the quotient.
    pub representatives: Vec<usize>,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// Splits the ambient coordinates into pivots of `span` (rows are the
/// spanning vectors) and quotient representatives.
pub fn quotient_basis<F: Field>(span: &Matrix<F>, ambient_dim: usize) -> QuotientBasis {
    assert_eq!(span.cols(), ambient_dim, "span vectors must live in the ambient space");
    let e = span.echelon();
    QuotientBasis {
        representatives: e.free_columns(),
        pivots: e.pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = PrimeField::default();
        assert_eq!(PrimeFieldMatrix::zeros(f, 0, 0).rank(), 0);
        assert_eq!(PrimeFieldMatrix::identity(f, 3).rank(), 3);
        // ∂₁ of the triangle boundary: rows vertices 1,2,3; cols edges 12,13,23
        let d1 = PrimeFieldMatrix::from_rows(f, 3, &[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert_eq!(d1.rank(), 2);
        let ker = d1.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(d1.mul_vec(&ker[0]).iter().all(|&x| x == 0));
        // the cycle 12 - 13 + 23
        assert_eq!(ker[0], vec![1, f.residue(-1), 1]);
    }

    #[test]
    fn kernel_examples() {
        let f = PrimeField::default();
        assert!(PrimeFieldMatrix::identity(f, 4).kernel_basis().is_empty());
        let z = PrimeFieldMatrix::zeros(f, 2, 3);
        assert_eq!(z.kernel_basis().len(), 3);
    }

    #[test]
    fn quotient_examples() {
        let f = PrimeField::default();
        let empty = PrimeFieldMatrix::zeros(f, 0, 4);
        assert_eq!(quotient_basis(&empty, 4).representatives, vec![0, 1, 2, 3]);
        let full = PrimeFieldMatrix::identity(f, 4);
        assert_eq!(quotient_basis(&full, 4).dim(), 0);
        let span = PrimeFieldMatrix::from_rows(f, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let q = quotient_basis(&span, 3);
        assert_eq!(q.pivots, vec![0, 1]);
        assert_eq!(q.representatives, vec![2]);
    }

    #[test]
    fn echelon_reduction() {
        let f = gf(5);
        let span = PrimeFieldMatrix::from_rows(f, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let e = span.echelon();
        assert!(e.contains(&[1, 2, 1]));
        assert!(!e.contains(&[0, 0, 1]));
        // (0,0,1) ≡ (1,0,0) mod span since (1,0,0) - (0,0,1) = (1,1,0) - (0,1,1)
        assert_eq!(e.quotient_coords(&[0, 0, 1], &[2]), vec![1]);
        assert_eq!(e.quotient_coords(&[1, 0, 0], &[2]), vec![1]);
    }

    #[test]
    fn elimination_over_an_extension() {
        // over GF(4) the rows (1, x) and (x, x+1) are dependent: x·(1, x) = (x, x^2) = (x, x+1)
        let f = FiniteField::new(2, 2).unwrap();
        let m = Matrix::from_residue_rows(f, 2, vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(m.rank(), 1);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|&x| x == 0));
        // over GF(2) the same integer pattern reduces to something else entirely
        assert_eq!(Matrix::from_rows(gf(2), 2, &[vec![1, 0], vec![0, 1]]).rank(), 2);
    }

    fn arb_matrix(p: u32) -> impl Strategy<Value = PrimeFieldMatrix> {
        (0usize..=10, 0usize..=10).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p, r * c).prop_map(move |data| {
                let rows: Vec<Vec<u32>> = data.chunks(c.max(1)).take(r).map(|ch| ch[..c].to_vec()).collect();
                let rows = if c == 0 { vec![Vec::new(); r] } else { rows };
                PrimeFieldMatrix::from_residue_rows(gf(p), c, rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(m in arb_matrix(3)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in arb_matrix(32003)) {
            let ker = m.kernel_basis();
            prop_assert_eq!(ker.len() + m.rank(), m.cols());
            for v in &ker {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn pivoting_is_deterministic(m in arb_matrix(2)) {
            prop_assert_eq!(quotient_basis(&m, m.cols()), quotient_basis(&m.clone(), m.cols()));
            prop_assert_eq!(m.echelon(), m.echelon());
        }
    }
}
