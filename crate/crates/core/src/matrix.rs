//! Dense matrices over a [`Field`] with Gaussian elimination.

use crate::error::{invalid, Result};
use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub reduced: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E: Copy + Eq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(invalid(format!("{} entries do not fill a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds from rows; ragged input is rejected.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(invalid("ragged matrix rows"));
        }
        let n = rows.len();
        Self::from_vec(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// `[self | column]`.
    pub fn augment(&self, column: &[E]) -> Result<Self> {
        if column.len() != self.rows {
            return Err(invalid("augmenting column has the wrong length"));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + 1));
        for (i, &c) in column.iter().enumerate() {
            data.extend_from_slice(self.row(i));
            data.push(c);
        }
        Ok(Self { rows: self.rows, cols: self.cols + 1, data })
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(field.zero(), |acc, (&a, &b)| field.add(acc, field.mul(a, b))))
            .collect()
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn echelon<F: Field<Elem = E>>(&self, field: &F) -> Echelon<E> {
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !field.is_zero(m.data[i * cols + c])) else {
                continue;
            };
            if p != r {
                for j in c..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = field.inv(m.data[r * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                m.data[r * cols + j] = field.mul(m.data[r * cols + j], inv);
            }
            let (before, rest) = m.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for row in before.chunks_exact_mut(cols).chain(after.chunks_exact_mut(cols)) {
                let factor = row[c];
                if field.is_zero(factor) {
                    continue;
                }
                for j in c..cols {
                    row[j] = field.sub(row[j], field.mul(factor, pivot_row[j]));
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        self.echelon(field).rank()
    }

    /// Canonical basis of `{v : M v = 0}`; see [`Echelon::kernel_basis`].
    pub fn right_kernel_basis<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<E>> {
        self.echelon(field).kernel_basis(field)
    }

    /// The `L x t` matrix with entry `(l, i) = points[l]^i`.
    pub fn vandermonde<F: Field<Elem = E>>(field: &F, points: &[E], t: usize) -> Result<Self> {
        if t == 0 {
            return Err(invalid("Vandermonde width must be at least 1"));
        }
        let mut data = Vec::with_capacity(points.len() * t);
        for &a in points {
            let mut pw = field.one();
            for _ in 0..t {
                data.push(pw);
                pw = field.mul(pw, a);
            }
        }
        Self::from_vec(points.len(), t, data)
    }
}

impl<E: Copy + Eq> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One vector per free column `j`: entry `j` is one, pivot entries are
    /// read off the reduced rows, everything else is zero. The last nonzero
    /// entry of each vector is therefore the one at its free column.
    pub fn kernel_basis<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<E>> {
        let cols = self.reduced.cols;
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut v = vec![field.zero(); cols];
                v[j] = field.one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = field.neg(self.reduced[(r, j)]);
                }
                v
            })
            .collect()
    }
}

impl<E> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;

    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}
