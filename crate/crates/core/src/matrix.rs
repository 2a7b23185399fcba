//! Dense matrices over an exact [`Field`], with reduced row echelon form,
//! kernels, linear solves and Kronecker products.
//!
//! Storage is row-major. Vectors are plain `Vec<K::Elem>` treated as columns.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref<K: Field> {
    pub matrix: Matrix<K>,
    pub pivots: Vec<usize>,
}

impl<K: Field> Rref<K> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &K, rows: usize, cols: usize, data: Vec<K::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim("matrix data", rows * cols, data.len()));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: &K,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> K::Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer rows; every row must have the same length.
    pub fn from_i64(field: &K, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::dim(format!("row {i}"), cols, r.len()));
            }
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(field: &K, rows: usize, columns: &[Vec<K::Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::dim(format!("column {j}"), rows, c.len()));
            }
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[K::Elem] {
        &self.data
    }
    pub fn into_data(self) -> Vec<K::Elem> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<K::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j]).clone()
        })
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::dim("hstack rows", self.rows, other.rows));
        }
        Ok(Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::dim("matrix product", self.cols, other.rows));
        }
        let k = &self.field;
        let mut out = Self::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                let orow = other.row(l);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    k.mul_add_assign(d, a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Result<Vec<K::Elem>> {
        if self.cols != v.len() {
            return Err(Error::dim("matrix-vector product", self.cols, v.len()));
        }
        let k = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = k.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    k.mul_add_assign(&mut acc, a, b);
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&K::Elem, &K::Elem) -> K::Elem) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dim(
                "entrywise operation",
                self.rows * self.cols,
                other.rows * other.cols,
            ));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect();
        Self::from_vec(&self.field, self.rows, self.cols, data)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product: `(a⊗b)[i*rb + k][j*cb + l] = a[i][j] * b[k][l]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (rb, cb) = (other.rows, other.cols);
        let k = &self.field;
        Self::from_fn(k, self.rows * rb, self.cols * cb, |r, c| {
            k.mul(self.get(r / rb, c / cb), other.get(r % rb, c % cb))
        })
    }

    /// Reduced row echelon form; pivots are chosen as the first nonzero entry
    /// of the leftmost remaining column.
    pub fn rref(&self) -> Rref<K> {
        let mut m = self.clone();
        let pivots = m.reduce_in_place(self.cols);
        Rref { matrix: m, pivots }
    }

    /// Gauss-Jordan elimination restricted to pivots in the first `limit`
    /// columns. Returns the pivot columns.
    fn reduce_in_place(&mut self, limit: usize) -> Vec<usize> {
        let k = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..limit.min(cols) {
            if prow == self.rows {
                break;
            }
            let Some(r) = (prow..self.rows).find(|&r| !k.is_zero(&self.data[r * cols + col])) else {
                continue;
            };
            if r != prow {
                for j in col..cols {
                    self.data.swap(r * cols + j, prow * cols + j);
                }
            }
            let inv = k.inv(&self.data[prow * cols + col]).expect("pivot is nonzero");
            for j in col..cols {
                let x = &mut self.data[prow * cols + j];
                *x = k.mul(x, &inv);
            }
            let (before, rest) = self.data.split_at_mut(prow * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let pivot_tail = &pivot_row[col..];
            let nz: Vec<usize> = (col..cols).filter(|&j| !k.is_zero(&pivot_row[j])).collect();
            let eliminate = |row: &mut [K::Elem]| {
                let factor = row[col].clone();
                if k.is_zero(&factor) {
                    return;
                }
                let neg = k.neg(&factor);
                for &j in &nz {
                    k.mul_add_assign(&mut row[j], &neg, &pivot_tail[j - col]);
                }
            };
            for row in before.chunks_mut(cols) {
                eliminate(row);
            }
            for row in after.chunks_mut(cols) {
                eliminate(row);
            }
            pivots.push(col);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.rref().rank()
        } else {
            self.transpose().rref().rank()
        }
    }

    /// Basis of the null space as the columns of a `cols × nullity` matrix.
    /// There is one basis vector per free column, equal to 1 at that column
    /// and 0 at every other free column.
    pub fn kernel_basis(&self) -> Matrix<K> {
        let r = self.rref();
        let k = &self.field;
        let free: Vec<usize> = free_columns(self.cols, &r.pivots);
        let mut out = Self::zeros(k, self.cols, free.len());
        for (b, &j) in free.iter().enumerate() {
            out.set(j, b, k.one());
            for (pi, &pc) in r.pivots.iter().enumerate() {
                out.set(pc, b, k.neg(r.matrix.get(pi, j)));
            }
        }
        out
    }

    /// A solution of `self * x = b` with free variables set to zero, or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[K::Elem]) -> Result<Option<Vec<K::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::dim("right-hand side", self.rows, b.len()));
        }
        let rhs = Self::from_vec(&self.field, self.rows, 1, b.to_vec())?;
        Ok(self.solve_many(&rhs)?.pop().expect("one right-hand side"))
    }

    /// Solves `self * x = B[:, j]` for every column of `rhs` with a single
    /// elimination.
    pub fn solve_many(&self, rhs: &Matrix<K>) -> Result<Vec<Option<Vec<K::Elem>>>> {
        let mut aug = self.hstack(rhs)?;
        let pivots = aug.reduce_in_place(self.cols);
        let k = &self.field;
        let rank = pivots.len();
        Ok((0..rhs.cols)
            .map(|j| {
                let c = self.cols + j;
                if (rank..aug.rows).any(|i| !k.is_zero(aug.get(i, c))) {
                    return None;
                }
                let mut x = vec![k.zero(); self.cols];
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = aug.get(i, c).clone();
                }
                Some(x)
            })
            .collect())
    }

    /// Indices of a maximal set of linearly independent columns (the pivot
    /// columns of the echelon form).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Rows formatted with the field's scalar syntax.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| self.field.format(x)).collect())
            .collect()
    }
}

/// Complement of `pivots` in `0..n`.
pub fn free_columns(n: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n).filter(|&j| !is_pivot[j]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, Rationals};

    fn q(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_i64(&Rationals, rows).unwrap()
    }

    #[test]
    fn rref_of_identity_and_zero() {
        let i = Matrix::identity(&Rationals, 3);
        let r = i.rref();
        assert_eq!(r.matrix, i);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        let z = Matrix::zeros(&Rationals, 2, 3);
        assert_eq!(z.rref().rank(), 0);
        assert_eq!(z.kernel_basis().cols(), 3);
    }

    #[test]
    fn rref_of_rank_one_matrix() {
        let r = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.matrix, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_over_f2() {
        let f2 = PrimeField::new(2).unwrap();
        let m = Matrix::from_i64(&f2, &[&[1, 1]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![Fp(1), Fp(1)]);
    }

    #[test]
    fn solve_rational_and_inconsistent() {
        let x = q(&[&[2]]).solve(&[Rationals.from_i64(1)]).unwrap().unwrap();
        assert_eq!(x, vec![Rationals.parse("1/2").unwrap()]);
        let m = q(&[&[1, 1], &[1, 1]]);
        let b = vec![Rationals.from_i64(1), Rationals.from_i64(2)];
        assert_eq!(m.solve(&b).unwrap(), None);
        assert!(m.solve(&b[..1]).is_err());
    }

    #[test]
    fn kron_of_swaps_is_a_permutation() {
        let swap = q(&[&[0, 1], &[1, 0]]);
        let k = swap.kron(&swap);
        let expected = q(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = q(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[0, 0, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 4 - m.rank());
        assert!(m.mul(&k).unwrap().is_zero());
    }
}
