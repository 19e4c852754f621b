//! Dense matrices over an exact scalar ring.
//!
//! Differentials in this crate decompose into small blocks (per degree and,
//! for the models, per multidegree), so a dense representation with exact
//! entries is both simple and fast enough. Construction from sparse triplets
//! is provided because the callers naturally produce sparse data.

use crate::scalar::Scalar;
use crate::Int;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: &[(usize, usize, T)]) -> Self {
        let mut m = Self::zero(rows, cols);
        for (i, j, v) in entries {
            let cur = m[(*i, *j)].clone();
            m[(*i, *j)] = cur + v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out[(i, j)].clone();
                    out[(i, j)] = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.clone() + b.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Matrix with the selected columns, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut out = Self::zero(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Matrix with the selected rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut out = Self::zero(idx.len(), self.cols);
        for (ii, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out[(ii, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        (0..self.rows).flat_map(move |i| (0..self.cols).map(move |j| (i, j, &self[(i, j)])))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[a] += c * row[b]`
    pub(crate) fn add_row_multiple(&mut self, a: usize, b: usize, c: &T) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = self[(b, j)].clone() * c.clone();
            if !add.is_zero() {
                let cur = self[(a, j)].clone();
                self[(a, j)] = cur + add;
            }
        }
    }

    /// `col[a] += c * col[b]`
    pub(crate) fn add_col_multiple(&mut self, a: usize, b: usize, c: &T) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = self[(i, b)].clone() * c.clone();
            if !add.is_zero() {
                let cur = self[(i, a)].clone();
                self[(i, a)] = cur + add;
            }
        }
    }

    pub(crate) fn scale_row(&mut self, a: usize, c: &T) {
        for j in 0..self.cols {
            self[(a, j)] = self[(a, j)].clone() * c.clone();
        }
    }

    pub(crate) fn scale_col(&mut self, a: usize, c: &T) {
        for i in 0..self.rows {
            self[(i, a)] = self[(i, a)].clone() * c.clone();
        }
    }
}

impl Mat<Int> {
    /// Reinterprets an integer matrix over another scalar.
    pub fn cast<U: Scalar>(&self) -> Mat<U> {
        self.map(|x| U::from_int(x))
    }

    /// Reduction into the prime field `ℤ/p` with the modulus bound.
    pub fn cast_fp(&self, p: u64) -> Mat<crate::scalar::Fp> {
        let modulus = Int::from(p);
        self.map(|x| {
            let r = num_integer::Integer::mod_floor(x, &modulus);
            crate::scalar::fp(i64::try_from(r).expect("residue fits"), p)
        })
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
