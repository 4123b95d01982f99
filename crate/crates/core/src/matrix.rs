//! Dense matrices over a [`CommRing`] and division-free determinants.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::CommRing;

/// Row-major dense matrix. Arithmetic takes the ring as an argument.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn identity<R: CommRing<Elem = T>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn diagonal<R: CommRing<Elem = T>>(ring: &R, diag: &[T]) -> Self {
        Self::from_fn(diag.len(), diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                ring.zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    pub fn mul<R: CommRing<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(ring.zero(), |acc, k| {
                ring.add(&acc, &ring.mul(self.get(i, k), other.get(k, j)))
            })
        }))
    }

    pub fn add<R: CommRing<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        })
    }

    fn scaled_identity_add<R: CommRing<Elem = T>>(&mut self, ring: &R, c: &T) {
        for i in 0..self.rows.min(self.cols) {
            let v = ring.add(self.get(i, i), c);
            self.set(i, i, v);
        }
    }

    fn check_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )))
        }
    }
}

/// Coefficients `[1, c_1, ..., c_n]` of `det(xI - A)`, highest degree
/// first, by Berkowitz's algorithm. No divisions; valid over any
/// commutative ring.
pub fn char_poly<R: CommRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<Vec<R::Elem>> {
    a.check_square()?;
    let n = a.rows();
    let mut poly = vec![ring.one()];
    for k in 0..n {
        // Border the leading k x k block A_k with column c, row r and corner a_kk.
        // Toeplitz column: 1, -a_kk, -r c, -r A_k c, ..., -r A_k^{k-1} c.
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(a.get(k, k)));
        let mut v: Vec<R::Elem> = (0..k).map(|i| a.get(i, k).clone()).collect();
        for _ in 0..k {
            let rv = (0..k).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(a.get(k, j), &v[j])));
            toeplitz.push(ring.neg(&rv));
            v = (0..k)
                .map(|i| (0..k).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(a.get(i, j), &v[j]))))
                .collect();
        }
        let next: Vec<R::Elem> = (0..k + 2)
            .map(|i| {
                (0..=i.min(k)).fold(ring.zero(), |acc, j| {
                    ring.add(&acc, &ring.mul(&toeplitz[i - j], &poly[j]))
                })
            })
            .collect();
        poly = next;
    }
    Ok(poly)
}

/// Determinant of a square matrix, division free.
pub fn det<R: CommRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    let n = a.rows();
    let poly = char_poly(ring, a)?;
    let last = poly[n].clone();
    Ok(if n % 2 == 0 { last } else { ring.neg(&last) })
}

/// Adjugate via Cayley-Hamilton: `adj(A) = (-1)^(n-1) (A^(n-1) + c_1 A^(n-2) + ... + c_(n-1) I)`.
pub fn adjugate<R: CommRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let n = a.rows();
    let poly = char_poly(ring, a)?;
    if n == 0 {
        return Ok(a.clone());
    }
    let mut acc = Matrix::identity(ring, n);
    for c in &poly[1..n] {
        acc = a.mul(ring, &acc)?;
        acc.scaled_identity_add(ring, c);
    }
    if n % 2 == 0 {
        acc = acc.map(|x| ring.neg(x));
    }
    Ok(acc)
}

/// Inverse given an inverse for the determinant; `None` when the
/// determinant is not invertible.
pub fn inverse_with<R: CommRing>(
    ring: &R,
    a: &Matrix<R::Elem>,
    invert: impl FnOnce(&R::Elem) -> Option<R::Elem>,
) -> Result<Option<Matrix<R::Elem>>> {
    let d = det(ring, a)?;
    let Some(d_inv) = invert(&d) else {
        return Ok(None);
    };
    Ok(Some(adjugate(ring, a)?.map(|x| ring.mul(x, &d_inv))))
}
