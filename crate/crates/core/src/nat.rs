//! Matrices over the natural numbers.

use std::fmt;

use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vec};
use crate::scalar::Natural;

/// A dense row-major `rows × cols` matrix of naturals. Arithmetic is
/// checked, so fixed-width scalars report overflow instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NatMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Natural> NatMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        NatMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(cols, rows)
    }

    /// Like [`NatMatrix::from_rows`] but also fixes the width of a 0-row matrix.
    pub fn from_rows_with_cols(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::shape("ragged rows"));
        }
        let n = rows.len();
        Ok(NatMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_u64_rows(rows: &[Vec<u64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| T::from_u64(x).expect("u64 fits")).collect()).collect())
    }

    /// 0/1 matrix from a GF(2) matrix.
    pub fn from_f2(m: &F2Matrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in m.row(i).ones() {
                out.data[i * m.cols() + j] = T::one();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as `u64`, or `None` if any entry is too large.
    pub fn to_u64_rows(&self) -> Option<Vec<Vec<u64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(T::to_u64).collect()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.checked_mul(b).ok_or(Error::Overflow("nat_mul"))?;
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = slot.checked_add(&prod).ok_or(Error::Overflow("nat_mul"))?;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; the left factor indexes the outer blocks.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let v = a.checked_mul(other.get(k, l)).ok_or(Error::Overflow("nat_kron"))?;
                        out.data[(i * other.rows + k) * c + j * other.cols + l] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn mod2(&self) -> F2Matrix {
        let rows = (0..self.rows)
            .map(|i| F2Vec::from_bools(&self.row(i).iter().map(|x| x.is_odd()).collect::<Vec<_>>()))
            .collect();
        F2Matrix::from_row_vecs(self.cols, rows).expect("consistent shape")
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn column_sums(&self) -> Result<Vec<T>> {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .try_fold(T::zero(), |acc, i| acc.checked_add(self.get(i, j)).ok_or(Error::Overflow("column sum")))
            })
            .collect()
    }

    pub fn row_sums(&self) -> Result<Vec<T>> {
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().try_fold(T::zero(), |acc, x| acc.checked_add(x).ok_or(Error::Overflow("row sum")))
            })
            .collect()
    }

    /// Converts every entry to another scalar type.
    pub fn convert<U: Natural>(&self) -> Result<NatMatrix<U>> {
        let data = self
            .data
            .iter()
            .map(|x| U::from_str_radix(&x.to_string(), 10).ok())
            .collect::<Option<Vec<U>>>()
            .ok_or(Error::Overflow("scalar conversion"))?;
        Ok(NatMatrix { rows: self.rows, cols: self.cols, data })
    }
}

/// `A · B`.
pub fn nat_mul<T: Natural>(a: &NatMatrix<T>, b: &NatMatrix<T>) -> Result<NatMatrix<T>> {
    a.mul(b)
}

/// `A ⊗ B`.
pub fn nat_kron<T: Natural>(a: &NatMatrix<T>, b: &NatMatrix<T>) -> Result<NatMatrix<T>> {
    a.kron(b)
}

impl<T: Natural> fmt::Debug for NatMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatMatrix {}x{} {:?}", self.rows, self.cols, self.to_rows())
    }
}

struct Entry<'a, T>(&'a T);

impl<T: Natural> Serialize for Entry<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(v) = self.0.to_u64() {
            s.serialize_u64(v)
        } else if let Some(v) = self.0.to_u128() {
            s.serialize_u128(v)
        } else {
            // beyond u128 a JSON number loses precision in most readers
            s.serialize_str(&self.0.to_string())
        }
    }
}

struct Rows<'a, T>(&'a NatMatrix<T>);

impl<T: Natural> Serialize for Rows<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = self.0;
        let mut seq = s.serialize_seq(Some(m.rows))?;
        for i in 0..m.rows {
            seq.serialize_element(&m.row(i).iter().map(Entry).collect::<Vec<_>>())?;
        }
        seq.end()
    }
}

impl<T: Natural> Serialize for NatMatrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NatMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &Rows(self))?;
        st.end()
    }
}
