//! Dense linear algebra over GF(2).

use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};

const W: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(W)
}

/// A bit vector of fixed length. Coordinates are 0-based here; coordinate 0
/// corresponds to wire 1. Vectors order by length, then lexicographically
/// by coordinate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Any nonzero entry counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    /// The vector whose coordinates are the binary digits of `index`,
    /// coordinate 0 most significant.
    pub fn from_index(len: usize, index: u64) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            if (index >> (len - 1 - i)) & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    /// Inverse of [`F2Vec::from_index`]. Panics beyond 64 coordinates.
    pub fn to_index(&self) -> u64 {
        assert!(self.len <= 64, "basis index needs more than 64 bits");
        (0..self.len).fold(0u64, |acc, i| (acc << 1) | self.get(i) as u64)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / W] >> (i % W)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % W);
        if b {
            self.words[i / W] |= mask;
        } else {
            self.words[i / W] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / W] ^= 1u64 << (i % W);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &F2Vec) -> F2Vec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, w)| **w != 0).map(|(k, w)| k * W + w.trailing_zeros() as usize)
    }

    pub fn concat(&self, other: &F2Vec) -> F2Vec {
        let mut out = F2Vec::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Coordinates `start..end`.
    pub fn slice(&self, start: usize, end: usize) -> F2Vec {
        assert!(start <= end && end <= self.len);
        let mut out = F2Vec::zeros(end - start);
        for i in self.ones().filter(|&i| i >= start && i < end) {
            out.set(i - start, true);
        }
        out
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * W + t)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }
}

impl Ord for F2Vec {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len.cmp(&other.len).then_with(|| {
            let a = self.words.iter().map(|w| w.reverse_bits());
            a.cmp(other.words.iter().map(|w| w.reverse_bits()))
        })
    }
}

impl PartialOrd for F2Vec {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", b as u8)?;
        }
        write!(f, ")")
    }
}

impl Serialize for F2Vec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_bits().serialize(s)
    }
}

/// A dense `rows × cols` matrix over GF(2), stored as row bit vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vec>,
}

/// Output of [`F2Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: F2Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix { rows, cols, data: vec![F2Vec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| F2Vec::unit(n, i)).collect();
        F2Matrix { rows: n, cols: n, data }
    }

    /// Builds from row vectors. `cols` is needed when there are no rows.
    pub fn from_row_vecs(cols: usize, rows: Vec<F2Vec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::shape(format!("row of length {} in a matrix with {cols} columns", r.len())));
        }
        Ok(F2Matrix { rows: rows.len(), cols, data: rows })
    }

    pub fn from_col_vecs(rows: usize, cols: &[F2Vec]) -> Result<Self> {
        if let Some(c) = cols.iter().find(|c| c.len() != rows) {
            return Err(Error::shape(format!("column of length {} in a matrix with {rows} rows", c.len())));
        }
        let mut m = F2Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    /// Builds from nested rows of 0/1 entries; a ragged input is a shape error.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| F2Vec::from_bits(r)).collect();
        Self::from_row_vecs(cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.data[i].set(j, b)
    }

    pub fn row(&self, i: usize) -> &F2Vec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[F2Vec] {
        &self.data
    }

    pub fn column(&self, j: usize) -> F2Vec {
        let mut c = F2Vec::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn columns(&self) -> Vec<F2Vec> {
        self.transpose().data
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.data.iter().map(F2Vec::to_bits).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vec::is_zero)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for j in r.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc = F2Vec::zeros(other.cols);
                for k in r.ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(F2Matrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn apply(&self, v: &F2Vec) -> Result<F2Vec> {
        if v.len() != self.cols {
            return Err(Error::shape(format!("vector of length {} for a matrix with {} columns", v.len(), self.cols)));
        }
        let mut out = F2Vec::zeros(self.rows);
        for (i, r) in self.data.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::shape("adding matrices of different shapes"));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.xor(b)).collect();
        Ok(F2Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.rows != other.rows {
            return Err(Error::shape(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.concat(b)).collect();
        Ok(F2Matrix { rows: self.rows, cols: self.cols + other.cols, data })
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.cols {
            return Err(Error::shape(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(F2Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &F2Matrix) -> F2Matrix {
        let mut data: Vec<F2Vec> = self.data.iter().map(|r| r.concat(&F2Vec::zeros(other.cols))).collect();
        data.extend(other.data.iter().map(|r| F2Vec::zeros(self.cols).concat(r)));
        F2Matrix { rows: self.rows + other.rows, cols: self.cols + other.cols, data }
    }

    /// Rows `start..end`.
    pub fn row_block(&self, start: usize, end: usize) -> F2Matrix {
        F2Matrix { rows: end - start, cols: self.cols, data: self.data[start..end].to_vec() }
    }

    pub fn select_columns(&self, cols: &[usize]) -> F2Matrix {
        let mut m = F2Matrix::zeros(self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                if self.get(i, j) {
                    m.set(i, jj, true);
                }
            }
        }
        m
    }

    /// Reduced row echelon form by Gauss–Jordan elimination. Pivots are
    /// chosen left to right, so the result is unique.
    pub fn rref(&self) -> Rref {
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        Rref { reduced: F2Matrix { rows: self.rows, cols: self.cols, data: rows }, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of `{x : self·x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<F2Vec> {
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = F2Vec::unit(self.cols, f);
                for (r, &p) in pivots.iter().enumerate() {
                    if reduced.get(r, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Returns `(E, M)` with `M·E = self`, `E` of full row rank and `M` of
    /// full column rank. `M` is the pivot columns, `E` the nonzero rows of
    /// the reduced form.
    pub fn rank_factorize(&self) -> (F2Matrix, F2Matrix) {
        let Rref { reduced, pivots, rank } = self.rref();
        let e = reduced.row_block(0, rank);
        let m = self.select_columns(&pivots);
        (e, m)
    }

    pub fn is_identity(&self) -> bool {
        *self == F2Matrix::identity(self.rows)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix {}x{} {:?}", self.rows, self.cols, self.to_rows())
    }
}

impl Serialize for F2Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("F2Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &self.to_rows())?;
        st.end()
    }
}

/// Reduced echelon basis of the span of `vectors`, all of length `len`.
pub fn echelon_basis(len: usize, vectors: impl IntoIterator<Item = F2Vec>) -> Vec<F2Vec> {
    let m = F2Matrix::from_row_vecs(len, vectors.into_iter().collect()).expect("vector lengths");
    let Rref { reduced, rank, .. } = m.rref();
    reduced.data.into_iter().take(rank).collect()
}

/// Clears the pivot coordinates of `v` against a reduced echelon basis.
pub fn reduce_against(basis: &[F2Vec], v: &F2Vec) -> F2Vec {
    let mut out = v.clone();
    for b in basis {
        let p = b.first_one().expect("echelon basis vectors are nonzero");
        if out.get(p) {
            out.xor_assign(b);
        }
    }
    out
}

/// `x ↦ linear·x + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    linear: F2Matrix,
    offset: F2Vec,
}

impl AffineMap {
    pub fn new(linear: F2Matrix, offset: F2Vec) -> Result<Self> {
        if offset.len() != linear.rows() {
            return Err(Error::shape(format!(
                "offset of length {} for a map with {} outputs",
                offset.len(),
                linear.rows()
            )));
        }
        Ok(AffineMap { linear, offset })
    }

    pub fn linear_only(linear: F2Matrix) -> Self {
        let offset = F2Vec::zeros(linear.rows());
        AffineMap { linear, offset }
    }

    pub fn linear(&self) -> &F2Matrix {
        &self.linear
    }

    pub fn offset(&self) -> &F2Vec {
        &self.offset
    }

    pub fn dom(&self) -> usize {
        self.linear.cols()
    }

    pub fn cod(&self) -> usize {
        self.linear.rows()
    }

    pub fn apply(&self, x: &F2Vec) -> Result<F2Vec> {
        Ok(self.linear.apply(x)?.xor(&self.offset))
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &AffineMap) -> Result<AffineMap> {
        let linear = next.linear.mul(&self.linear)?;
        let offset = next.linear.apply(&self.offset)?.xor(&next.offset);
        Ok(AffineMap { linear, offset })
    }

    pub fn direct_sum(&self, other: &AffineMap) -> AffineMap {
        AffineMap { linear: self.linear.direct_sum(&other.linear), offset: self.offset.concat(&other.offset) }
    }
}

/// A coset `offset + span(basis)` inside `F2^ambient_dim`, or the empty set.
/// The basis is in reduced echelon form and the offset has zeros in every
/// pivot coordinate, so equal subspaces are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AffineSubspace {
    Empty { ambient_dim: usize },
    Coset { ambient_dim: usize, offset: F2Vec, basis: Vec<F2Vec> },
}

impl AffineSubspace {
    pub fn new(ambient_dim: usize, offset: F2Vec, generators: impl IntoIterator<Item = F2Vec>) -> Result<Self> {
        if offset.len() != ambient_dim {
            return Err(Error::shape("offset length differs from ambient dimension"));
        }
        let gens: Vec<F2Vec> = generators.into_iter().collect();
        if gens.iter().any(|g| g.len() != ambient_dim) {
            return Err(Error::shape("generator length differs from ambient dimension"));
        }
        let basis = echelon_basis(ambient_dim, gens);
        let offset = reduce_against(&basis, &offset);
        Ok(AffineSubspace::Coset { ambient_dim, offset, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            AffineSubspace::Empty { ambient_dim } | AffineSubspace::Coset { ambient_dim, .. } => *ambient_dim,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, AffineSubspace::Empty { .. })
    }

    /// Dimension, or `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        match self {
            AffineSubspace::Empty { .. } => None,
            AffineSubspace::Coset { basis, .. } => Some(basis.len()),
        }
    }

    pub fn offset(&self) -> Option<&F2Vec> {
        match self {
            AffineSubspace::Empty { .. } => None,
            AffineSubspace::Coset { offset, .. } => Some(offset),
        }
    }

    pub fn basis(&self) -> &[F2Vec] {
        match self {
            AffineSubspace::Empty { .. } => &[],
            AffineSubspace::Coset { basis, .. } => basis,
        }
    }

    pub fn contains(&self, x: &F2Vec) -> bool {
        match self {
            AffineSubspace::Empty { .. } => false,
            AffineSubspace::Coset { offset, basis, .. } => reduce_against(basis, &x.xor(offset)).is_zero(),
        }
    }

    /// All points, in order of the binary counter over basis coefficients.
    pub fn points(&self) -> Vec<F2Vec> {
        match self {
            AffineSubspace::Empty { .. } => Vec::new(),
            AffineSubspace::Coset { offset, basis, .. } => {
                assert!(basis.len() < 32, "too many points to enumerate");
                (0u64..1 << basis.len())
                    .map(|mask| {
                        let mut p = offset.clone();
                        for (i, b) in basis.iter().enumerate() {
                            if (mask >> i) & 1 == 1 {
                                p.xor_assign(b);
                            }
                        }
                        p
                    })
                    .collect()
            }
        }
    }
}

/// The solution set of `a·x = b`.
pub fn solve_affine(a: &F2Matrix, b: &F2Vec) -> Result<AffineSubspace> {
    if b.len() != a.rows() {
        return Err(Error::shape(format!("right-hand side of length {} for {} equations", b.len(), a.rows())));
    }
    let n = a.cols();
    let aug = a.hstack(&F2Matrix::from_col_vecs(a.rows(), std::slice::from_ref(b))?)?;
    let Rref { reduced, pivots, .. } = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(AffineSubspace::Empty { ambient_dim: n });
    }
    let mut x = F2Vec::zeros(n);
    for (r, &p) in pivots.iter().enumerate() {
        if reduced.get(r, n) {
            x.set(p, true);
        }
    }
    AffineSubspace::new(n, x, a.kernel_basis())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> F2Matrix {
        F2Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn index_round_trip_is_msb_first() {
        let v = F2Vec::from_index(3, 0b100);
        assert_eq!(v.to_bits(), vec![1, 0, 0]);
        assert_eq!(v.to_index(), 4);
    }

    #[test]
    fn vectors_longer_than_a_word() {
        let mut v = F2Vec::zeros(130);
        v.set(129, true);
        v.set(64, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![64, 129]);
        assert_eq!(v.first_one(), Some(64));
        assert_eq!(v.slice(60, 70).ones().collect::<Vec<_>>(), vec![4]);
    }

    #[test]
    fn order_is_lexicographic() {
        let mut vs: Vec<F2Vec> = (0..8).map(|i| F2Vec::from_index(3, i)).collect();
        vs.reverse();
        vs.sort();
        assert_eq!(vs, (0..8).map(|i| F2Vec::from_index(3, i)).collect::<Vec<_>>());
    }

    #[test]
    fn mul_example() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let b = m(&[&[1, 0], &[1, 1]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[0, 1], &[1, 1]]));
    }

    #[test]
    fn mul_shape_error() {
        assert!(matches!(F2Matrix::zeros(2, 3).mul(&F2Matrix::zeros(2, 3)), Err(Error::Shape(_))));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(F2Matrix::from_rows(&[vec![1, 0], vec![1]]).is_err());
    }

    #[test]
    fn zero_dim_matrices() {
        let a = F2Matrix::zeros(0, 3);
        let b = F2Matrix::zeros(3, 0);
        assert_eq!(b.mul(&a).unwrap(), F2Matrix::zeros(3, 3));
        assert_eq!(a.mul(&b).unwrap(), F2Matrix::zeros(0, 0));
        assert_eq!(a.rank(), 0);
    }

    #[test]
    fn rref_examples() {
        let r = m(&[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.reduced, m(&[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(F2Matrix::identity(4).rref().reduced, F2Matrix::identity(4));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(m(&[&[1, 1]]).kernel_basis(), vec![F2Vec::from_bits(&[1, 1])]);
        assert!(F2Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(F2Matrix::zeros(1, 2).kernel_basis(), vec![F2Vec::from_bits(&[1, 0]), F2Vec::from_bits(&[0, 1])]);
    }

    #[test]
    fn rank_factorize_examples() {
        let (e, mm) = m(&[&[1, 1], &[1, 1]]).rank_factorize();
        assert_eq!(e, m(&[&[1, 1]]));
        assert_eq!(mm, m(&[&[1], &[1]]));
        let (e, mm) = F2Matrix::zeros(2, 2).rank_factorize();
        assert_eq!((e.rows(), e.cols(), mm.rows(), mm.cols()), (0, 2, 2, 0));
    }

    #[test]
    fn solve_affine_examples() {
        let s = solve_affine(&m(&[&[1, 1]]), &F2Vec::from_bits(&[1])).unwrap();
        // pivot coordinate 0 of basis (1,1) is cleared from the offset
        assert_eq!(s.offset(), Some(&F2Vec::from_bits(&[0, 1])));
        assert_eq!(s.basis(), &[F2Vec::from_bits(&[1, 1])]);
        let mut pts = s.points();
        pts.sort();
        assert_eq!(pts, vec![F2Vec::from_bits(&[0, 1]), F2Vec::from_bits(&[1, 0])]);

        let s = solve_affine(&F2Matrix::zeros(1, 2), &F2Vec::zeros(1)).unwrap();
        assert_eq!(s.dim(), Some(2));
        assert!(solve_affine(&F2Matrix::zeros(1, 3), &F2Vec::from_bits(&[1])).unwrap().is_empty());
        assert!(solve_affine(&F2Matrix::zeros(2, 3), &F2Vec::zeros(1)).is_err());
    }

    #[test]
    fn affine_map_then() {
        let f = AffineMap::new(m(&[&[1, 0], &[1, 1]]), F2Vec::from_bits(&[0, 1])).unwrap();
        let g = AffineMap::new(m(&[&[0, 1]]), F2Vec::from_bits(&[1])).unwrap();
        let h = f.then(&g).unwrap();
        for i in 0..4 {
            let x = F2Vec::from_index(2, i);
            assert_eq!(h.apply(&x).unwrap(), g.apply(&f.apply(&x).unwrap()).unwrap());
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(m(&[&[1, 0]])).unwrap();
        assert_eq!(v, serde_json::json!({"rows": 1, "cols": 2, "entries": [[1, 0]]}));
    }
}
