use std::fmt;

use crate::error::{Error, Result};

/// A row vector over GF(2) of length at most 64; bit `j` holds coordinate `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    len: usize,
    bits: u64,
}

impl BitRow {
    pub fn new(len: usize, bits: u64) -> Self {
        assert!(len <= 64, "bit rows hold at most 64 coordinates");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        assert_eq!(bits & !mask, 0, "bits set beyond row length");
        BitRow { len, bits }
    }

    pub fn zero(len: usize) -> Self {
        BitRow::new(len, 0)
    }

    pub fn unit(len: usize, i: usize) -> Self {
        BitRow::new(len, 1 << i)
    }

    /// Builds a row from 0/1 entries.
    pub fn from_bits(entries: &[u8]) -> Self {
        let mut bits = 0u64;
        for (j, &e) in entries.iter().enumerate() {
            if e & 1 == 1 {
                bits |= 1 << j;
            }
        }
        BitRow::new(entries.len(), bits)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, j: usize) -> bool {
        (self.bits >> j) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.len).map(|j| self.get(j) as u8).collect()
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for j in 0..self.len {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.get(j) as u8)?;
        }
        write!(f, "]")
    }
}

/// Dense GF(2) matrix with at most 64 columns, one machine word per row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrices must be non-empty");
        assert!(cols <= 64, "at most 64 columns supported");
        BitMatrix { rows, cols, data: vec![0; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zero(n, n);
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        m
    }

    pub fn from_row_bits(cols: usize, rows: Vec<u64>) -> Self {
        let mut m = BitMatrix::zero(rows.len(), cols);
        let mask = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r & !mask, 0, "row {i} has bits beyond column count");
            m.data[i] = r;
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.is_empty() || cols == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let mut data = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.push(BitRow::from_bits(r).bits());
        }
        Ok(BitMatrix::from_row_bits(cols, data))
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

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    pub fn row(&self, i: usize) -> BitRow {
        BitRow::new(self.cols, self.data[i])
    }

    pub fn row_bits(&self) -> &[u64] {
        &self.data
    }

    /// `v · self` for a row vector packed into a word.
    pub fn apply_bits(&self, v: u64) -> u64 {
        let mut acc = 0u64;
        let mut rest = v;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            acc ^= self.data[i];
            rest &= rest - 1;
        }
        acc
    }

    /// `v · self`.
    pub fn apply(&self, v: &BitRow) -> Result<BitRow> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: v.len() });
        }
        Ok(BitRow::new(self.cols, self.apply_bits(v.bits())))
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let data = self.data.iter().map(|&r| other.apply_bits(r)).collect();
        BitMatrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        BitMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.data[j] |= 1 << i;
                }
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        rref(&self.data).len()
    }

    pub fn inverse(&self) -> Option<BitMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| (a[r] >> col) & 1 == 1)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && (a[r] >> col) & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(BitMatrix { rows: n, cols: n, data: inv })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_permutation(&self) -> bool {
        self.is_square()
            && self.data.iter().all(|r| r.count_ones() == 1)
            && self.data.iter().fold(0u64, |acc, r| acc | r).count_ones() as usize == self.cols
    }

    pub fn pow(&self, mut e: u64) -> BitMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = BitMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Sub-block of the given row and column ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> BitMatrix {
        let width = cols.len();
        let data = rows
            .map(|i| (self.data[i] >> cols.start) & if width == 64 { u64::MAX } else { (1 << width) - 1 })
            .collect::<Vec<_>>();
        BitMatrix::from_row_bits(width, data)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i).to_string())).finish()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of the span of `rows`; pivots are the lowest set bits,
/// rows ordered by increasing pivot column, zero rows dropped.
pub fn rref(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = reduce_against(&basis, r);
        if v == 0 {
            continue;
        }
        let pivot = v.trailing_zeros();
        for b in basis.iter_mut() {
            if (*b >> pivot) & 1 == 1 {
                *b ^= v;
            }
        }
        // keep v reduced against the existing pivots
        v = reduce_against(&basis, v);
        basis.push(v);
    }
    basis.sort_by_key(|b| b.trailing_zeros());
    basis
}

/// Clears every pivot column of an echelon basis from `v`.
pub fn reduce_against(basis: &[u64], mut v: u64) -> u64 {
    for &b in basis {
        let pivot = b.trailing_zeros();
        if (v >> pivot) & 1 == 1 {
            v ^= b;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> BitMatrix {
        BitMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn multiply_and_invert() {
        let c = m(&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]);
        let inv = c.inverse().unwrap();
        assert_eq!(c.mul(&inv), BitMatrix::identity(3));
        assert_eq!(c.pow(7), BitMatrix::identity(3));
        assert_ne!(c.pow(1), BitMatrix::identity(3));
    }

    #[test]
    fn singular_has_no_inverse() {
        let s = m(&[&[1, 1], &[1, 1]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn row_vector_convention() {
        let a = m(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        // e1 · A is the first row
        let v = a.apply(&BitRow::from_bits(&[1, 0, 0])).unwrap();
        assert_eq!(v.to_vec(), vec![1, 0, 1]);
        assert!(a.apply(&BitRow::from_bits(&[1, 0])).is_err());
    }

    #[test]
    fn rref_is_canonical() {
        let a = rref(&[0b110, 0b011, 0b101]);
        let b = rref(&[0b101, 0b110]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn transpose_twice() {
        let a = m(&[&[1, 0, 1, 1], &[0, 1, 1, 0]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().rows(), 4);
    }
}
