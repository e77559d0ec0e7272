use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A sparse integer matrix stored by columns. Each column is sorted by row,
/// holds no duplicate rows and no zero values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, BigInt::one())]).collect(),
        }
    }

    /// Sums duplicate positions and drops zeros.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut acc: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::OutOfRange(r.max(c)));
            }
            *acc[c].entry(r).or_insert_with(BigInt::zero) += v;
        }
        let columns = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(Self {
            rows,
            cols,
            columns,
        })
    }

    /// Builds a column from small integer contributions, merging repeats.
    pub(crate) fn push_column_i64(&mut self, mut entries: Vec<(usize, i64)>) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut col: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
        let mut i = 0;
        while i < entries.len() {
            let r = entries[i].0;
            let mut sum = 0i64;
            while i < entries.len() && entries[i].0 == r {
                sum += entries[i].1;
                i += 1;
            }
            if sum != 0 {
                debug_assert!(r < self.rows);
                col.push((r, BigInt::from(sum)));
            }
        }
        self.columns.push(col);
        self.cols += 1;
    }

    pub(crate) fn empty_with_rows(rows: usize) -> Self {
        Self {
            rows,
            cols: 0,
            columns: Vec::new(),
        }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let columns = (0..cols)
            .map(|c| {
                (0..rows)
                    .filter(|&r| dense[r][c] != 0)
                    .map(|r| (r, BigInt::from(dense[r][c])))
                    .collect()
            })
            .collect();
        Self {
            rows,
            cols,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.columns[c]
            .binary_search_by_key(&r, |e| e.0)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_default()
    }

    /// `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            d[r][c] = v.clone();
        }
        d
    }

    /// Entries as `i64` when they all fit.
    pub fn to_dense_i64(&self) -> Option<Vec<Vec<i64>>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            d[r][c] = v.to_i64()?;
        }
        Some(d)
    }

    pub fn max_abs(&self) -> BigInt {
        self.triplets()
            .map(|(_, _, v)| v.abs())
            .max()
            .unwrap_or_default()
    }

    /// `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        let mut columns = Vec::with_capacity(other.cols);
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for col in &other.columns {
            acc.clear();
            for (k, b) in col {
                for (r, a) in &self.columns[*k] {
                    *acc.entry(*r).or_insert_with(BigInt::zero) += a * b;
                }
            }
            columns.push(
                std::mem::take(&mut acc)
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            columns,
        })
    }

    fn combine(&self, other: &Self, sign: i32) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::SizeMismatch(self.rows * self.cols, other.rows * other.cols));
        }
        let triplets = self
            .triplets()
            .map(|(r, c, v)| (r, c, v.clone()))
            .chain(other.triplets().map(|(r, c, v)| (r, c, v * sign)));
        Self::from_triplets(self.rows, self.cols, triplets)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * k)).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let t = self.triplets().map(|(r, c, v)| (c, r, v.clone()));
        Self::from_triplets(self.cols, self.rows, t).expect("indices in range")
    }

    /// Reindexes rows and columns: entry `(r, c)` moves to
    /// `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let t = self
            .triplets()
            .map(|(r, c, v)| (row_perm[r], col_perm[c], v.clone()));
        Self::from_triplets(self.rows, self.cols, t).expect("permutation in range")
    }

    /// Writes `row,col,value` lines with a header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "row,col,value")?;
        for (r, c, v) in self.triplets() {
            writeln!(w, "{r},{c},{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let m = SparseIntMatrix::from_triplets(
            2,
            2,
            vec![
                (0, 0, BigInt::from(1)),
                (0, 0, BigInt::from(-1)),
                (1, 1, BigInt::from(2)),
                (1, 1, BigInt::from(3)),
            ],
        )
        .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 1), BigInt::from(5));
        assert!(SparseIntMatrix::from_triplets(1, 1, vec![(1, 0, BigInt::one())]).is_err());
    }

    #[test]
    fn product_and_identity() {
        let a = SparseIntMatrix::from_dense(&[vec![1, 2], vec![3, 4], vec![0, 1]]);
        let i = SparseIntMatrix::identity(2);
        assert_eq!(a.mul(&i).unwrap(), a);
        let b = SparseIntMatrix::from_dense(&[vec![2, 0, 1], vec![-1, 1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab.to_dense_i64().unwrap(),
            vec![vec![0, 2, 1], vec![2, 4, 3], vec![-1, 1, 0]]
        );
        assert!(b.mul(&b).is_err());
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn csv_output() {
        let a = SparseIntMatrix::from_dense(&[vec![0, -2], vec![7, 0]]);
        let mut buf = Vec::new();
        a.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "row,col,value\n1,0,7\n0,1,-2\n");
    }
}
