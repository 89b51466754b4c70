//! Exact integer/rational linear algebra for chain complexes and Goeritz
//! matrices.

mod echelon;
mod filtered;
mod signature;

pub use echelon::{kernel_basis, prefix_ranks, rank, EchelonBasis};
pub use filtered::{filtered_image_dims, FilteredBasis, FilteredDims};
pub use signature::symmetric_signature;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Sparse row-major integer matrix. Rows hold `(col, value)` pairs sorted by
/// column with no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, BigInt)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|i| (i, i, 1)))
    }

    /// Sums duplicate entries and drops zeros.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut acc: Vec<std::collections::BTreeMap<usize, i64>> = vec![Default::default(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of range");
            *acc[r].entry(c).or_insert(0) += v;
        }
        let data = acc
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .filter(|&(_, v)| v != 0)
                    .map(|(c, v)| (c, BigInt::from(v)))
                    .collect()
            })
            .collect();
        IntMatrix { rows, cols, data }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_triplets(
            rows.len(),
            cols,
            rows.iter().enumerate().flat_map(|(i, r)| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                r.iter().enumerate().map(move |(j, &v)| (i, j, v))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[(usize, BigInt)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Iterates `(row, col, value)` over stored entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (r, c, v) in self.entries() {
            data[c].push((r, v.clone()));
        }
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: std::collections::BTreeMap<usize, BigInt> = Default::default();
            for (k, a) in row {
                for (c, b) in &rhs.data[*k] {
                    *acc.entry(*c).or_insert_with(BigInt::zero) += a * b;
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        IntMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    pub fn to_dense_i64(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = vec![vec![0i64; self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.to_i64()?;
        }
        Some(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    /// Column vectors as sparse `(row, value)` lists.
    pub fn columns(&self) -> Vec<Vec<(usize, BigInt)>> {
        self.transpose().data
    }

    pub(crate) fn row_vectors(&self) -> &[Vec<(usize, BigInt)>] {
        &self.data
    }
}
