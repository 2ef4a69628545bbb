//! Dense matrices of residues mod p with exact rank.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// Row-major dense matrix over F_p. Every entry is a canonical residue.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Matrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidMatrix(format!("dimensions must be positive, got {rows}x{cols}")));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidMatrix(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let p = field.modulus();
        if let Some(pos) = entries.iter().position(|&v| v >= p) {
            return Err(Error::InvalidMatrix(format!(
                "entry {} at ({}, {}) is not a residue mod {p}",
                entries[pos],
                pos / cols,
                pos % cols
            )));
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    /// Builds a matrix from a function of `(row, col)`; values are reduced mod p.
    ///
    /// Panics if either dimension is zero.
    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Matrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(field.reduce(f(i, j)));
            }
        }
        Matrix { field, rows, cols, entries }
    }

    pub fn identity(field: PrimeField, n: usize) -> Matrix {
        Matrix::from_fn(field, n, n, |i, j| u64::from(i == j))
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(field, rows, cols, |_, _| 0)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The same integer entries reinterpreted modulo another prime.
    pub fn reduce_into(&self, field: PrimeField) -> Matrix {
        let entries = self.entries.iter().map(|&v| field.reduce(v as u64)).collect();
        Matrix { field, rows: self.rows, cols: self.cols, entries }
    }

    /// Rows and columns permuted: entry `(i, j)` of the result is
    /// `self[row_perm[i]][col_perm[j]]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Matrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(row_perm[i], col_perm[j]) as u64
        })
    }

    /// Exact rank over F_p by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            // First nonzero below the current pivot row.
            let Some(pivot) = (rank..rows).find(|&i| a[i * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for j in col..cols {
                    a.swap(pivot * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(a[rank * cols + col]).expect("pivot is nonzero");
            for j in col..cols {
                a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
            }
            let (head, tail) = a.split_at_mut((rank + 1) * cols);
            let pivot_row = &head[rank * cols..];
            for row in tail.chunks_exact_mut(cols) {
                let factor = row[col];
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    row[j] = f.sub(row[j], f.mul(factor, pivot_row[j]));
                }
            }
            rank += 1;
        }
        rank
    }

    /// True if square and `M[k][l]` depends only on `(k - l) mod n`.
    pub fn is_circulant(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        (0..n).all(|k| (0..n).all(|l| self.get(k, l) == self.get(0, (l + n - k) % n)))
    }
}

/// Exact rank of `m` over its field.
pub fn rank_mod_p(m: &Matrix) -> usize {
    m.rank()
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
