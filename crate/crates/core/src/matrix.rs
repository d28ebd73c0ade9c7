//! Column-major sparse square matrices over `Z/p`.

use crate::chain::{chain_axpy, Chain, OpCounter};
use crate::field::Field;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    columns: Vec<Chain>,
}

impl SparseMatrix {
    pub fn from_columns(columns: Vec<Chain>) -> Self {
        SparseMatrix { columns }
    }

    pub fn zero(n: usize) -> Self {
        SparseMatrix {
            columns: vec![Chain::new(); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            columns: (0..n).map(Chain::unit).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &Chain {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Chain] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<Chain> {
        self.columns
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.columns[j].coeff(i)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Chain::len).sum()
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(j, c)| c.low().is_none_or(|l| l < j))
    }

    /// Row-wise view: for each row, the `(column, value)` pairs in
    /// increasing column order.
    pub fn rows(&self) -> Vec<Vec<(usize, u32)>> {
        let mut rows = vec![Vec::new(); self.n()];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col.iter() {
                rows[i].push((j, v));
            }
        }
        rows
    }

    /// `self * other`, column by column.
    pub fn mul(&self, other: &SparseMatrix, field: Field) -> SparseMatrix {
        let mut ops = OpCounter::new();
        let columns = other
            .columns
            .iter()
            .map(|col| {
                col.iter().fold(Chain::new(), |acc, (k, c)| {
                    chain_axpy(field, c, &self.columns[k], &acc, &mut ops)
                })
            })
            .collect();
        SparseMatrix { columns }
    }

    /// Flip across the minor diagonal: `A'[i, j] = A[n-1-j, n-1-i]`.
    pub fn anti_transpose(&self) -> SparseMatrix {
        anti_transpose(self)
    }
}

/// Anti-transpose of a square matrix. Involution; preserves strict upper
/// triangularity.
pub fn anti_transpose(a: &SparseMatrix) -> SparseMatrix {
    let n = a.n();
    let mut cols: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    // Walking source columns from right to left emits each target column's
    // rows in increasing order.
    for j in (0..n).rev() {
        for (i, v) in a.columns[j].iter() {
            cols[n - 1 - i].push((n - 1 - j, v));
        }
    }
    SparseMatrix {
        columns: cols.into_iter().map(Chain::from_sorted).collect(),
    }
}
