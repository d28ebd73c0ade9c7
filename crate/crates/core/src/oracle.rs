//! Brute-force barcodes from dense ranks.
//!
//! Nothing here touches the sparse reduction code: elimination is done on
//! dense rows with its own modular arithmetic.

use crate::complex::FilteredComplex;
use crate::error::{Error, Result};
use crate::matrix::SparseMatrix;
use crate::persistence::{
    barcode_abs_hom, barcode_rel_hom, Diagram, Interval, ModuleKind, Partition,
};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// A dense `rows x cols` matrix over `Z/p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        DenseMatrix {
            rows,
            cols,
            p: p as u64,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = DenseMatrix::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_sparse(m: &SparseMatrix, p: u32) -> Self {
        let n = m.n();
        let mut out = DenseMatrix::zeros(n, n, p);
        for j in 0..n {
            for i in 0..n {
                out.set(i, j, m.entry(i, j) as u64);
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

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    /// Submatrix on the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(rows.len(), cols.len(), self.p as u32);
        for (ii, &i) in rows.iter().enumerate() {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(ii, jj, self.get(i, j));
            }
        }
        out
    }

    /// Row echelon form in place; returns pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(sel) = (row..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(row * self.cols + j, sel * self.cols + j);
            }
            let inv = inv_mod(self.get(row, col), p);
            for j in 0..self.cols {
                let v = self.get(row, j) * inv % p;
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let c = self.get(i, col);
                if c == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = (self.get(i, j) + p - c * self.get(row, j) % p) % p;
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Rank over `Z/p` by Gaussian elimination.
pub fn dense_rank(m: &DenseMatrix) -> usize {
    m.clone().echelon().len()
}

/// Basis of `{x : M x = 0}`.
pub fn nullspace(m: &DenseMatrix) -> Vec<Vec<u64>> {
    let mut e = m.clone();
    let pivots = e.echelon();
    let p = e.p;
    let mut is_pivot = vec![false; e.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..e.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![0u64; e.cols];
            x[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = (p - e.get(r, free)) % p;
            }
            x
        })
        .collect()
}

/// Incremental span: insert vectors one at a time and track the rank.
#[derive(Clone)]
struct Span {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Span {
    fn new(p: u64) -> Self {
        Span {
            p,
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut v: Vec<u64>) {
        let p = self.p;
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + p - c * y % p) % p;
                }
            }
        }
        if let Some(pc) = v.iter().position(|&x| x != 0) {
            let inv = inv_mod(v[pc], p);
            for x in v.iter_mut() {
                *x = *x * inv % p;
            }
            for (_, row) in self.rows.iter_mut() {
                let c = row[pc];
                if c != 0 {
                    for (x, y) in row.iter_mut().zip(&v) {
                        *x = (*x + p - c * y % p) % p;
                    }
                }
            }
            self.rows.push((pc, v));
        }
    }
}

/// `table[a][b]` = rank of the map from cycles among the first `a` cycle
/// columns to homology modulo the boundaries of the first `b` bounding
/// columns, i.e. `dim(Z_a + B_b) - dim B_b`.
fn rank_table(d: &DenseMatrix, cycle_cols: &[usize], bound_cols: &[usize]) -> Vec<Vec<usize>> {
    let p = d.p;
    let coords = cycle_cols;
    let boundary_vec = |j: usize| -> Vec<u64> { coords.iter().map(|&i| d.get(i, j)).collect() };
    let bvecs: Vec<Vec<u64>> = bound_cols.iter().map(|&j| boundary_vec(j)).collect();

    let mut b_rank = vec![0usize; bound_cols.len() + 1];
    let mut span = Span::new(p);
    for (b, v) in bvecs.iter().enumerate() {
        span.insert(v.clone());
        b_rank[b + 1] = span.rank();
    }

    // rows that can hold a boundary term of a cycle column
    let rows: Vec<usize> = (0..d.rows)
        .filter(|&i| cycle_cols.iter().any(|&j| d.get(i, j) != 0))
        .collect();
    (0..=cycle_cols.len())
        .map(|a| {
            let sub = d.select(&rows, &cycle_cols[..a]);
            let mut span = Span::new(p);
            for z in nullspace(&sub) {
                let mut full = z;
                full.resize(coords.len(), 0);
                span.insert(full);
            }
            let mut row = vec![span.rank()];
            for (b, v) in bvecs.iter().enumerate() {
                span.insert(v.clone());
                row.push(span.rank() - b_rank[b + 1]);
            }
            row
        })
        .collect()
}

/// Rank of `H_k(X_p) -> H_k(X_q)` for 1-based `p <= q`.
pub fn persistent_betti(
    k: &FilteredComplex,
    dim: usize,
    p_idx: usize,
    q_idx: usize,
) -> Result<usize> {
    let n = k.len();
    if p_idx == 0 || p_idx > q_idx || q_idx > n {
        return Err(Error::OutOfRange(format!(
            "need 1 <= p <= q <= {n}, got p = {p_idx}, q = {q_idx}"
        )));
    }
    let graded = Graded::new(k, dim);
    Ok(graded.r(p_idx, q_idx))
}

struct Graded {
    n: usize,
    table: Vec<Vec<usize>>,
    /// Number of cycle-dimension cells among the first `i` cells.
    cycles_upto: Vec<usize>,
    bounds_upto: Vec<usize>,
}

impl Graded {
    fn new(k: &FilteredComplex, dim: usize) -> Self {
        let p = k.field().modulus();
        let d = dense_boundary(k, p);
        let dims = k.dims();
        Graded::from_parts(
            &d,
            &dims.iter().map(|&x| x == dim).collect::<Vec<_>>(),
            &dims.iter().map(|&x| x == dim + 1).collect::<Vec<_>>(),
        )
    }

    fn from_parts(d: &DenseMatrix, cycle: &[bool], bound: &[bool]) -> Self {
        let n = cycle.len();
        let cycle_cols: Vec<usize> = (0..n).filter(|&i| cycle[i]).collect();
        let bound_cols: Vec<usize> = (0..n).filter(|&i| bound[i]).collect();
        let prefix = |mask: &[bool]| {
            let mut out = vec![0usize];
            for &m in mask {
                out.push(out.last().unwrap() + m as usize);
            }
            out
        };
        Graded {
            n,
            table: rank_table(d, &cycle_cols, &bound_cols),
            cycles_upto: prefix(cycle),
            bounds_upto: prefix(bound),
        }
    }

    /// `r(p, q)` with `r(0, q) = 0`.
    fn r(&self, p: usize, q: usize) -> usize {
        self.table[self.cycles_upto[p]][self.bounds_upto[q]]
    }

    /// `(p, q)` index pairs with multiplicity, `q = n` for infinite bars.
    fn intervals(&self) -> Result<Vec<(usize, usize)>> {
        let n = self.n;
        let mut out = Vec::new();
        let signed = |x: usize| x as i64;
        for p in 1..=n {
            for q in p..=n {
                let m = if q == n {
                    signed(self.r(p, n)) - signed(self.r(p - 1, n))
                } else {
                    signed(self.r(p, q)) - signed(self.r(p, q + 1)) - signed(self.r(p - 1, q))
                        + signed(self.r(p - 1, q + 1))
                };
                if m < 0 {
                    return Err(Error::Mismatch(format!(
                        "negative multiplicity {m} at <{p}, {q}>"
                    )));
                }
                out.extend(std::iter::repeat_n((p, q), m as usize));
            }
        }
        Ok(out)
    }
}

fn dense_boundary(k: &FilteredComplex, p: u32) -> DenseMatrix {
    let n = k.len();
    let mut d = DenseMatrix::zeros(n, n, p);
    for (j, cell) in k.cells().iter().enumerate() {
        for &(i, c) in cell.boundary.terms() {
            d.set(i, j, c as u64);
        }
    }
    d
}

/// Absolute homology barcode by inclusion-exclusion on persistent Betti
/// numbers. Zero-length intervals are not produced (they have no index pair).
pub fn oracle_barcode(k: &FilteredComplex) -> Result<Diagram> {
    let n = k.len();
    let mut intervals = Vec::new();
    for dim in 0..=k.max_dim() {
        for (p, q) in Graded::new(k, dim).intervals()? {
            intervals.push(Interval::new(k, dim, p, q + 1));
        }
    }
    Ok(Diagram::new(ModuleKind::AbsHom, n, intervals))
}

/// The oracle's barcode for any module: the oracle pairing is translated
/// exactly as the reduction pairing would be. Zero-length intervals are kept.
pub fn oracle_diagram(k: &FilteredComplex, kind: ModuleKind) -> Result<Diagram> {
    let n = k.len();
    let abs = oracle_barcode(k)?;
    let pairs = abs
        .intervals()
        .iter()
        .filter(|i| i.death_index <= n)
        .map(|i| (i.birth_index - 1, i.death_index - 1))
        .collect();
    let part = Partition::from_pairs(n, pairs);
    let d = if kind.is_relative() {
        barcode_rel_hom(&part, k, false)
    } else {
        barcode_abs_hom(&part, k, false)
    };
    Ok(Diagram::new(kind, n, d.intervals().to_vec()))
}

/// Ungraded variant for a bare matrix `D` with `D^2 = 0`: every column is
/// both a chain and a boundary generator. Returns sorted `(p, q)` pairs.
pub fn oracle_index_pairs(d: &SparseMatrix, p: u32) -> Result<Vec<(usize, usize)>> {
    let dense = DenseMatrix::from_sparse(d, p);
    let all = vec![true; d.n()];
    let mut out = Graded::from_parts(&dense, &all, &all).intervals()?;
    out.sort_unstable();
    Ok(out)
}
