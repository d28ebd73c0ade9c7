//! `R = DV` reductions: the column algorithm, the row algorithm, and the
//! cohomology algorithm that keeps only live cocycles.

mod cohomology;
mod column;
mod row;
mod verify;

pub use cohomology::{pcoh, pcoh_observed, Cocycle, CohomologyOutput};
pub use column::phcol;
pub use row::{phrow, phrow_observed};
pub use verify::{verify_decomposition, DecompositionFault};

use crate::complex::FilteredComplex;
use crate::matrix::SparseMatrix;

/// Work done by a single reduction run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunCounters {
    /// Coefficient multiply-adds.
    pub primitive_ops: u64,
    /// Most nonzero terms held in working storage at once. The read-only
    /// input matrix is not counted.
    pub peak_elements: u64,
}

/// Tracks the current and peak number of stored terms.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Occupancy {
    current: u64,
    peak: u64,
}

impl Occupancy {
    pub(crate) fn grow(&mut self, n: usize) {
        self.current += n as u64;
        self.peak = self.peak.max(self.current);
    }

    pub(crate) fn shrink(&mut self, n: usize) {
        self.current -= n as u64;
    }

    /// Replace a stored chain of `old` terms by one of `new` terms.
    pub(crate) fn replace(&mut self, old: usize, new: usize) {
        self.grow(new);
        self.shrink(old);
    }

    pub(crate) fn peak(&self) -> u64 {
        self.peak
    }
}

#[derive(Clone, Debug, Default)]
pub struct ReduceOptions {
    /// Track `V` alongside `R`.
    pub keep_v: bool,
    /// When set, only columns marked `true` are reduced; the rest are
    /// treated as zero.
    pub columns: Option<Vec<bool>>,
}

impl ReduceOptions {
    pub fn with_v() -> Self {
        ReduceOptions {
            keep_v: true,
            columns: None,
        }
    }

    pub fn barcode_only() -> Self {
        ReduceOptions::default()
    }

    /// Restrict to the boundaries of `dim`-dimensional cells.
    pub fn dimension(mut self, complex: &FilteredComplex, dim: usize) -> Self {
        self.columns = Some(complex.cells().iter().map(|c| c.dim == dim).collect());
        self
    }
}

/// A reduced decomposition `R = D V`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub r: SparseMatrix,
    pub v: Option<SparseMatrix>,
    low_of: Vec<Option<usize>>,
    pub counters: RunCounters,
}

impl Decomposition {
    pub(crate) fn new(r: SparseMatrix, v: Option<SparseMatrix>, counters: RunCounters) -> Self {
        let low_of = r.columns().iter().map(|c| c.low()).collect();
        Decomposition {
            r,
            v,
            low_of,
            counters,
        }
    }

    pub fn n(&self) -> usize {
        self.low_of.len()
    }

    /// Lowest row of column `j` of `R`, if nonzero.
    pub fn low(&self, j: usize) -> Option<usize> {
        self.low_of[j]
    }

    pub fn low_map(&self) -> &[Option<usize>] {
        &self.low_of
    }

    /// `(g, h)` with `low(h) = g`, ordered by `h`. 0-based.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.low_of
            .iter()
            .enumerate()
            .filter_map(|(h, l)| l.map(|g| (g, h)))
            .collect()
    }

    /// Indices that are neither a low nor a nonzero column.
    pub fn essential(&self) -> Vec<usize> {
        let mut paired = vec![false; self.n()];
        for (g, h) in self.pairs() {
            paired[g] = true;
            paired[h] = true;
        }
        (0..self.n()).filter(|&i| !paired[i]).collect()
    }
}
