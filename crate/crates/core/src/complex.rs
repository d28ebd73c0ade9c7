//! Filtered cell complexes and their boundary matrices.
//!
//! A complex is an ordered list of cells; cell `i` may only reference
//! earlier cells in its boundary, so every prefix is itself a complex.

use crate::chain::{chain_axpy, Chain, OpCounter};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::SparseMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub dim: usize,
    pub value: f64,
    /// Boundary over earlier cells (0-based indices).
    pub boundary: Chain,
}

impl Cell {
    pub fn new(dim: usize, value: f64, boundary: Chain) -> Self {
        Cell {
            dim,
            value,
            boundary,
        }
    }
}

/// A validated filtered complex over a fixed field.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    field: Field,
    cells: Vec<Cell>,
    /// Vertex lists, present for simplicial inputs.
    simplices: Option<Vec<Vec<usize>>>,
}

impl FilteredComplex {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.dim).collect()
    }

    pub fn max_dim(&self) -> usize {
        self.cells.iter().map(|c| c.dim).max().unwrap_or(0)
    }

    /// Filtration value at a 1-based index with the sentinels
    /// `a_0 = -inf` and `a_{n+1} = +inf`.
    pub fn value_at(&self, index: usize) -> f64 {
        if index == 0 {
            f64::NEG_INFINITY
        } else if index > self.cells.len() {
            f64::INFINITY
        } else {
            self.cells[index - 1].value
        }
    }

    pub fn simplices(&self) -> Option<&[Vec<usize>]> {
        self.simplices.as_deref()
    }

    pub(crate) fn with_simplices(mut self, simplices: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(simplices.len(), self.cells.len());
        self.simplices = Some(simplices);
        self
    }

    /// Six cells filling in a 2-sphere: two vertices, two edges joining
    /// them, two disks glued along the edge loop. `a_i = i`.
    pub fn two_sphere(field: Field) -> Self {
        let b = |terms: &[(usize, i64)]| Chain::from_terms(field, terms.iter().copied());
        let cells = vec![
            Cell::new(0, 1.0, Chain::new()),
            Cell::new(0, 2.0, Chain::new()),
            Cell::new(1, 3.0, b(&[(0, 1), (1, -1)])),
            Cell::new(1, 4.0, b(&[(0, 1), (1, -1)])),
            Cell::new(2, 5.0, b(&[(2, 1), (3, -1)])),
            Cell::new(2, 6.0, b(&[(2, 1), (3, -1)])),
        ];
        build_complex(cells, field).expect("sphere filtration is valid")
    }
}

/// Validate cells given in filtration order.
///
/// Checks finite monotone values, that every face precedes its coface with
/// dimension one lower, and that the boundary of each boundary vanishes.
pub fn build_complex(cells: Vec<Cell>, field: Field) -> Result<FilteredComplex> {
    let mut previous = f64::NEG_INFINITY;
    for (j, cell) in cells.iter().enumerate() {
        if !cell.value.is_finite() {
            return Err(Error::NonFiniteValue {
                index: j + 1,
                value: cell.value,
            });
        }
        if cell.value < previous {
            return Err(Error::NonMonotone {
                index: j + 1,
                value: cell.value,
                previous,
            });
        }
        previous = cell.value;
        for (i, _) in cell.boundary.iter() {
            if i >= j {
                return Err(Error::FaceAfterCoface {
                    index: j + 1,
                    face: i + 1,
                });
            }
            let face_dim = cells[i].dim;
            if face_dim + 1 != cell.dim {
                return Err(Error::DimensionMismatch {
                    index: j + 1,
                    dim: cell.dim,
                    face: i + 1,
                    face_dim,
                });
            }
        }
        let mut ops = OpCounter::new();
        let dd = cell.boundary.iter().fold(Chain::new(), |acc, (i, c)| {
            chain_axpy(field, c, &cells[i].boundary, &acc, &mut ops)
        });
        if !dd.is_empty() {
            return Err(Error::BoundaryNotCycle { index: j + 1 });
        }
    }
    Ok(FilteredComplex {
        field,
        cells,
        simplices: None,
    })
}

/// The boundary matrix `D`: column `j` is the boundary of cell `j`.
pub fn boundary_matrix(k: &FilteredComplex) -> SparseMatrix {
    SparseMatrix::from_columns(k.cells.iter().map(|c| c.boundary.clone()).collect())
}
