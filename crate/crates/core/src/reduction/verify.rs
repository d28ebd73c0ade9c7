use std::fmt;

use crate::field::Field;
use crate::matrix::SparseMatrix;

use super::Decomposition;

/// First violated property found by `verify_decomposition`. Indices are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionFault {
    MissingV,
    SizeMismatch {
        expected: usize,
        found: usize,
    },
    VBelowDiagonal {
        row: usize,
        col: usize,
    },
    VZeroDiagonal {
        col: usize,
    },
    ProductMismatch {
        row: usize,
        col: usize,
        expected: u32,
        found: u32,
    },
    LowNotInjective {
        row: usize,
        first: usize,
        second: usize,
    },
    StaleLow {
        col: usize,
    },
}

impl fmt::Display for DecompositionFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingV => write!(f, "V was not kept"),
            Self::SizeMismatch { expected, found } => {
                write!(f, "matrix size {found}, expected {expected}")
            }
            Self::VBelowDiagonal { row, col } => {
                write!(f, "V[{row},{col}] lies below the diagonal")
            }
            Self::VZeroDiagonal { col } => write!(f, "V[{col},{col}] is zero"),
            Self::ProductMismatch {
                row,
                col,
                expected,
                found,
            } => {
                write!(
                    f,
                    "(DV)[{row},{col}] = {expected} but R[{row},{col}] = {found}"
                )
            }
            Self::LowNotInjective { row, first, second } => {
                write!(f, "columns {first} and {second} share low {row}")
            }
            Self::StaleLow { col } => write!(f, "cached low of column {col} disagrees with R"),
        }
    }
}

/// Check `R = D V`, that `V` is upper-triangular with nonzero diagonal, and
/// that the low map of `R` is injective.
pub fn verify_decomposition(
    d: &SparseMatrix,
    dec: &Decomposition,
    field: Field,
) -> Result<(), DecompositionFault> {
    let n = d.n();
    let v = dec.v.as_ref().ok_or(DecompositionFault::MissingV)?;
    for m in [&dec.r, v] {
        if m.n() != n {
            return Err(DecompositionFault::SizeMismatch {
                expected: n,
                found: m.n(),
            });
        }
    }
    for j in 0..n {
        if let Some(l) = v.column(j).low() {
            if l > j {
                return Err(DecompositionFault::VBelowDiagonal {
                    row: l + 1,
                    col: j + 1,
                });
            }
        }
        if v.entry(j, j) == 0 {
            return Err(DecompositionFault::VZeroDiagonal { col: j + 1 });
        }
    }
    let dv = d.mul(v, field);
    for j in 0..n {
        let (a, b) = (dv.column(j), dec.r.column(j));
        if a != b {
            let row = a
                .iter()
                .map(|t| t.0)
                .chain(b.iter().map(|t| t.0))
                .find(|&i| a.coeff(i) != b.coeff(i))
                .unwrap();
            return Err(DecompositionFault::ProductMismatch {
                row: row + 1,
                col: j + 1,
                expected: a.coeff(row),
                found: b.coeff(row),
            });
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for j in 0..n {
        let low = dec.r.column(j).low();
        if low != dec.low(j) {
            return Err(DecompositionFault::StaleLow { col: j + 1 });
        }
        if let Some(l) = low {
            if let Some(prev) = owner[l] {
                return Err(DecompositionFault::LowNotInjective {
                    row: l + 1,
                    first: prev + 1,
                    second: j + 1,
                });
            }
            owner[l] = Some(j);
        }
    }
    Ok(())
}
