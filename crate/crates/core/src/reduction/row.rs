use crate::chain::{chain_axpy, Chain, OpCounter};
use crate::field::Field;
use crate::matrix::SparseMatrix;

use super::{Decomposition, Occupancy, RunCounters};

/// Row algorithm: sweep rows bottom-up; in each row, the columns whose low
/// sits there are cleared against the leftmost of them.
pub fn phrow(d: &SparseMatrix, field: Field, keep_v: bool) -> Decomposition {
    phrow_observed(d, field, keep_v, |_, _, _| {})
}

/// `phrow` with a hook called after each row is processed, receiving the
/// iteration number (1-based) and the current `R` and `V` columns. `V` is
/// empty when `keep_v` is off.
pub fn phrow_observed<F>(
    d: &SparseMatrix,
    field: Field,
    keep_v: bool,
    mut observe: F,
) -> Decomposition
where
    F: FnMut(usize, &[Chain], &[Chain]),
{
    let n = d.n();
    let mut ops = OpCounter::new();
    let mut storage = Occupancy::default();
    let mut r: Vec<Chain> = d.columns().to_vec();
    let mut v: Vec<Chain> = if keep_v {
        (0..n).map(Chain::unit).collect()
    } else {
        Vec::new()
    };
    storage.grow(r.iter().chain(&v).map(Chain::len).sum());

    // columns grouped by their current low
    let mut by_low: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (j, col) in r.iter().enumerate() {
        if let Some(l) = col.low() {
            by_low[l].push(j);
        }
    }

    for row in (0..n).rev() {
        let mut indices = std::mem::take(&mut by_low[row]);
        indices.sort_unstable();
        if let Some((&p, rest)) = indices.split_first() {
            let pivot_r = r[p].clone();
            let pivot_v = if keep_v { v[p].clone() } else { Chain::new() };
            let inv = field.inv(pivot_r.low_coeff().unwrap()).unwrap();
            for &j in rest {
                let c = field.mul(r[j].low_coeff().unwrap(), inv);
                let minus_c = field.neg(c);
                let next = chain_axpy(field, minus_c, &pivot_r, &r[j], &mut ops);
                storage.replace(r[j].len(), next.len());
                r[j] = next;
                if keep_v {
                    let next = chain_axpy(field, minus_c, &pivot_v, &v[j], &mut ops);
                    storage.replace(v[j].len(), next.len());
                    v[j] = next;
                }
                if let Some(l) = r[j].low() {
                    debug_assert!(l < row);
                    by_low[l].push(j);
                }
            }
        }
        observe(n - row, &r, &v);
    }

    let counters = RunCounters {
        primitive_ops: ops.get(),
        peak_elements: storage.peak(),
    };
    Decomposition::new(
        SparseMatrix::from_columns(r),
        keep_v.then(|| SparseMatrix::from_columns(v)),
        counters,
    )
}
