use crate::chain::{chain_axpy, Chain, OpCounter};
use crate::field::Field;
use crate::matrix::SparseMatrix;

use super::{Decomposition, Occupancy, ReduceOptions, RunCounters};

/// Column algorithm: reduce columns left to right, cancelling the low of
/// column `i` against the earlier column owning the same low until the low
/// is new or the column vanishes.
///
/// `V` receives the same column operations (`V[i] -= c V[j]`).
pub fn phcol(d: &SparseMatrix, field: Field, opts: &ReduceOptions) -> Decomposition {
    let n = d.n();
    let mut ops = OpCounter::new();
    let mut storage = Occupancy::default();
    let mut r: Vec<Chain> = Vec::with_capacity(n);
    let mut v: Vec<Chain> = Vec::with_capacity(if opts.keep_v { n } else { 0 });
    let mut owner: Vec<Option<usize>> = vec![None; n];

    for i in 0..n {
        let active = opts.columns.as_ref().is_none_or(|m| m[i]);
        let mut col = if active {
            d.column(i).clone()
        } else {
            Chain::new()
        };
        let mut vcol = if opts.keep_v {
            Chain::unit(i)
        } else {
            Chain::new()
        };
        storage.grow(col.len() + vcol.len());

        while let Some(low) = col.low() {
            let Some(j) = owner[low] else {
                owner[low] = Some(i);
                break;
            };
            let pivot = r[j].low_coeff().expect("owner column is nonzero");
            let c = field.mul(col.low_coeff().unwrap(), field.inv(pivot).unwrap());
            let minus_c = field.neg(c);
            let next = chain_axpy(field, minus_c, &r[j], &col, &mut ops);
            storage.replace(col.len(), next.len());
            col = next;
            if opts.keep_v {
                let next = chain_axpy(field, minus_c, &v[j], &vcol, &mut ops);
                storage.replace(vcol.len(), next.len());
                vcol = next;
            }
        }
        r.push(col);
        if opts.keep_v {
            v.push(vcol);
        }
    }

    let counters = RunCounters {
        primitive_ops: ops.get(),
        peak_elements: storage.peak(),
    };
    Decomposition::new(
        SparseMatrix::from_columns(r),
        opts.keep_v.then(|| SparseMatrix::from_columns(v)),
        counters,
    )
}
