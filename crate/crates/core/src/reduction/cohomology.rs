use crate::chain::{chain_axpy, Chain, OpCounter};
use crate::field::Field;
use crate::matrix::SparseMatrix;

use super::{Occupancy, RunCounters};

/// A cocycle as a column of the anti-transposed reduction matrix: `column`
/// and the chain's indices are in reversed (`tau`) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub column: usize,
    pub chain: Chain,
}

#[derive(Clone, Debug)]
pub struct CohomologyOutput {
    n: usize,
    /// `(birth, death)` in cell order, 0-based, in the order emitted.
    pub pairs: Vec<(usize, usize)>,
    /// Births never killed, ascending cell order.
    pub essential: Vec<usize>,
    /// Cocycle killed at each pair, parallel to `pairs`.
    pub pair_cocycles: Option<Vec<Cocycle>>,
    /// Surviving cocycles, parallel to `essential`.
    pub essential_cocycles: Option<Vec<Cocycle>>,
    pub counters: RunCounters,
}

impl CohomologyOutput {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Pairs as `(s, t)` with `low(t) = s` in the anti-transposed matrix.
    pub fn tau_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out: Vec<_> = self
            .pairs
            .iter()
            .map(|&(g, h)| (n - 1 - h, n - 1 - g))
            .collect();
        out.sort_unstable_by_key(|&(_, t)| t);
        out
    }

    pub fn tau_essential(&self) -> Vec<usize> {
        let mut out: Vec<_> = self.essential.iter().map(|&f| self.n - 1 - f).collect();
        out.sort_unstable();
        out
    }
}

/// Cohomology algorithm on an anti-transposed boundary matrix.
///
/// Cells enter in filtration order (rows of `dperp` from the bottom up).
/// Each entering cell either starts a new cocycle or kills the youngest
/// live cocycle whose coboundary contains it, after clearing that entry
/// from the other such cocycles. Dead cocycles are dropped at once unless
/// `keep_cocycles` is set, in which case they are moved into the output.
pub fn pcoh(dperp: &SparseMatrix, field: Field, keep_cocycles: bool) -> CohomologyOutput {
    pcoh_observed(dperp, field, keep_cocycles, |_, _| {})
}

/// `pcoh` with a hook after each iteration receiving the iteration number
/// (1-based) and the live cocycles indexed by column.
pub fn pcoh_observed<F>(
    dperp: &SparseMatrix,
    field: Field,
    keep_cocycles: bool,
    mut observe: F,
) -> CohomologyOutput
where
    F: FnMut(usize, &[Option<Chain>]),
{
    let n = dperp.n();
    let rows = dperp.rows();
    let mut ops = OpCounter::new();
    let mut storage = Occupancy::default();

    let mut live: Vec<Option<Chain>> = vec![None; n];
    // live cocycles that may contain each index; pruned lazily
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut acc: Vec<u32> = vec![0; n];
    let mut seen: Vec<bool> = vec![false; n];
    let mut touched: Vec<usize> = Vec::new();

    let mut pairs = Vec::new();
    let mut pair_cocycles = Vec::new();

    for row in (0..n).rev() {
        // coefficient of this cell in the coboundary of each live cocycle
        touched.clear();
        for &(c, dval) in &rows[row] {
            let list = &mut containing[c];
            list.retain(|&t| live[t].as_ref().is_some_and(|z| z.coeff(c) != 0));
            list.sort_unstable();
            list.dedup();
            for &t in list.iter() {
                let zc = live[t].as_ref().unwrap().coeff(c);
                if !seen[t] {
                    seen[t] = true;
                    touched.push(t);
                }
                acc[t] = field.add(acc[t], field.mul(dval, zc));
                ops.add(1);
            }
        }
        let mut indices: Vec<usize> = touched.iter().copied().filter(|&t| acc[t] != 0).collect();
        indices.sort_unstable();

        if let Some((&p, rest)) = indices.split_first() {
            let pivot = live[p].take().unwrap();
            let inv = field.inv(acc[p]).unwrap();
            for &j in rest {
                let c = field.mul(acc[j], inv);
                let old = live[j].take().unwrap();
                let next = chain_axpy(field, field.neg(c), &pivot, &old, &mut ops);
                for (idx, _) in pivot.iter() {
                    if old.coeff(idx) == 0 && next.coeff(idx) != 0 {
                        containing[idx].push(j);
                    }
                }
                storage.replace(old.len(), next.len());
                live[j] = Some(next);
            }
            storage.shrink(pivot.len());
            pairs.push((n - 1 - p, n - 1 - row));
            if keep_cocycles {
                pair_cocycles.push(Cocycle {
                    column: p,
                    chain: pivot,
                });
            }
        } else {
            live[row] = Some(Chain::unit(row));
            containing[row].push(row);
            storage.grow(1);
        }
        for &t in &touched {
            acc[t] = 0;
            seen[t] = false;
        }
        observe(n - row, &live);
    }

    let mut essential = Vec::new();
    let mut essential_cocycles = Vec::new();
    for (t, z) in live.into_iter().enumerate().rev() {
        if let Some(z) = z {
            essential.push(n - 1 - t);
            if keep_cocycles {
                essential_cocycles.push(Cocycle {
                    column: t,
                    chain: z,
                });
            }
        }
    }

    CohomologyOutput {
        n,
        pairs,
        essential,
        pair_cocycles: keep_cocycles.then_some(pair_cocycles),
        essential_cocycles: keep_cocycles.then_some(essential_cocycles),
        counters: RunCounters {
            primitive_ops: ops.get(),
            peak_elements: storage.peak(),
        },
    }
}
