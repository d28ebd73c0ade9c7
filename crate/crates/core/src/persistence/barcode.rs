use crate::complex::FilteredComplex;
use crate::error::{Error, Result};
use crate::reduction::Decomposition;

use super::{Diagram, Interval, ModuleKind};

/// The split of cell indices into essential cells `F`, paired births `G`
/// and paired deaths `H`, with the pairing `G <-> H`. 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    pub essential: Vec<usize>,
    pub births: Vec<usize>,
    pub deaths: Vec<usize>,
    /// `(g, h)` ordered by `h`.
    pub pairs: Vec<(usize, usize)>,
}

impl Partition {
    /// Build from `(g, h)` pairs; every index not in a pair is essential.
    pub fn from_pairs(n: usize, mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable_by_key(|&(_, h)| h);
        let mut paired = vec![false; n];
        for &(g, h) in &pairs {
            paired[g] = true;
            paired[h] = true;
        }
        let mut births: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        births.sort_unstable();
        Partition {
            n,
            essential: (0..n).filter(|&i| !paired[i]).collect(),
            births,
            deaths: pairs.iter().map(|p| p.1).collect(),
            pairs,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Reindex a partition of the anti-transposed matrix back to cell
    /// order: `(s, t) -> (n-1-t, n-1-s)`, `r -> n-1-r`.
    pub fn from_anti_transposed(&self) -> Partition {
        let n = self.n;
        Partition::from_pairs(
            n,
            self.pairs
                .iter()
                .map(|&(s, t)| (n - 1 - t, n - 1 - s))
                .collect(),
        )
    }
}

/// `H` = nonzero columns of `R`, `G` = their lows, `F` = the rest.
pub fn pairs_to_partition(dec: &Decomposition) -> Partition {
    Partition::from_pairs(dec.n(), dec.pairs())
}

/// What a barcode entry comes from, in cell order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Role {
    Essential(usize),
    Pair(usize, usize),
}

pub(crate) fn roles(part: &Partition) -> impl Iterator<Item = Role> + '_ {
    part.essential
        .iter()
        .map(|&f| Role::Essential(f))
        .chain(part.pairs.iter().map(|&(g, h)| Role::Pair(g, h)))
}

/// Absolute modules: `[a_f, inf)` and `[a_g, a_h)` in the dimension of the
/// birth cell. Relative modules: `[-inf, a_f)` in dim of `f`, and
/// `[a_g, a_h)` one dimension up.
pub(crate) fn interval_for(kind: ModuleKind, role: Role, k: &FilteredComplex) -> Interval {
    let n = k.len();
    let dim = |i: usize| k.cell(i).dim;
    match (kind.is_relative(), role) {
        (false, Role::Essential(f)) => Interval::new(k, dim(f), f + 1, n + 1),
        (false, Role::Pair(g, h)) => Interval::new(k, dim(g), g + 1, h + 1),
        (true, Role::Essential(f)) => Interval::new(k, dim(f), 0, f + 1),
        (true, Role::Pair(g, h)) => Interval::new(k, dim(g) + 1, g + 1, h + 1),
    }
}

fn diagram(
    kind: ModuleKind,
    part: &Partition,
    k: &FilteredComplex,
    drop_zero_length: bool,
) -> Diagram {
    let intervals = roles(part)
        .map(|r| interval_for(kind, r, k))
        .filter(|i| !(drop_zero_length && i.is_zero_length()))
        .collect();
    Diagram::new(kind, k.len(), intervals)
}

pub fn barcode_abs_hom(part: &Partition, k: &FilteredComplex, drop_zero_length: bool) -> Diagram {
    diagram(ModuleKind::AbsHom, part, k, drop_zero_length)
}

pub fn barcode_rel_hom(part: &Partition, k: &FilteredComplex, drop_zero_length: bool) -> Diagram {
    diagram(ModuleKind::RelHom, part, k, drop_zero_length)
}

/// Cohomology barcodes from a partition of the anti-transposed matrix.
/// Essential `r` gives `[a_{n+1-r}, inf)` (absolute) or `[-inf, a_{n+1-r})`
/// (relative); a pair `(s, t)` gives `[a_{n+1-t}, a_{n+1-s})`, one dimension
/// up for relative cohomology (1-based labels).
pub fn barcode_from_antitranspose(
    part_perp: &Partition,
    k: &FilteredComplex,
    kind: ModuleKind,
    drop_zero_length: bool,
) -> Result<Diagram> {
    if !kind.is_cohomology() {
        return Err(Error::Unavailable(format!(
            "{kind} is not read from the anti-transposed matrix"
        )));
    }
    Ok(diagram(
        kind,
        &part_perp.from_anti_transposed(),
        k,
        drop_zero_length,
    ))
}
