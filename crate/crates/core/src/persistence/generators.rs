use std::fmt;

use crate::chain::Chain;
use crate::complex::FilteredComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::reduction::{CohomologyOutput, Decomposition};

use super::barcode::{interval_for, pairs_to_partition, roles, Partition, Role};
use super::{Interval, ModuleKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceMatrix {
    R,
    V,
    /// Reduced anti-transposed matrix.
    RPerp,
    /// Reduction matrix of the anti-transposed matrix.
    VPerp,
}

impl SourceMatrix {
    fn is_perp(self) -> bool {
        matches!(self, SourceMatrix::RPerp | SourceMatrix::VPerp)
    }
}

impl fmt::Display for SourceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SourceMatrix::R => "R",
            SourceMatrix::V => "V",
            SourceMatrix::RPerp => "R_perp",
            SourceMatrix::VPerp => "V_perp",
        })
    }
}

/// A column taken from one of the reduction matrices.
///
/// `cell` is the 0-based cell the column is labelled by (for the
/// anti-transposed matrices this is the starred label). `chain` is always
/// in cell order; for cochains, index `i` is the coefficient of `sigma*_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainRef {
    pub matrix: SourceMatrix,
    pub cell: usize,
    pub chain: Chain,
}

impl ChainRef {
    pub fn is_cochain(&self) -> bool {
        self.matrix.is_perp()
    }

    pub fn display(&self, field: Field) -> String {
        let star = if self.is_cochain() { "*" } else { "" };
        format!(
            "{}[{}{}] = {}",
            self.matrix,
            self.cell + 1,
            star,
            self.chain.display(field, self.is_cochain())
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub interval: Interval,
    /// Cycle or cocycle representing the interval.
    pub generator: ChainRef,
    /// Chain whose (co)boundary is the generator, when the table has one.
    pub killer: Option<ChainRef>,
}

#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub kind: ModuleKind,
    pub field: Field,
    pub entries: Vec<Generator>,
}

impl fmt::Display for GeneratorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.entries {
            let (p, q) = g.interval.index_pair();
            writeln!(f, "{}  <{}, {}>", g.interval, p, q)?;
            writeln!(f, "  generator {}", g.generator.display(self.field))?;
            if let Some(k) = &g.killer {
                writeln!(f, "  killer    {}", k.display(self.field))?;
            }
        }
        Ok(())
    }
}

/// Where generators are read from.
#[derive(Clone, Copy, Debug)]
pub enum GeneratorSource<'a> {
    /// Reduction of `D` (homology).
    Boundary(&'a Decomposition),
    /// Reduction of the anti-transpose of `D` (cohomology).
    Coboundary(&'a Decomposition),
    /// Cohomology algorithm run with cocycles kept (absolute cohomology only).
    Cohomology(&'a CohomologyOutput),
}

/// Generator table for one module.
///
/// * absolute homology: `[a_f, inf)` by `V[f]`, `[a_g, a_h)` by `R[h]` killed by `V[h]`;
/// * relative homology: `[-inf, a_f)` by `V[f]`, `[a_g, a_h)` by `V[h]`;
/// * relative cohomology: `[-inf, a_f)` by `V_perp[f*]`, `[a_g, a_h)` by
///   `R_perp[g*]` killed by `V_perp[g*]`;
/// * absolute cohomology: `[a_f, inf)` by `V_perp[f*]`, `[a_g, a_h)` by `V_perp[g*]`.
pub fn generators(
    source: GeneratorSource<'_>,
    k: &FilteredComplex,
    kind: ModuleKind,
    drop_zero_length: bool,
) -> Result<GeneratorTable> {
    let n = k.len();
    let entries = match source {
        GeneratorSource::Boundary(dec) => {
            if kind.is_cohomology() {
                return Err(Error::Unavailable(format!(
                    "{kind} needs the anti-transposed reduction"
                )));
            }
            let v = dec
                .v
                .as_ref()
                .ok_or_else(|| Error::Unavailable("V was not kept".into()))?;
            let col = |m: SourceMatrix, j: usize| ChainRef {
                matrix: m,
                cell: j,
                chain: match m {
                    SourceMatrix::R => dec.r.column(j).clone(),
                    _ => v.column(j).clone(),
                },
            };
            let part = pairs_to_partition(dec);
            collect(&part, k, kind, drop_zero_length, |role| {
                match (kind, role) {
                    (_, Role::Essential(f)) => (col(SourceMatrix::V, f), None),
                    (ModuleKind::AbsHom, Role::Pair(_, h)) => {
                        (col(SourceMatrix::R, h), Some(col(SourceMatrix::V, h)))
                    }
                    (_, Role::Pair(_, h)) => (col(SourceMatrix::V, h), None),
                }
            })
        }
        GeneratorSource::Coboundary(dec) => {
            if !kind.is_cohomology() {
                return Err(Error::Unavailable(format!(
                    "{kind} needs the boundary reduction"
                )));
            }
            let v = dec
                .v
                .as_ref()
                .ok_or_else(|| Error::Unavailable("V_perp was not kept".into()))?;
            // starred label of cell i is column n-1-i
            let col = |m: SourceMatrix, cell: usize| ChainRef {
                matrix: m,
                cell,
                chain: match m {
                    SourceMatrix::RPerp => dec.r.column(n - 1 - cell).reversed(n),
                    _ => v.column(n - 1 - cell).reversed(n),
                },
            };
            let part = pairs_to_partition(dec).from_anti_transposed();
            collect(&part, k, kind, drop_zero_length, |role| {
                match (kind, role) {
                    (_, Role::Essential(f)) => (col(SourceMatrix::VPerp, f), None),
                    (ModuleKind::RelCoh, Role::Pair(g, _)) => (
                        col(SourceMatrix::RPerp, g),
                        Some(col(SourceMatrix::VPerp, g)),
                    ),
                    (_, Role::Pair(g, _)) => (col(SourceMatrix::VPerp, g), None),
                }
            })
        }
        GeneratorSource::Cohomology(out) => {
            if kind != ModuleKind::AbsCoh {
                return Err(Error::Unavailable(format!(
                    "the cohomology algorithm keeps only absolute cocycles, not {kind}"
                )));
            }
            let (Some(killed), Some(alive)) = (&out.pair_cocycles, &out.essential_cocycles) else {
                return Err(Error::Unavailable(
                    "cocycles were dropped during the run".into(),
                ));
            };
            let by_cell = |cell: usize| {
                let column = n - 1 - cell;
                let z = killed
                    .iter()
                    .chain(alive)
                    .find(|z| z.column == column)
                    .expect("every birth has a cocycle");
                ChainRef {
                    matrix: SourceMatrix::VPerp,
                    cell,
                    chain: z.chain.reversed(n),
                }
            };
            let part = Partition::from_pairs(n, out.pairs.clone());
            collect(&part, k, kind, drop_zero_length, |role| match role {
                Role::Essential(f) => (by_cell(f), None),
                Role::Pair(g, _) => (by_cell(g), None),
            })
        }
    };
    Ok(GeneratorTable {
        kind,
        field: k.field(),
        entries,
    })
}

fn collect<F>(
    part: &Partition,
    k: &FilteredComplex,
    kind: ModuleKind,
    drop_zero_length: bool,
    mut pick: F,
) -> Vec<Generator>
where
    F: FnMut(Role) -> (ChainRef, Option<ChainRef>),
{
    let mut out: Vec<Generator> = roles(part)
        .filter_map(|role| {
            let interval = interval_for(kind, role, k);
            if drop_zero_length && interval.is_zero_length() {
                return None;
            }
            let (generator, killer) = pick(role);
            Some(Generator {
                interval,
                generator,
                killer,
            })
        })
        .collect();
    out.sort_by(|a, b| {
        a.interval
            .dim
            .cmp(&b.interval.dim)
            .then(a.interval.birth_index.cmp(&b.interval.birth_index))
            .then(a.interval.death_index.cmp(&b.interval.death_index))
    });
    out
}
