//! One-call barcode and generator computation for any module with any of
//! the three algorithms.

use std::fmt;
use std::str::FromStr;

use crate::complex::{boundary_matrix, FilteredComplex};
use crate::error::{Error, Result};
use crate::persistence::{
    barcode_abs_hom, barcode_from_antitranspose, barcode_rel_hom, generators, pairs_to_partition,
    Diagram, GeneratorSource, GeneratorTable, ModuleKind, Partition,
};
use crate::reduction::{pcoh, phcol, phrow, Decomposition, ReduceOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Phcol,
    Phrow,
    Pcoh,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Phcol, Algorithm::Phrow, Algorithm::Pcoh];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Phcol => "phcol",
            Algorithm::Phrow => "phrow",
            Algorithm::Pcoh => "pcoh",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| format!("unknown algorithm '{s}' (expected phcol, phrow or pcoh)"))
    }
}

fn reduce(k: &FilteredComplex, algorithm: Algorithm, perp: bool, keep_v: bool) -> Decomposition {
    let mut d = boundary_matrix(k);
    if perp {
        d = d.anti_transpose();
    }
    match algorithm {
        Algorithm::Phrow => phrow(&d, k.field(), keep_v),
        _ => phcol(
            &d,
            k.field(),
            &ReduceOptions {
                keep_v,
                columns: None,
            },
        ),
    }
}

/// Barcode of `kind`. The matrix algorithms reduce `D` for homology and the
/// anti-transpose for cohomology; the cohomology algorithm always runs on
/// the anti-transpose and the other modules are read off through duality.
pub fn compute_barcode(
    k: &FilteredComplex,
    kind: ModuleKind,
    algorithm: Algorithm,
    drop_zero_length: bool,
) -> Result<Diagram> {
    let n = k.len();
    if algorithm == Algorithm::Pcoh {
        let out = pcoh(&boundary_matrix(k).anti_transpose(), k.field(), false);
        return Ok(match kind {
            ModuleKind::AbsHom => {
                barcode_abs_hom(&Partition::from_pairs(n, out.pairs), k, drop_zero_length)
            }
            ModuleKind::RelHom => {
                barcode_rel_hom(&Partition::from_pairs(n, out.pairs), k, drop_zero_length)
            }
            _ => barcode_from_antitranspose(
                &Partition::from_pairs(n, out.tau_pairs()),
                k,
                kind,
                drop_zero_length,
            )?,
        });
    }
    let dec = reduce(k, algorithm, kind.is_cohomology(), false);
    let part = pairs_to_partition(&dec);
    match kind {
        ModuleKind::AbsHom => Ok(barcode_abs_hom(&part, k, drop_zero_length)),
        ModuleKind::RelHom => Ok(barcode_rel_hom(&part, k, drop_zero_length)),
        _ => barcode_from_antitranspose(&part, k, kind, drop_zero_length),
    }
}

/// Generator table of `kind`. The cohomology algorithm only keeps absolute
/// cocycles, so it serves `abs_coh` alone.
pub fn compute_generators(
    k: &FilteredComplex,
    kind: ModuleKind,
    algorithm: Algorithm,
    drop_zero_length: bool,
) -> Result<GeneratorTable> {
    if algorithm == Algorithm::Pcoh {
        if kind != ModuleKind::AbsCoh {
            return Err(Error::Unavailable(format!(
                "pcoh keeps only absolute cocycles; use phcol or phrow for {kind}"
            )));
        }
        let out = pcoh(&boundary_matrix(k).anti_transpose(), k.field(), true);
        return generators(GeneratorSource::Cohomology(&out), k, kind, drop_zero_length);
    }
    let dec = reduce(k, algorithm, kind.is_cohomology(), true);
    let source = if kind.is_cohomology() {
        GeneratorSource::Coboundary(&dec)
    } else {
        GeneratorSource::Boundary(&dec)
    };
    generators(source, k, kind, drop_zero_length)
}
