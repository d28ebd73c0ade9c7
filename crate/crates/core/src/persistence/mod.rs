//! Barcodes of the four persistence modules (absolute/relative homology and
//! cohomology), their generators, and the translations between them.
//!
//! Every barcode is derived from the same data: the set of essential cells
//! and the `(birth, death)` pairs of the boundary matrix, in cell order.
//! Cohomology computed on the anti-transposed matrix is first mapped back
//! through `i -> n - 1 - i`.

mod barcode;
mod concat;
mod generators;

pub use barcode::{
    barcode_abs_hom, barcode_from_antitranspose, barcode_rel_hom, pairs_to_partition, Partition,
};
pub use concat::{concatenated_barcode, ConcatInterval, Endpoint};
pub use generators::{
    generators, ChainRef, Generator, GeneratorSource, GeneratorTable, SourceMatrix,
};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::complex::FilteredComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    AbsHom,
    AbsCoh,
    RelHom,
    RelCoh,
}

impl ModuleKind {
    pub const ALL: [ModuleKind; 4] = [
        ModuleKind::AbsHom,
        ModuleKind::AbsCoh,
        ModuleKind::RelHom,
        ModuleKind::RelCoh,
    ];

    pub fn is_relative(self) -> bool {
        matches!(self, ModuleKind::RelHom | ModuleKind::RelCoh)
    }

    pub fn is_cohomology(self) -> bool {
        matches!(self, ModuleKind::AbsCoh | ModuleKind::RelCoh)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ModuleKind::AbsHom => "abs_hom",
            ModuleKind::AbsCoh => "abs_coh",
            ModuleKind::RelHom => "rel_hom",
            ModuleKind::RelCoh => "rel_coh",
        }
    }
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModuleKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ModuleKind::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                format!("unknown module '{s}' (expected abs_hom, abs_coh, rel_hom or rel_coh)")
            })
    }
}

/// A half-open interval `[a_p, a_{q+1})`, kept both as indices and values.
///
/// Indices are 1-based with the sentinels `0` (value `-inf`) and `n + 1`
/// (value `+inf`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub dim: usize,
    pub birth_index: usize,
    pub death_index: usize,
    pub birth: f64,
    pub death: f64,
}

impl Interval {
    pub fn new(
        complex: &FilteredComplex,
        dim: usize,
        birth_index: usize,
        death_index: usize,
    ) -> Self {
        Interval {
            dim,
            birth_index,
            death_index,
            birth: complex.value_at(birth_index),
            death: complex.value_at(death_index),
        }
    }

    /// The pair `<p, q>`: the feature persists over indices `p..=q`.
    pub fn index_pair(&self) -> (usize, usize) {
        (self.birth_index, self.death_index - 1)
    }

    pub fn is_finite(&self) -> bool {
        self.birth.is_finite() && self.death.is_finite()
    }

    pub fn is_zero_length(&self) -> bool {
        self.birth == self.death
    }

    fn cmp_key(&self, other: &Interval) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then(self.birth.total_cmp(&other.birth))
            .then(self.death.total_cmp(&other.death))
            .then(self.birth_index.cmp(&other.birth_index))
            .then(self.death_index.cmp(&other.death_index))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {})_{}",
            fmt_value(self.birth),
            fmt_value(self.death),
            self.dim
        )
    }
}

pub(crate) fn fmt_value(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v}")
    }
}

/// A barcode: multiset of intervals, sorted by (dim, birth, death).
#[derive(Clone, Debug, PartialEq)]
pub struct Diagram {
    pub kind: ModuleKind,
    n: usize,
    intervals: Vec<Interval>,
}

impl Diagram {
    pub fn new(kind: ModuleKind, n: usize, mut intervals: Vec<Interval>) -> Self {
        intervals.sort_by(Interval::cmp_key);
        Diagram { kind, n, intervals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Finite intervals.
    pub fn finite(&self) -> impl Iterator<Item = &Interval> {
        self.intervals.iter().filter(|i| i.is_finite())
    }

    /// Intervals with an infinite endpoint.
    pub fn infinite(&self) -> impl Iterator<Item = &Interval> {
        self.intervals.iter().filter(|i| !i.is_finite())
    }

    pub fn without_zero_length(&self) -> Diagram {
        Diagram {
            kind: self.kind,
            n: self.n,
            intervals: self
                .intervals
                .iter()
                .copied()
                .filter(|i| !i.is_zero_length())
                .collect(),
        }
    }

    /// Sorted `(dim, p, q)` triples; the exact comparison key.
    pub fn index_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<_> = self
            .intervals
            .iter()
            .map(|i| {
                let (p, q) = i.index_pair();
                (i.dim, p, q)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Text rendering: one `<dim> <birth> <death>` line per interval, or
    /// `<dim> <p> <q>` when `indices` is set.
    pub fn to_text(&self, indices: bool) -> String {
        let mut out = String::new();
        if indices {
            for (dim, p, q) in self.index_triples() {
                out.push_str(&format!("{dim} {p} {q}\n"));
            }
        } else {
            for i in &self.intervals {
                out.push_str(&format!(
                    "{} {} {}\n",
                    i.dim,
                    fmt_value(i.birth),
                    fmt_value(i.death)
                ));
            }
        }
        out
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false))
    }
}
