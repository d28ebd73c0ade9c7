use std::fmt;

use crate::error::{Error, Result};

use super::{Diagram, ModuleKind};

/// A point of the doubled index set `1 < ... < n < 1bar < ... < nbar`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint {
    /// Barred endpoints sort after every plain one.
    pub barred: bool,
    /// 1-based cell label.
    pub index: usize,
}

impl Endpoint {
    pub fn plain(index: usize) -> Self {
        Endpoint {
            barred: false,
            index,
        }
    }

    pub fn bar(index: usize) -> Self {
        Endpoint {
            barred: true,
            index,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}bar", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConcatInterval {
    pub dim: usize,
    pub birth: Endpoint,
    pub death: Endpoint,
}

impl fmt::Display for ConcatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})_{}", self.birth, self.death, self.dim)
    }
}

/// Barcode of the sequence that runs through the absolute filtration and then
/// through the relative groups `(K, K_i)`.
///
/// Each finite `[a, b)_k` stays and also appears as `[abar, bbar)_{k+1}`;
/// each `[a, inf)_k` becomes `[a, abar)_k`.
pub fn concatenated_barcode(abs: &Diagram) -> Result<Vec<ConcatInterval>> {
    if abs.kind != ModuleKind::AbsHom && abs.kind != ModuleKind::AbsCoh {
        return Err(Error::Unavailable(format!(
            "the concatenated sequence is built from an absolute diagram, not {}",
            abs.kind
        )));
    }
    let n = abs.n();
    let mut out = Vec::with_capacity(2 * abs.len());
    for i in abs.intervals() {
        let a = i.birth_index;
        if i.death_index == n + 1 {
            out.push(ConcatInterval {
                dim: i.dim,
                birth: Endpoint::plain(a),
                death: Endpoint::bar(a),
            });
        } else {
            let b = i.death_index;
            out.push(ConcatInterval {
                dim: i.dim,
                birth: Endpoint::plain(a),
                death: Endpoint::plain(b),
            });
            out.push(ConcatInterval {
                dim: i.dim + 1,
                birth: Endpoint::bar(a),
                death: Endpoint::bar(b),
            });
        }
    }
    out.sort_unstable_by_key(|c| (c.birth, c.death, c.dim));
    Ok(out)
}
