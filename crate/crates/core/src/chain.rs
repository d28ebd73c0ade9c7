//! Sparse chains: sorted `(index, coefficient)` lists over `Z/p`.
//!
//! Indices are 0-based cell positions. `low()` is the last stored index.

use std::fmt;

use crate::field::Field;

/// Counts coefficient multiply-adds performed by chain arithmetic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    ops: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, n: u64) {
        self.ops += n;
    }

    pub fn get(&self) -> u64 {
        self.ops
    }

    pub fn reset(&mut self) {
        self.ops = 0;
    }
}

/// A sparse column. Indices strictly increasing, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Chain {
    terms: Vec<(usize, u32)>,
}

impl Chain {
    pub fn new() -> Self {
        Chain { terms: Vec::new() }
    }

    /// The elementary chain `1 * e_index`.
    pub fn unit(index: usize) -> Self {
        Chain {
            terms: vec![(index, 1)],
        }
    }

    /// Build from arbitrary terms: sorts, combines repeated indices, reduces
    /// coefficients and drops zeros.
    pub fn from_terms<I>(field: Field, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut raw: Vec<(usize, u32)> = terms
            .into_iter()
            .map(|(i, c)| (i, field.reduce(c)))
            .collect();
        raw.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 = field.add(last.1, c),
                _ => out.push((i, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Chain { terms: out }
    }

    /// Wrap terms that already satisfy the chain invariants.
    pub(crate) fn from_sorted(terms: Vec<(usize, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Chain { terms }
    }

    #[inline]
    pub fn low(&self) -> Option<usize> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient at `low()`.
    #[inline]
    pub fn low_coeff(&self) -> Option<u32> {
        self.terms.last().map(|t| t.1)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(usize, u32)] {
        &self.terms
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, u32)> + '_ {
        self.terms.iter().copied()
    }

    pub fn coeff(&self, index: usize) -> u32 {
        match self.terms.binary_search_by_key(&index, |t| t.0) {
            Ok(k) => self.terms[k].1,
            Err(_) => 0,
        }
    }

    pub fn scale(&self, field: Field, c: u32) -> Chain {
        if c.is_multiple_of(field.modulus()) {
            return Chain::new();
        }
        Chain {
            terms: self
                .terms
                .iter()
                .map(|&(i, v)| (i, field.mul(v, c)))
                .collect(),
        }
    }

    /// Reindex through `index -> n - 1 - index`, the anti-diagonal flip.
    pub fn reversed(&self, n: usize) -> Chain {
        Chain {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|&(i, v)| (n - 1 - i, v))
                .collect(),
        }
    }

    /// Drop every term with index `>= bound`.
    pub fn truncated(&self, bound: usize) -> Chain {
        Chain {
            terms: self.terms.iter().copied().filter(|t| t.0 < bound).collect(),
        }
    }

    /// True when the two chains differ by a nonzero scalar.
    pub fn proportional(&self, other: &Chain, field: Field) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let Some((&(_, a), &(_, b))) = self.terms.first().zip(other.terms.first()) else {
            return true;
        };
        let Ok(ia) = field.inv(a) else { return false };
        let ratio = field.mul(b, ia);
        self.scale(field, ratio) == *other
    }

    /// Render as `i:c` terms with 1-based indices, optionally starred.
    pub fn display(&self, field: Field, starred: bool) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let star = if starred { "*" } else { "" };
        self.terms
            .iter()
            .map(|&(i, c)| format!("{}{}:{}", i + 1, star, field.signed(c)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, c)| format!("{}:{}", i + 1, c))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `y + c * x`, merged and with cancelled terms removed. Each term of `x`
/// costs one multiply-add on `ops`.
pub fn chain_axpy(field: Field, c: u32, x: &Chain, y: &Chain, ops: &mut OpCounter) -> Chain {
    if c.is_multiple_of(field.modulus()) || x.is_empty() {
        return y.clone();
    }
    ops.add(x.len() as u64);
    let (xs, ys) = (&x.terms, &y.terms);
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    let (mut a, mut b) = (0, 0);
    while a < xs.len() && b < ys.len() {
        let (xi, xv) = xs[a];
        let (yi, yv) = ys[b];
        if xi < yi {
            out.push((xi, field.mul(c, xv)));
            a += 1;
        } else if yi < xi {
            out.push((yi, yv));
            b += 1;
        } else {
            let v = field.add(yv, field.mul(c, xv));
            if v != 0 {
                out.push((xi, v));
            }
            a += 1;
            b += 1;
        }
    }
    out.extend(xs[a..].iter().map(|&(i, v)| (i, field.mul(c, v))));
    out.extend_from_slice(&ys[b..]);
    Chain { terms: out }
}

/// Largest stored index, or `None` for the zero chain.
pub fn chain_low(x: &Chain) -> Option<usize> {
    x.low()
}

/// Inner product `sum x_i * y_i`. Each matched index costs one multiply-add.
pub fn chain_dot(field: Field, x: &Chain, y: &Chain, ops: &mut OpCounter) -> u32 {
    let (xs, ys) = (&x.terms, &y.terms);
    let (mut a, mut b) = (0, 0);
    let mut acc = 0u32;
    let mut hits = 0u64;
    while a < xs.len() && b < ys.len() {
        match xs[a].0.cmp(&ys[b].0) {
            std::cmp::Ordering::Less => a += 1,
            std::cmp::Ordering::Greater => b += 1,
            std::cmp::Ordering::Equal => {
                acc = field.add(acc, field.mul(xs[a].1, ys[b].1));
                hits += 1;
                a += 1;
                b += 1;
            }
        }
    }
    ops.add(hits);
    acc
}
