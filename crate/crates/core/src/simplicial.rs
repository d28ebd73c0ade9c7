//! Simplicial filtrations: Vietoris-Rips construction and assembly of
//! simplices into a `FilteredComplex`.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::chain::Chain;
use crate::complex::{build_complex, Cell, FilteredComplex};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyPointCloud);
        };
        let d = first.len();
        for (i, p) in points.iter().enumerate() {
            if p.len() != d {
                return Err(Error::BadPoint {
                    index: i + 1,
                    message: format!("has {} coordinates, expected {}", p.len(), d),
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::BadPoint {
                    index: i + 1,
                    message: "non-finite coordinate".into(),
                });
            }
        }
        Ok(PointCloud { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn distance(&self, a: usize, b: usize) -> f64 {
        self.points[a]
            .iter()
            .zip(&self.points[b])
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    }

    fn distance_matrix(&self) -> Vec<Vec<f64>> {
        let n = self.len();
        (0..n)
            .map(|a| (0..n).map(|b| self.distance(a, b)).collect())
            .collect()
    }

    /// Largest pairwise distance; zero for a single point.
    pub fn diameter(&self) -> f64 {
        let n = self.len();
        let mut best = 0.0f64;
        for a in 0..n {
            for b in a + 1..n {
                best = best.max(self.distance(a, b));
            }
        }
        best
    }
}

/// A simplex with its filtration value.
#[derive(Clone, Debug, PartialEq)]
pub struct FilteredSimplex {
    pub value: f64,
    /// Sorted, distinct vertex ids.
    pub vertices: Vec<usize>,
}

/// Filtration order: value, then dimension, then lexicographic vertices.
/// Faces always precede cofaces under this order when values are monotone.
pub fn filtration_order(a: &FilteredSimplex, b: &FilteredSimplex) -> Ordering {
    a.value
        .total_cmp(&b.value)
        .then(a.vertices.len().cmp(&b.vertices.len()))
        .then_with(|| a.vertices.cmp(&b.vertices))
}

/// Visit every clique of the `r_max` neighbourhood graph with at most
/// `dim_max + 1` vertices, passing (vertices, diameter).
fn for_each_clique<F>(dist: &[Vec<f64>], r_max: f64, dim_max: usize, mut visit: F)
where
    F: FnMut(&[usize], f64),
{
    let n = dist.len();
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|a| (a + 1..n).filter(|&b| dist[a][b] <= r_max).collect())
        .collect();

    fn expand<F: FnMut(&[usize], f64)>(
        dist: &[Vec<f64>],
        neighbours: &[Vec<usize>],
        simplex: &mut Vec<usize>,
        candidates: &[usize],
        diameter: f64,
        dim_max: usize,
        visit: &mut F,
    ) {
        visit(simplex, diameter);
        if simplex.len() > dim_max {
            return;
        }
        for (k, &v) in candidates.iter().enumerate() {
            let diam = simplex.iter().fold(diameter, |m, &u| m.max(dist[u][v]));
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|w| neighbours[v].binary_search(w).is_ok())
                .collect();
            simplex.push(v);
            expand(dist, neighbours, simplex, &next, diam, dim_max, visit);
            simplex.pop();
        }
    }

    let mut simplex = Vec::with_capacity(dim_max + 1);
    for v in 0..n {
        simplex.push(v);
        expand(
            dist,
            &neighbours,
            &mut simplex,
            &neighbours[v],
            0.0,
            dim_max,
            &mut visit,
        );
        simplex.pop();
    }
}

/// Number of simplices `rips_filtration` would produce.
pub fn rips_size(cloud: &PointCloud, r_max: f64, dim_max: usize) -> usize {
    let mut count = 0;
    for_each_clique(&cloud.distance_matrix(), r_max, dim_max, |_, _| count += 1);
    count
}

/// Vietoris-Rips filtration: every simplex of dimension at most `dim_max`
/// whose diameter is at most `r_max`, valued by its diameter.
pub fn rips_filtration(
    cloud: &PointCloud,
    r_max: f64,
    dim_max: usize,
    field: Field,
) -> Result<FilteredComplex> {
    if cloud.is_empty() {
        return Err(Error::EmptyPointCloud);
    }
    let mut simplices = Vec::new();
    for_each_clique(&cloud.distance_matrix(), r_max, dim_max, |vs, diam| {
        simplices.push(FilteredSimplex {
            value: diam,
            vertices: vs.to_vec(),
        })
    });
    simplicial_filtration(simplices, field).map_err(|(_, e)| e)
}

/// Sort simplices into filtration order and synthesize boundaries with
/// alternating signs over the sorted vertex list. On failure, returns the
/// position (in the input) of the offending simplex with the error.
pub fn simplicial_filtration(
    simplices: Vec<FilteredSimplex>,
    field: Field,
) -> std::result::Result<FilteredComplex, (usize, Error)> {
    if simplices.is_empty() {
        return Err((0, Error::EmptyComplex));
    }
    let mut order: Vec<usize> = (0..simplices.len()).collect();
    order.sort_by(|&a, &b| filtration_order(&simplices[a], &simplices[b]));

    let mut position: HashMap<&[usize], usize> = HashMap::with_capacity(simplices.len());
    for (idx, &src) in order.iter().enumerate() {
        if position.insert(&simplices[src].vertices, idx).is_some() {
            return Err((
                src,
                Error::Parse {
                    line: src + 1,
                    message: "duplicate simplex".into(),
                },
            ));
        }
    }

    let mut cells = Vec::with_capacity(simplices.len());
    let mut face = Vec::new();
    for &src in &order {
        let s = &simplices[src];
        let dim = s.vertices.len() - 1;
        let mut terms = Vec::with_capacity(if dim == 0 { 0 } else { dim + 1 });
        if dim > 0 {
            for drop in 0..=dim {
                face.clear();
                face.extend(
                    s.vertices
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != drop)
                        .map(|(_, &v)| v),
                );
                let Some(&fi) = position.get(face.as_slice()) else {
                    return Err((
                        src,
                        Error::Parse {
                            line: src + 1,
                            message: format!("missing face {:?}", face),
                        },
                    ));
                };
                let sign = if drop % 2 == 0 { 1 } else { -1 };
                terms.push((fi, sign));
            }
        }
        cells.push(Cell::new(dim, s.value, Chain::from_terms(field, terms)));
    }
    let vertex_lists = order
        .iter()
        .map(|&src| simplices[src].vertices.clone())
        .collect();
    let complex =
        build_complex(cells, field).map_err(|e| (order[cell_of(&e).unwrap_or(1) - 1], e))?;
    Ok(complex.with_simplices(vertex_lists))
}

fn cell_of(e: &Error) -> Option<usize> {
    match *e {
        Error::NonFiniteValue { index, .. }
        | Error::NonMonotone { index, .. }
        | Error::FaceAfterCoface { index, .. }
        | Error::DimensionMismatch { index, .. }
        | Error::BoundaryNotCycle { index } => Some(index),
        _ => None,
    }
}
