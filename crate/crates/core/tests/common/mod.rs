#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg32;

use phdual::chain::{chain_axpy, Chain, OpCounter};
use phdual::complex::{boundary_matrix, FilteredComplex};
use phdual::field::Field;
use phdual::matrix::SparseMatrix;
use phdual::persistence::{GeneratorTable, ModuleKind};
use phdual::simplicial::{rips_filtration, PointCloud};

pub fn rng(seed: u64) -> Pcg32 {
    Pcg32::seed_from_u64(seed)
}

/// Random Rips filtration on at most `max_points` points in the plane or
/// space, with a random radius and top dimension.
pub fn random_rips(
    rng: &mut Pcg32,
    max_points: usize,
    max_dim: usize,
    field: Field,
) -> FilteredComplex {
    let count = rng.gen_range(2..=max_points);
    let ambient = rng.gen_range(2..=3);
    let pts: Vec<Vec<f64>> = (0..count)
        .map(|_| {
            (0..ambient)
                .map(|_| rng.gen_range(0..8) as f64 / 4.0)
                .collect()
        })
        .collect();
    let cloud = PointCloud::new(pts).unwrap();
    let r = rng.gen_range(0.3..1.1) * cloud.diameter();
    let dim = rng.gen_range(1..=max_dim);
    rips_filtration(&cloud, r, dim, field).unwrap()
}

/// Every strictly upper-triangular 0/1 matrix of size `n` over `Z/2`.
pub fn all_binary_upper(n: usize) -> impl Iterator<Item = SparseMatrix> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0..1u64 << slots.len()).map(move |mask| {
        let mut cols = vec![Vec::new(); n];
        for (b, &(i, j)) in slots.iter().enumerate() {
            if mask >> b & 1 == 1 {
                cols[j].push((i, 1));
            }
        }
        SparseMatrix::from_columns(
            cols.into_iter()
                .map(|c| Chain::from_terms(Field::z2(), c))
                .collect(),
        )
    })
}

pub fn squares_to_zero(d: &SparseMatrix, field: Field) -> bool {
    d.mul(d, field).nnz() == 0
}

/// `D x` for a column vector `x`.
pub fn apply(d: &SparseMatrix, x: &Chain, field: Field) -> Chain {
    let mut ops = OpCounter::new();
    x.iter().fold(Chain::new(), |acc, (j, c)| {
        chain_axpy(field, c, d.column(j), &acc, &mut ops)
    })
}

/// `D^T y`: the coboundary of a cochain in cell order.
pub fn coboundary(d: &SparseMatrix, y: &Chain, field: Field) -> Chain {
    let terms = (0..d.n()).filter_map(|j| {
        let s = d
            .column(j)
            .iter()
            .fold(0u32, |acc, (i, c)| field.add(acc, field.mul(c, y.coeff(i))));
        (s != 0).then_some((j, s as i64))
    });
    Chain::from_terms(field, terms)
}

/// A random valid reduction: repeatedly add an earlier column to a later
/// one with the same low, choosing the pair at random, until reduced.
/// Returns the lows.
pub fn random_reduction_lows(
    d: &SparseMatrix,
    field: Field,
    rng: &mut Pcg32,
) -> Vec<Option<usize>> {
    let mut r: Vec<Chain> = d.columns().to_vec();
    let mut ops = OpCounter::new();
    loop {
        let mut clashes = Vec::new();
        for i in 0..r.len() {
            for j in 0..i {
                if r[i].low().is_some() && r[i].low() == r[j].low() {
                    clashes.push((j, i));
                }
            }
        }
        if clashes.is_empty() {
            return r.iter().map(Chain::low).collect();
        }
        let (j, i) = clashes[rng.gen_range(0..clashes.len())];
        let c = field.mul(
            r[i].low_coeff().unwrap(),
            field.inv(r[j].low_coeff().unwrap()).unwrap(),
        );
        r[i] = chain_axpy(field, field.neg(c), &r[j].clone(), &r[i], &mut ops);
    }
}

/// Algebraic sanity of a generator table; returns the first violation.
pub fn check_generators(k: &FilteredComplex, table: &GeneratorTable) -> Result<(), String> {
    let field = k.field();
    let d = boundary_matrix(k);
    let n = k.len();
    for g in &table.entries {
        let z = &g.generator.chain;
        let iv = g.interval;
        match table.kind {
            ModuleKind::AbsHom => {
                if !apply(&d, z, field).is_empty() {
                    return Err(format!("{iv}: generator is not a cycle"));
                }
                if z.low().is_none_or(|l| l + 1 > iv.birth_index) {
                    return Err(format!("{iv}: generator not present at birth"));
                }
                if let Some(w) = &g.killer {
                    if apply(&d, &w.chain, field) != *z {
                        return Err(format!("{iv}: killer boundary differs from generator"));
                    }
                }
            }
            ModuleKind::RelHom => {
                // a relative cycle of (K, K_b): its boundary lives in K_b
                let b = iv.birth_index;
                if apply(&d, z, field).low().is_some_and(|l| l + 1 > b) {
                    return Err(format!("{iv}: boundary leaves the subcomplex"));
                }
            }
            ModuleKind::AbsCoh => {
                let delta = coboundary(&d, z, field);
                let death = iv.death_index.min(n + 1);
                if delta.iter().any(|(j, _)| j + 1 < death) {
                    return Err(format!("{iv}: coboundary nonzero before death"));
                }
            }
            ModuleKind::RelCoh => {
                if !coboundary(&d, z, field).is_empty() {
                    return Err(format!("{iv}: generator is not a cocycle"));
                }
                if let Some(w) = &g.killer {
                    if coboundary(&d, &w.chain, field) != *z {
                        return Err(format!("{iv}: killer coboundary differs from generator"));
                    }
                }
            }
        }
    }
    Ok(())
}
