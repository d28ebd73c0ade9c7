//! Instrumented comparison of the column algorithm on `D` against the
//! cohomology algorithm on the anti-transpose, over one Rips filtration.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg32;

use crate::complex::boundary_matrix;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::persistence::Partition;
use crate::reduction::{pcoh, phcol, ReduceOptions};
use crate::simplicial::{rips_filtration, rips_size, PointCloud};

/// Default ceiling on the number of cells a benchmark may build.
pub const DEFAULT_CELL_LIMIT: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct RunStats {
    pub algorithm: &'static str,
    pub primitive_ops: u64,
    pub peak_elements: u64,
    /// Seconds; reported, never compared.
    pub wall_time: f64,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub cells: usize,
    /// One row per algorithm per repetition, column algorithm first.
    pub runs: Vec<RunStats>,
}

impl BenchReport {
    fn first(&self, name: &str) -> &RunStats {
        self.runs
            .iter()
            .find(|r| r.algorithm == name)
            .expect("both algorithms ran")
    }

    pub fn phcol(&self) -> &RunStats {
        self.first("phcol")
    }

    pub fn pcoh(&self) -> &RunStats {
        self.first("pcoh")
    }

    /// `ops(phcol) / ops(pcoh)`.
    pub fn op_ratio(&self) -> f64 {
        self.phcol().primitive_ops as f64 / self.pcoh().primitive_ops.max(1) as f64
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("algorithm,ops,peak_elements,seconds\n");
        for r in &self.runs {
            writeln!(
                out,
                "{},{},{},{:.6}",
                r.algorithm, r.primitive_ops, r.peak_elements, r.wall_time
            )
            .unwrap();
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("cells: {}\n", self.cells);
        writeln!(
            out,
            "{:<10} {:>16} {:>14} {:>10}",
            "algorithm", "ops", "peak_elements", "seconds"
        )
        .unwrap();
        for r in &self.runs {
            writeln!(
                out,
                "{:<10} {:>16} {:>14} {:>10.4}",
                r.algorithm, r.primitive_ops, r.peak_elements, r.wall_time
            )
            .unwrap();
        }
        writeln!(out, "op ratio phcol/pcoh: {:.3}", self.op_ratio()).unwrap();
        out
    }
}

/// Build the Rips filtration, run both algorithms `repeat` times and check
/// that they produce the same barcode before returning any numbers.
pub fn run_bench(
    cloud: &PointCloud,
    r_max: f64,
    dim_max: usize,
    field: Field,
    repeat: usize,
    cell_limit: usize,
) -> Result<BenchReport> {
    let size = rips_size(cloud, r_max, dim_max);
    if size > cell_limit {
        return Err(Error::TooLarge {
            cells: size,
            limit: cell_limit,
        });
    }
    let k = rips_filtration(cloud, r_max, dim_max, field)?;
    let n = k.len();
    let d = boundary_matrix(&k);
    let dperp = d.anti_transpose();

    let mut runs = Vec::with_capacity(2 * repeat.max(1));
    for _ in 0..repeat.max(1) {
        let start = Instant::now();
        let dec = phcol(&d, field, &ReduceOptions::barcode_only());
        let col_time = start.elapsed().as_secs_f64();

        let start = Instant::now();
        let coh = pcoh(&dperp, field, false);
        let coh_time = start.elapsed().as_secs_f64();

        let hom = Partition::from_pairs(n, dec.pairs());
        let cohom = Partition::from_pairs(n, coh.pairs.clone());
        if hom != cohom {
            return Err(Error::Mismatch(format!(
                "phcol found {} pairs, pcoh found {}",
                hom.pairs.len(),
                cohom.pairs.len()
            )));
        }
        runs.push(RunStats {
            algorithm: "phcol",
            primitive_ops: dec.counters.primitive_ops,
            peak_elements: dec.counters.peak_elements,
            wall_time: col_time,
        });
        runs.push(RunStats {
            algorithm: "pcoh",
            primitive_ops: coh.counters.primitive_ops,
            peak_elements: coh.counters.peak_elements,
            wall_time: coh_time,
        });
    }
    runs.sort_by_key(|r| r.algorithm != "phcol");
    Ok(BenchReport { cells: n, runs })
}

/// `count` points uniform in the unit cube of `ℝ^dim`.
pub fn uniform_cube(count: usize, dim: usize, seed: u64) -> PointCloud {
    let mut rng = Pcg32::seed_from_u64(seed);
    let pts = (0..count)
        .map(|_| (0..dim).map(|_| rng.gen::<f64>()).collect())
        .collect();
    PointCloud::new(pts).expect("sampled points are finite")
}

/// `count` points on the torus with radii 2 and 1 in `ℝ^3`, angles uniform.
pub fn torus(count: usize, seed: u64) -> PointCloud {
    let mut rng = Pcg32::seed_from_u64(seed);
    let pts = (0..count)
        .map(|_| {
            let (u, v) = (rng.gen::<f64>() * TAU, rng.gen::<f64>() * TAU);
            let w = 2.0 + v.cos();
            vec![w * u.cos(), w * u.sin(), v.sin()]
        })
        .collect();
    PointCloud::new(pts).expect("sampled points are finite")
}

/// Smallest pairwise distance `r` such that the Rips complex up to `dim_max`
/// has at least `min_cells` cells, or `None` when even the full complex is
/// smaller.
pub fn radius_for_size(cloud: &PointCloud, dim_max: usize, min_cells: usize) -> Option<f64> {
    let n = cloud.len();
    let mut radii: Vec<f64> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| cloud.distance(a, b))
        .collect();
    radii.sort_by(f64::total_cmp);
    radii.dedup();
    let (mut lo, mut hi) = (0usize, radii.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if rips_size(cloud, radii[mid], dim_max) >= min_cells {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    radii.get(lo).copied()
}
