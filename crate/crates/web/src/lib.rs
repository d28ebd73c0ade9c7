//! WebAssembly bindings for the browser demo.
//!
//! Each exported function takes plain strings and numbers and returns a JSON
//! string. The `*_json` functions hold the logic and run natively as well.

use phdual::complex::{boundary_matrix, FilteredComplex};
use phdual::field::Field;
use phdual::persistence::{Diagram, Interval, ModuleKind, Partition};
use phdual::pipeline::{compute_barcode, compute_generators, Algorithm};
use phdual::reduction::{pcoh, phcol, ReduceOptions};
use phdual::simplicial::{rips_filtration, rips_size, PointCloud};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest complex the demo will build.
pub const CELL_LIMIT: usize = 200_000;

fn value(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else if v > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

fn interval(i: &Interval) -> Value {
    let (p, q) = i.index_pair();
    json!({
        "dim": i.dim,
        "birth": value(i.birth),
        "death": value(i.death),
        "p": p,
        "q": q,
        "label": i.to_string(),
    })
}

fn diagram(d: &Diagram) -> Value {
    Value::Array(d.intervals().iter().map(interval).collect())
}

fn cloud(points: &str) -> Result<PointCloud, String> {
    let pts: Vec<Vec<f64>> = serde_json::from_str(points).map_err(|e| format!("points: {e}"))?;
    PointCloud::new(pts).map_err(|e| e.to_string())
}

fn rips(points: &str, r_max: f64, dim_max: usize, field: u64) -> Result<FilteredComplex, String> {
    let pc = cloud(points)?;
    let field = Field::new(field).map_err(|e| e.to_string())?;
    let cells = rips_size(&pc, r_max, dim_max);
    if cells > CELL_LIMIT {
        return Err(format!(
            "{cells} cells is over the demo limit of {CELL_LIMIT}"
        ));
    }
    rips_filtration(&pc, r_max, dim_max, field).map_err(|e| e.to_string())
}

/// Barcode of a Rips filtration. `points` is a JSON array of coordinate arrays.
pub fn rips_barcode_json(
    points: &str,
    r_max: f64,
    dim_max: usize,
    module: &str,
    algorithm: &str,
) -> Result<String, String> {
    let kind: ModuleKind = module.parse()?;
    let algorithm: Algorithm = algorithm.parse()?;
    let k = rips(points, r_max, dim_max, 2)?;
    let d = compute_barcode(&k, kind, algorithm, true).map_err(|e| e.to_string())?;
    Ok(json!({
        "cells": k.len(),
        "module": kind.as_str(),
        "intervals": diagram(&d),
    })
    .to_string())
}

/// All four barcodes and generator tables of the hollow triangle sphere.
pub fn sphere_modules_json(field: u64) -> Result<String, String> {
    let field = Field::new(field).map_err(|e| e.to_string())?;
    let k = FilteredComplex::two_sphere(field);
    let modules = ModuleKind::ALL
        .into_iter()
        .map(|kind| {
            let d =
                compute_barcode(&k, kind, Algorithm::Phcol, false).map_err(|e| e.to_string())?;
            let g =
                compute_generators(&k, kind, Algorithm::Phcol, false).map_err(|e| e.to_string())?;
            Ok(json!({
                "module": kind.as_str(),
                "intervals": diagram(&d),
                "generators": g.to_string(),
            }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json!({ "cells": k.len(), "modules": modules }).to_string())
}

/// Operation and storage counters of phcol on `D` and pcoh on its
/// anti-transpose, after checking that both give the same pairs.
pub fn compare_json(points: &str, r_max: f64, dim_max: usize) -> Result<String, String> {
    let k = rips(points, r_max, dim_max, 2)?;
    let n = k.len();
    let d = boundary_matrix(&k);
    let col = phcol(&d, k.field(), &ReduceOptions::barcode_only());
    let coh = pcoh(&d.anti_transpose(), k.field(), false);
    let agree =
        Partition::from_pairs(n, col.pairs()) == Partition::from_pairs(n, coh.pairs.clone());
    Ok(json!({
        "cells": n,
        "agree": agree,
        "phcol": { "ops": col.counters.primitive_ops, "peak": col.counters.peak_elements },
        "pcoh": { "ops": coh.counters.primitive_ops, "peak": coh.counters.peak_elements },
    })
    .to_string())
}

#[wasm_bindgen]
pub fn rips_barcode(
    points: &str,
    r_max: f64,
    dim_max: usize,
    module: &str,
    algorithm: &str,
) -> Result<String, JsValue> {
    rips_barcode_json(points, r_max, dim_max, module, algorithm).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sphere_modules(field: u32) -> Result<String, JsValue> {
    sphere_modules_json(field.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn compare(points: &str, r_max: f64, dim_max: usize) -> Result<String, JsValue> {
    compare_json(points, r_max, dim_max).map_err(|e| JsValue::from_str(&e))
}
