//! Text formats for complexes and point clouds.
//!
//! * cells: `<dim> <value> [<face>:<coef> ...]` per line, faces 1-based;
//! * simplicial: `<value> <v0> <v1> ...` per line, vertex ids are any tokens;
//! * points: whitespace-separated coordinates per line.
//!
//! `#` starts a comment; blank lines are skipped. Errors carry the 1-based
//! line number of the offending input line.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::chain::Chain;
use crate::complex::{build_complex, Cell, FilteredComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::simplicial::{simplicial_filtration, FilteredSimplex, PointCloud};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Cells,
    Simplicial,
    Points,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cells" => Ok(InputFormat::Cells),
            "simplicial" => Ok(InputFormat::Simplicial),
            "points" => Ok(InputFormat::Points),
            _ => Err(format!(
                "unknown format '{s}' (expected cells, simplicial or points)"
            )),
        }
    }
}

/// Non-empty content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_value(line: usize, tok: &str) -> Result<f64> {
    let v: f64 = tok
        .parse()
        .map_err(|_| parse_err(line, format!("'{tok}' is not a number")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("value '{tok}' is not finite")));
    }
    Ok(v)
}

/// Re-express a validation error of cell `index` as an error on its line.
fn at_line(e: Error, lines: &[usize]) -> Error {
    let index = match e {
        Error::NonFiniteValue { index, .. }
        | Error::NonMonotone { index, .. }
        | Error::FaceAfterCoface { index, .. }
        | Error::DimensionMismatch { index, .. }
        | Error::BoundaryNotCycle { index } => index,
        other => return other,
    };
    parse_err(lines[index - 1], e.to_string())
}

pub fn parse_cells(text: &str, field: Field) -> Result<FilteredComplex> {
    let mut cells = Vec::new();
    let mut lines = Vec::new();
    for (line, body) in content_lines(text) {
        let mut toks = body.split_whitespace();
        let dim_tok = toks.next().unwrap_or_default();
        let dim: usize = dim_tok
            .parse()
            .map_err(|_| parse_err(line, format!("'{dim_tok}' is not a dimension")))?;
        let value_tok = toks
            .next()
            .ok_or_else(|| parse_err(line, "missing filtration value"))?;
        let value = parse_value(line, value_tok)?;
        let mut terms = Vec::new();
        for tok in toks {
            let (face, coef) = tok
                .split_once(':')
                .ok_or_else(|| parse_err(line, format!("'{tok}' is not <face>:<coef>")))?;
            let face: usize = face
                .parse()
                .map_err(|_| parse_err(line, format!("'{face}' is not a cell index")))?;
            let coef: i64 = coef
                .parse()
                .map_err(|_| parse_err(line, format!("'{coef}' is not an integer coefficient")))?;
            if face == 0 {
                return Err(parse_err(line, "cell indices start at 1"));
            }
            terms.push((face - 1, coef));
        }
        cells.push(Cell::new(dim, value, Chain::from_terms(field, terms)));
        lines.push(line);
    }
    if cells.is_empty() {
        return Err(Error::EmptyComplex);
    }
    build_complex(cells, field).map_err(|e| at_line(e, &lines))
}

pub fn parse_simplicial(text: &str, field: Field) -> Result<FilteredComplex> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut simplices = Vec::new();
    let mut lines = Vec::new();
    for (line, body) in content_lines(text) {
        let mut toks = body.split_whitespace();
        let value = parse_value(line, toks.next().unwrap_or_default())?;
        let mut vertices: Vec<usize> = toks
            .map(|t| {
                let next = ids.len();
                *ids.entry(t).or_insert(next)
            })
            .collect();
        if vertices.is_empty() {
            return Err(parse_err(line, "simplex has no vertices"));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(line, "repeated vertex"));
        }
        simplices.push(FilteredSimplex { value, vertices });
        lines.push(line);
    }
    if simplices.is_empty() {
        return Err(Error::EmptyComplex);
    }
    simplicial_filtration(simplices, field).map_err(|(src, e)| match e {
        Error::Parse { message, .. } => parse_err(lines[src], message),
        other => parse_err(lines[src], other.to_string()),
    })
}

pub fn parse_points(text: &str) -> Result<PointCloud> {
    let mut points = Vec::new();
    let mut lines = Vec::new();
    for (line, body) in content_lines(text) {
        let p = body
            .split_whitespace()
            .map(|t| parse_value(line, t))
            .collect::<Result<Vec<f64>>>()?;
        points.push(p);
        lines.push(line);
    }
    PointCloud::new(points).map_err(|e| match e {
        Error::BadPoint { index, message } => parse_err(lines[index - 1], message),
        other => other,
    })
}

pub fn read_complex(path: &Path, format: InputFormat, field: Field) -> Result<FilteredComplex> {
    let text = std::fs::read_to_string(path)?;
    match format {
        InputFormat::Cells => parse_cells(&text, field),
        InputFormat::Simplicial => parse_simplicial(&text, field),
        InputFormat::Points => Err(Error::Unavailable(
            "a point cloud needs Rips parameters; use read_points".into(),
        )),
    }
}

pub fn read_points(path: &Path) -> Result<PointCloud> {
    parse_points(&std::fs::read_to_string(path)?)
}

/// Render a complex in the cell format; coefficients are written signed.
pub fn write_cells(k: &FilteredComplex) -> String {
    let field = k.field();
    let mut out = String::new();
    for cell in k.cells() {
        write!(out, "{} {}", cell.dim, cell.value).unwrap();
        for (i, c) in cell.boundary.iter() {
            write!(out, " {}:{}", i + 1, field.signed(c)).unwrap();
        }
        out.push('\n');
    }
    out
}
