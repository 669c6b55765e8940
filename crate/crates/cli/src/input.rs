//! Parsing of index-set and vector arguments.
//!
//! Index sets: `""` (empty), `all`, `random`, `random:K`, or a comma list whose
//! items are indices, half-open ranges `a..b` or inclusive ranges `a..=b`.
//!
//! Vectors: `random`, `e<K>` (basis vector), `@path` (JSON array of numbers or
//! `[re, im]` pairs), or a comma list of entries `re` or `re:im`.

use std::path::Path;

use frametheory::frames::rng::SplitMix64;
use frametheory::frames::{Field, IndexSubset};
use frametheory::numerics::Vector;
use num_complex::Complex;
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub fn parse_subset(spec: &str, universe: usize, rng: &mut SplitMix64) -> CliResult<IndexSubset> {
    let spec = spec.trim();
    match spec {
        "" | "none" => return Ok(IndexSubset::empty(universe)),
        "all" => return Ok(IndexSubset::full(universe)),
        "random" => return Ok(IndexSubset::random(rng, universe)),
        _ => {}
    }
    if let Some(k) = spec.strip_prefix("random:") {
        let k = parse_usize(k)?;
        return Ok(IndexSubset::random_of_size(rng, universe, k)?);
    }
    let mut indices = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((a, b)) = item.split_once("..=") {
            indices.extend(parse_usize(a)?..=parse_usize(b)?);
        } else if let Some((a, b)) = item.split_once("..") {
            indices.extend(parse_usize(a)?..parse_usize(b)?);
        } else {
            indices.push(parse_usize(item)?);
        }
    }
    Ok(IndexSubset::new(indices, universe)?)
}

fn parse_usize(s: &str) -> CliResult<usize> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("not an index: {s:?}")))
}

fn parse_f64(s: &str) -> CliResult<f64> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("not a number: {s:?}")))
}

pub fn parse_vector(spec: &str, dim: usize, field: Field, rng: &mut SplitMix64) -> CliResult<Vector<f64>> {
    let spec = spec.trim();
    let v = if spec == "random" {
        rng.unit_vector(dim, field)
    } else if let Some(k) = spec.strip_prefix('e').filter(|k| k.parse::<usize>().is_ok()) {
        let k = parse_usize(k)?;
        if k >= dim {
            return Err(CliError::Usage(format!("basis index {k} out of range for dimension {dim}")));
        }
        Vector::basis(dim, k)
    } else if let Some(path) = spec.strip_prefix('@') {
        read_vector_file(Path::new(path))?
    } else {
        spec.split(',')
            .map(|item| match item.split_once(':') {
                Some((re, im)) => Ok(Complex::new(parse_f64(re)?, parse_f64(im)?)),
                None => Ok(Complex::new(parse_f64(item)?, 0.0)),
            })
            .collect::<CliResult<Vec<_>>>()
            .map(Vector::new)?
    };
    if v.len() != dim {
        return Err(CliError::Usage(format!(
            "vector has {} entries but the space has dimension {dim}",
            v.len()
        )));
    }
    Ok(v)
}

fn read_vector_file(path: &Path) -> CliResult<Vector<f64>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let items = value
        .as_array()
        .ok_or_else(|| CliError::Usage("vector file must hold a JSON array".into()))?;
    items
        .iter()
        .map(|item| match item {
            Value::Number(n) => Ok(Complex::new(n.as_f64().unwrap_or(f64::NAN), 0.0)),
            Value::Array(pair) if pair.len() == 2 => {
                let re = pair[0].as_f64();
                let im = pair[1].as_f64();
                match (re, im) {
                    (Some(re), Some(im)) => Ok(Complex::new(re, im)),
                    _ => Err(CliError::Usage("vector entries must be numbers".into())),
                }
            }
            _ => Err(CliError::Usage("vector entries must be numbers or [re, im] pairs".into())),
        })
        .collect::<CliResult<Vec<_>>>()
        .map(Vector::new)
}
