//! File formats: UTF-8 JSON with every rational written as a string
//! matching `INT` or `INT/POSINT`, never as a float.
//!
//! - space files: `{"dimension": n, "generators": [{"symbol": "abs",
//!   "vector": ["0", "1", "1"]}]}`
//! - matrix files: array of rows, each an array of rational strings
//! - subspace files: spanning rows in the same shape (possibly `[]`);
//!   canonicalized on load, so any spanning set is accepted

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use diffeolin::{DiffSpace, MatrixQ, Rational, RawGenerator, SubspaceQ};

use crate::cli::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub symbol: String,
    pub vector: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceDocument {
    pub dimension: usize,
    #[serde(default)]
    pub generators: Vec<GeneratorDoc>,
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>()
        .map_err(|e| CliError::new(e.to_string()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::new(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::new(format!("parse error in {}: {e}", path.display())))
}

pub fn load_space(path: &Path) -> Result<DiffSpace, CliError> {
    let doc: SpaceDocument = read_json(path)?;
    let mut generators = Vec::with_capacity(doc.generators.len());
    for gen in &doc.generators {
        let vector = gen
            .vector
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::new(format!("{}: {}", path.display(), e.message)))?;
        generators.push(RawGenerator::new(gen.symbol.clone(), vector));
    }
    DiffSpace::new(doc.dimension, &generators)
        .map_err(|e| CliError::new(format!("{}: {e}", path.display())))
}

fn parse_rows(path: &Path, rows: &[Vec<String>]) -> Result<Vec<Vec<Rational>>, CliError> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::new(format!("{}: {}", path.display(), e.message)))
}

pub fn load_matrix(path: &Path) -> Result<MatrixQ, CliError> {
    let rows: Vec<Vec<String>> = read_json(path)?;
    let rows = parse_rows(path, &rows)?;
    MatrixQ::from_rows(rows).map_err(|e| CliError::new(format!("{}: {e}", path.display())))
}

/// Loads spanning rows in the ambient dimension of the current space and
/// canonicalizes them. An empty array is the zero subspace.
pub fn load_subspace(path: &Path, ambient: usize) -> Result<SubspaceQ, CliError> {
    let rows: Vec<Vec<String>> = read_json(path)?;
    let rows = parse_rows(path, &rows)?;
    SubspaceQ::span_of_vectors(ambient, &rows)
        .map_err(|e| CliError::new(format!("{}: {e}", path.display())))
}

pub fn rational_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

pub fn matrix_strings(m: &MatrixQ) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| rational_strings(m.row(r))).collect()
}

pub fn subspace_strings(s: &SubspaceQ) -> Vec<Vec<String>> {
    matrix_strings(s.basis())
}
