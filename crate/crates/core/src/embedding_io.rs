//! JSON serialization of embeddings.
//!
//! ```json
//! {"target": "fibonacci", "dimension": 3, "labels": {"0": "000", "1": "001"}}
//! ```
//!
//! Label keys are vertex ids; the leftmost character is coordinate 1.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitRows;
use crate::error::{Error, Result};
use crate::graph::DistMatrix;
use crate::partial_cube::{verify_labels, IsometryCheck, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Fibonacci,
    Hypercube,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingFile {
    pub target: Target,
    pub dimension: usize,
    /// Keyed by vertex id. Serialized in numeric id order.
    #[serde(serialize_with = "ordered_labels")]
    pub labels: BTreeMap<String, String>,
}

fn ordered_labels<S: serde::Serializer>(labels: &BTreeMap<String, String>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut entries: Vec<_> = labels.iter().collect();
    entries.sort_by(|a, b| match (a.0.parse::<usize>(), b.0.parse::<usize>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.0.cmp(b.0),
    });
    let mut map = s.serialize_map(Some(entries.len()))?;
    for (k, v) in entries {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl EmbeddingFile {
    pub fn from_rows(target: Target, rows: &BitRows) -> Self {
        EmbeddingFile {
            target,
            dimension: rows.cols(),
            labels: (0..rows.rows()).map(|v| (v.to_string(), rows.row_string(v))).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("embedding serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::EmbeddingFormat(e.to_string()))
    }

    /// Labels in vertex order for a graph with `n` vertices. Every id in
    /// `0..n` must be present exactly once and every label must have
    /// `dimension` binary characters.
    pub fn to_rows(&self, n: usize) -> Result<BitRows> {
        if self.labels.len() != n {
            return Err(Error::EmbeddingFormat(format!(
                "{} labels for a graph with {n} vertices",
                self.labels.len()
            )));
        }
        let mut ordered = vec![None; n];
        for (key, label) in &self.labels {
            let v: usize = key
                .parse()
                .ok()
                .filter(|&v| v < n)
                .ok_or_else(|| Error::EmbeddingFormat(format!("unknown vertex id {key:?}")))?;
            if label.len() != self.dimension {
                return Err(Error::EmbeddingFormat(format!(
                    "label of vertex {v} has length {}, expected {}",
                    label.len(),
                    self.dimension
                )));
            }
            ordered[v] = Some(label.as_str());
        }
        let rows: Vec<&str> = ordered.into_iter().map(|l| l.expect("ids are distinct")).collect();
        if n == 0 {
            return Ok(BitRows::new(0, self.dimension));
        }
        BitRows::from_strings(&rows).map_err(Error::EmbeddingFormat)
    }
}

/// Why an embedding file was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// Label of this vertex contains "11".
    NotFibonacci { vertex: usize },
    /// Label distance disagrees with graph distance.
    Distance(Witness),
}

/// Checks an embedding file against a graph's distances. `Err` is reserved
/// for malformed files; a well-formed but wrong embedding is `Ok(Some(_))`.
pub fn check_embedding(file: &EmbeddingFile, dist: &DistMatrix) -> Result<Option<Rejection>> {
    let rows = file.to_rows(dist.n())?;
    if file.target == Target::Fibonacci {
        if let Some(vertex) = (0..rows.rows()).find(|&v| rows.row_has_adjacent_ones(v)) {
            return Ok(Some(Rejection::NotFibonacci { vertex }));
        }
    }
    Ok(match verify_labels(dist, &rows)? {
        IsometryCheck::Isometric => None,
        IsometryCheck::Violated(w) => Some(Rejection::Distance(w)),
    })
}
