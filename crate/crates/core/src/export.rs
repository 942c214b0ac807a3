//! Canonical vertex keys and DOT/JSON export of explicit crystals.

use crate::classical::{Element, Tableau};
use crate::crystal::Crystal;
use serde::{Deserialize, Serialize};
use std::fmt::Write;

/// Version of the export schema.
pub const EXPORT_VERSION: u32 = 1;

/// Shape parts, then row-major letters as fixed-width signed codes:
/// `2,1:+01+02+03`; the empty tableau is `:`.
pub fn tableau_key(t: &Tableau) -> String {
    let shape: Vec<String> = t.shape().parts().iter().map(|p| p.to_string()).collect();
    let mut out = shape.join(",");
    out.push(':');
    for row in t.rows() {
        for x in row {
            write!(out, "{:+03}", x).expect("string write");
        }
    }
    out
}

/// Slot keys joined by `|`.
pub fn element_key(e: &Element) -> String {
    e.0.iter().map(tableau_key).collect::<Vec<_>>().join("|")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub key: String,
    pub label: String,
    pub weight: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

/// An explicit crystal graph; edges are `f`-arrows sorted by
/// `(color, from)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub version: u32,
    pub name: String,
    pub colors: Vec<usize>,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    /// Highest weights of the classical components, sorted.
    pub components: Vec<Vec<i32>>,
    /// `σ` as a vertex map, when present.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<Vec<usize>>,
}

impl GraphExport {
    /// Exports `c` with the given vertex keys.
    pub fn new<C: Crystal + ?Sized>(name: &str, c: &C, keys: Vec<String>, sigma: Option<Vec<usize>>) -> GraphExport {
        let colors = c.colors();
        let vertices = (0..c.len()).zip(keys).map(|(id, key)| VertexRecord { id, key, label: c.label(id), weight: c.weight(id) }).collect();
        let mut edges = Vec::new();
        for &i in &colors {
            for b in 0..c.len() {
                if let Some(to) = c.f(i, b) {
                    edges.push(EdgeRecord { from: b, to, color: i });
                }
            }
        }
        let mut components: Vec<Vec<i32>> = c.highest_weight_vertices(&c.classical_colors()).into_iter().map(|b| c.weight(b)).collect();
        components.sort();
        GraphExport { version: EXPORT_VERSION, name: name.to_string(), colors, vertices, edges, components, sigma }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graphs serialize")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", self.name.replace('"', "'")).expect("string write");
        for v in &self.vertices {
            writeln!(out, "  {} [label=\"{}\"];", v.id, v.label.replace('"', "'")).expect("string write");
        }
        for e in &self.edges {
            writeln!(out, "  {} -> {} [label=\"{}\"];", e.from, e.to, e.color).expect("string write");
        }
        if let Some(s) = &self.sigma {
            for (a, &b) in s.iter().enumerate() {
                if a < b {
                    writeln!(out, "  {} -> {} [style=dashed, dir=both, label=\"σ\"];", a, b).expect("string write");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {} vertices, {} edges\n", self.name, self.vertices.len(), self.edges.len());
        out.push_str("classical highest weights:\n");
        for w in &self.components {
            writeln!(out, "  {:?}", w).expect("string write");
        }
        out
    }
}
