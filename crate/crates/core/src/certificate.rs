//! Re-checkable coloring certificates.
//!
//! A certificate is a JSON document binding a coloring to a graph through
//! the SHA-256 of the graph's canonical edge list. The stored `valid` flag
//! is informational only: [`Certificate::verify`] recomputes every distance
//! from the graph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Element, Graph, GraphError};
use crate::packing::{violations, Color, PackingColoring, PackingError, Target, Violation};

pub const FORMAT: &str = "packem-certificate/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Search,
    Construction,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("unsupported certificate format `{0}`")]
    UnsupportedFormat(String),
    #[error("graph hash mismatch: certificate names {expected}, graph hashes to {found}")]
    HashMismatch { expected: String, found: String },
    #[error("certificate carries no graph and none was supplied")]
    MissingGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Packing(#[from] PackingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub graph_hash: String,
    /// Canonical edge list of the graph, when embedded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub target: Target,
    pub provenance: Provenance,
    /// Claimed number of colors; every color lies in `1..=k`.
    pub k: Color,
    /// `[vertex, color]` pairs.
    #[serde(default)]
    pub vertices: Vec<(usize, Color)>,
    /// `[u, v, color]` triples with `u < v`.
    #[serde(default)]
    pub edges: Vec<(usize, usize, Color)>,
    pub valid: bool,
}

/// Result of re-checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub claimed_k: Color,
    pub max_color: Color,
    pub violations: Vec<Violation>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.max_color <= self.claimed_k
    }
}

impl Certificate {
    /// Certificate for `c` on `g`, with the graph embedded and `k` set to
    /// the largest color used.
    pub fn new(g: &Graph, c: &PackingColoring, provenance: Provenance) -> Self {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (e, color) in c.assignments(g) {
            match e {
                Element::Vertex(v) => vertices.push((v, color)),
                Element::Edge(u, v) => edges.push((u, v, color)),
            }
        }
        Certificate {
            format: FORMAT.to_string(),
            graph_hash: g.edge_list_hash(),
            graph: Some(g.to_edge_list()),
            target: c.target(),
            provenance,
            k: c.max_color(),
            vertices,
            edges,
            valid: matches!(violations(g, c), Ok(v) if v.is_empty()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        let cert: Certificate =
            serde_json::from_str(text).map_err(|e| CertificateError::Malformed(e.to_string()))?;
        if cert.format != FORMAT {
            return Err(CertificateError::UnsupportedFormat(cert.format));
        }
        Ok(cert)
    }

    /// The embedded graph, checked against the stored hash.
    pub fn embedded_graph(&self) -> Result<Graph, CertificateError> {
        let text = self
            .graph
            .as_deref()
            .ok_or(CertificateError::MissingGraph)?;
        let g: Graph = text.parse()?;
        self.check_hash(&g)?;
        Ok(g)
    }

    pub fn check_hash(&self, g: &Graph) -> Result<(), CertificateError> {
        let found = g.edge_list_hash();
        if found != self.graph_hash {
            return Err(CertificateError::HashMismatch {
                expected: self.graph_hash.clone(),
                found,
            });
        }
        Ok(())
    }

    /// The coloring the certificate describes, as a vector over `g`.
    pub fn coloring(&self, g: &Graph) -> Result<PackingColoring, CertificateError> {
        let vertices = self.vertices.iter().map(|&(v, c)| (Element::Vertex(v), c));
        let edges = self.edges.iter().map(|&(u, v, c)| (Element::edge(u, v), c));
        let expected = self.target.element_count(g);
        let listed = self.vertices.len() + self.edges.len();
        if listed != expected {
            return Err(PackingError::IncompleteAssignment {
                expected,
                found: listed,
            }
            .into());
        }
        Ok(PackingColoring::from_assignments(
            g,
            self.target,
            vertices.chain(edges),
        )?)
    }

    /// Re-checks the coloring against `g`, or the embedded graph when `g`
    /// is `None`. Ignores the stored `valid` flag.
    pub fn verify(&self, g: Option<&Graph>) -> Result<Verification, CertificateError> {
        let owned;
        let g = match g {
            Some(g) => {
                self.check_hash(g)?;
                g
            }
            None => {
                owned = self.embedded_graph()?;
                &owned
            }
        };
        let c = self.coloring(g)?;
        Ok(Verification {
            claimed_k: self.k,
            max_color: c.max_color(),
            violations: violations(g, &c)?,
        })
    }
}
