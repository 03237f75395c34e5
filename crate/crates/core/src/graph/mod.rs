//! Simple undirected graphs, the edge-list text format, and derived graphs.

mod derived;
mod distance;
mod generators;
mod random;

pub use derived::{elements, line_graph, total_graph, Element, LabeledGraph};
pub use distance::{all_pairs_distances, element_distance, DistanceMatrix, UNREACHABLE};
pub use generators::{generate, Family};
pub use random::{random_connected, random_graph, random_subgraph};

use std::fmt::Write as _;
use std::str::FromStr;

use sha2::{Digest, Sha256};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    IndexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("{0} is not an element of the graph")]
    NotAnElement(Element),
    #[error("{family} requires {requirement}")]
    InvalidParameters {
        family: &'static str,
        requirement: &'static str,
    },
}

/// A simple, finite, undirected graph on the vertices `0..n`.
///
/// Edges are kept sorted with `u < v`, which makes [`Graph::to_edge_list`]
/// byte-stable and gives every edge a canonical index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range
    /// endpoints. Errors report the 1-based position of the offending pair.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, edges.into_iter().enumerate().map(|(i, e)| (i + 1, e)))
    }

    fn build<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, (Vertex, Vertex))>,
    {
        let mut g = Graph::empty(n);
        for (line, (u, v)) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::IndexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            if g.adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge { line, u, v });
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            g.edges.push((u.min(v), u.max(v)));
        }
        g.edges.sort_unstable();
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of elements (vertices plus edges).
    pub fn element_count(&self) -> usize {
        self.n + self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Canonical index of the edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// `(Δ, δ)`.
    pub fn degree_stats(&self) -> Result<(usize, usize), GraphError> {
        let degrees = self.adj.iter().map(Vec::len);
        match (degrees.clone().max(), degrees.min()) {
            (Some(max), Some(min)) => Ok((max, min)),
            _ => Err(GraphError::Empty),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Same vertex set, keeping only edges for which `keep` returns true.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(Vertex, Vertex) -> bool) -> Graph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| keep(u, v))
            .collect();
        Graph::from_edges(self.n, edges).expect("subgraph of a simple graph is simple")
    }

    /// Canonical edge-list text: `"n m"` then one `"u v"` line per edge,
    /// sorted, `\n`-terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.edges.len() + 1));
        writeln!(out, "{} {}", self.n, self.edges.len()).unwrap();
        for (u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// SHA-256 of the canonical edge list, as lowercase hex.
    pub fn edge_list_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_edge_list().as_bytes()))
    }
}

/// Parses the edge-list format: a header `"n m"` followed by `m` lines
/// `"u v"`. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        reason: "missing header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push((line, parse_pair(line, l)?));
    }
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::build(n, edges)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let malformed = |reason: &str| GraphError::Malformed {
        line,
        reason: reason.to_string(),
    };
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let field = fields
            .next()
            .ok_or_else(|| malformed("expected two integers"))?;
        field
            .parse()
            .map_err(|_| malformed(&format!("`{field}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(malformed("trailing fields"));
    }
    Ok(pair)
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s)
    }
}
