//! Packing colorings: the coloring type, validation, and the exact solvers.
//!
//! A packing coloring gives every vertex of a host graph a color `i >= 1`
//! such that two vertices sharing color `i` are more than `i` apart. The
//! edge and total variants are packing colorings of the line and total
//! graphs; [`PackingColoring`] records which of the three a color vector
//! refers to so that colors can be reported against the source graph.

mod brute;
mod capacity;
mod chi;
mod classify;
mod search;

pub use brute::{brute_force_chi, BRUTE_FORCE_LIMIT};
pub use capacity::{capacity_infeasible, max_i_packing, CapacityProfile, PowerGraphs};
pub use chi::{
    chi_rho, chi_rho_index, chi_rho_total, Refutation, RefutationKind, SolveReport, SolveStats,
};
pub use classify::{classify_small, SmallClass};
pub(crate) use search::OutOfBudget;
pub use search::{solve_k, solve_k_metered, Budget, KOutcome, Meter};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    all_pairs_distances, element_distance, elements, DistanceMatrix, Element, Graph, GraphError,
};

pub type Color = u32;

/// Which elements of a source graph a coloring assigns colors to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// Vertices (packing coloring).
    Graph,
    /// Edges (packing edge-coloring).
    Line,
    /// Vertices and edges (packing total coloring).
    Total,
}

impl Target {
    /// The elements colored under this target, in color-vector order.
    pub fn elements(self, g: &Graph) -> Vec<Element> {
        match self {
            Target::Graph => (0..g.vertex_count()).map(Element::Vertex).collect(),
            Target::Line => g
                .edges()
                .iter()
                .map(|&(u, v)| Element::Edge(u, v))
                .collect(),
            Target::Total => elements(g),
        }
    }

    pub fn element_count(self, g: &Graph) -> usize {
        match self {
            Target::Graph => g.vertex_count(),
            Target::Line => g.edge_count(),
            Target::Total => g.element_count(),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Graph => "graph",
            Target::Line => "line",
            Target::Total => "total",
        })
    }
}

impl std::str::FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph" => Ok(Target::Graph),
            "line" => Ok(Target::Line),
            "total" => Ok(Target::Total),
            other => Err(format!(
                "unknown target `{other}` (expected graph, line or total)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackingError {
    #[error("coloring covers {found} elements but the target has {expected}")]
    IncompleteAssignment { expected: usize, found: usize },
    #[error("colors must be positive integers")]
    ZeroColor,
    #[error("budget exhausted after {nodes} nodes; value lies in [{lower}, {upper}]")]
    Timeout {
        lower: Color,
        upper: Color,
        nodes: u64,
    },
    #[error("the packing chromatic index needs at least one edge")]
    Edgeless,
    #[error("brute force is limited to {limit} vertices, got {n}")]
    SizeLimit { n: usize, limit: usize },
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A color for every element of a target, indexed in [`Target::elements`]
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PackingColoring {
    target: Target,
    colors: Vec<Color>,
}

impl PackingColoring {
    pub fn new(target: Target, colors: Vec<Color>) -> Result<Self, PackingError> {
        if colors.contains(&0) {
            return Err(PackingError::ZeroColor);
        }
        Ok(PackingColoring { target, colors })
    }

    /// Builds a coloring from explicit `(element, color)` pairs; every
    /// element of the target must be listed exactly once.
    pub fn from_assignments(
        g: &Graph,
        target: Target,
        pairs: impl IntoIterator<Item = (Element, Color)>,
    ) -> Result<Self, PackingError> {
        let order = target.elements(g);
        let mut colors = vec![0; order.len()];
        let mut seen = 0;
        for (element, color) in pairs {
            let slot = order
                .iter()
                .position(|e| *e == element)
                .ok_or(GraphError::NotAnElement(element))?;
            if colors[slot] == 0 {
                seen += 1;
            }
            colors[slot] = color;
        }
        if seen != order.len() {
            return Err(PackingError::IncompleteAssignment {
                expected: order.len(),
                found: seen,
            });
        }
        Self::new(target, colors)
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// `|c^{-1}(i)|` for `i = 1..=max_color`, at index `i - 1`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max_color() as usize];
        for &c in &self.colors {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    pub fn color_of(&self, g: &Graph, element: &Element) -> Option<Color> {
        let slot = match (self.target, element) {
            (Target::Graph, Element::Vertex(v)) => Some(*v),
            (Target::Line, Element::Edge(u, v)) => g.edge_index(*u, *v),
            (Target::Total, e) => e.index_in(g),
            _ => None,
        }?;
        self.colors.get(slot).copied()
    }

    pub fn assignments(&self, g: &Graph) -> Vec<(Element, Color)> {
        self.target
            .elements(g)
            .into_iter()
            .zip(self.colors.iter().copied())
            .collect()
    }

    pub(crate) fn colors_mut(&mut self) -> &mut Vec<Color> {
        &mut self.colors
    }
}

/// Two elements sharing `color` at distance `distance <= color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub a: Element,
    pub b: Element,
    pub color: Color,
    pub distance: u32,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} and {} share color {} at distance {}",
            self.a, self.b, self.color, self.distance
        )
    }
}

/// Lists every pair of same-colored elements that are too close. `d` must
/// be the distance matrix of `g`; element distances are derived from it
/// directly, without building the line or total graph.
pub fn validate_packing(
    g: &Graph,
    d: &DistanceMatrix,
    c: &PackingColoring,
) -> Result<Vec<Violation>, PackingError> {
    let order = c.target.elements(g);
    if order.len() != c.colors.len() {
        return Err(PackingError::IncompleteAssignment {
            expected: order.len(),
            found: c.colors.len(),
        });
    }
    let mut out = Vec::new();
    for (i, a) in order.iter().enumerate() {
        for (j, b) in order.iter().enumerate().skip(i + 1) {
            let color = c.colors[i];
            if color != c.colors[j] {
                continue;
            }
            let distance = element_distance(g, d, a, b)?;
            if distance <= color {
                out.push(Violation {
                    a: *a,
                    b: *b,
                    color,
                    distance,
                });
            }
        }
    }
    Ok(out)
}

/// [`validate_packing`] with distances recomputed from `g`.
pub fn violations(g: &Graph, c: &PackingColoring) -> Result<Vec<Violation>, PackingError> {
    validate_packing(g, &all_pairs_distances(g), c)
}

pub fn is_valid(g: &Graph, c: &PackingColoring) -> bool {
    matches!(violations(g, c), Ok(v) if v.is_empty())
}

/// Validity check for a plain vertex coloring of a host graph given only
/// its distances. Used inside the solvers.
pub(crate) fn host_coloring_is_valid(d: &DistanceMatrix, colors: &[Color]) -> bool {
    (0..colors.len())
        .all(|u| (u + 1..colors.len()).all(|v| colors[u] != colors[v] || d.get(u, v) > colors[u]))
}
