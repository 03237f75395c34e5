//! Independence and matching numbers, diameter, and the closed-form bounds
//! on the packing total chromatic number.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::{all_pairs_distances, line_graph, total_graph, Graph, GraphError, Vertex};
use crate::independent::ConflictGraph;
use crate::packing::{classify_small, CapacityProfile, Color, PackingError, PowerGraphs};

/// Which rule produced a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerProvenance {
    /// `Δ + 2`, valid whenever there is an edge.
    DeltaPlus2,
    /// Small-value characterization of connected graphs.
    Classifier,
    /// Capacity count on the total graph.
    Capacity,
}

impl fmt::Display for LowerProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LowerProvenance::DeltaPlus2 => "delta_plus_2",
            LowerProvenance::Classifier => "classifier",
            LowerProvenance::Capacity => "capacity",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: Color,
    pub provenance: LowerProvenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub vertices: usize,
    pub edges: usize,
    pub alpha: usize,
    pub nu: usize,
    /// `None` for disconnected graphs.
    pub diameter: Option<u32>,
    pub lower: LowerBound,
    /// `|V| + |E| - max(α, ν) + 1`, maximized over components.
    pub upper: Option<Color>,
    /// `|V| - α + 1` when the diameter is exactly 2.
    pub diam2_exact: Option<Color>,
}

fn adjacency_conflicts(g: &Graph) -> ConflictGraph {
    let n = g.vertex_count();
    ConflictGraph::new(
        (0..n)
            .map(|v| {
                let mut s = VertexSet::new(n);
                g.neighbors(v).iter().for_each(|&w| s.insert(w));
                s
            })
            .collect(),
    )
}

/// `α(G)` with a witness set.
pub fn max_independent_set(g: &Graph) -> (usize, Vec<Vertex>) {
    let witness = adjacency_conflicts(g).maximum_independent_set();
    (witness.len(), witness)
}

/// `ν(G)` with a witness matching, found as a maximum independent set of
/// the line graph.
pub fn max_matching(g: &Graph) -> (usize, Vec<(Vertex, Vertex)>) {
    let (nu, picked) = max_independent_set(&line_graph(g).graph);
    (nu, picked.into_iter().map(|e| g.edges()[e]).collect())
}

/// `|V| + |E| - max(α, ν) + 1` for a connected graph.
pub fn upper_bound_total(g: &Graph) -> Result<Color, PackingError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::Empty.into());
    }
    if !g.is_connected() {
        return Err(PackingError::Disconnected);
    }
    let best = max_independent_set(g).0.max(max_matching(g).0);
    Ok((g.element_count() - best + 1) as Color)
}

/// Strongest of `Δ + 2`, the small-value classifier (per component) and the
/// capacity count on the total graph. Ties keep the earlier rule.
pub fn lower_bound_total(g: &Graph) -> LowerBound {
    let mut best = LowerBound {
        value: u32::from(g.vertex_count() > 0),
        provenance: LowerProvenance::Classifier,
    };
    let mut raise = |value: Color, provenance| {
        if value > best.value {
            best = LowerBound { value, provenance };
        }
    };
    if g.edge_count() > 0 {
        raise(g.max_degree() as Color + 2, LowerProvenance::DeltaPlus2);
    }
    for comp in g.components() {
        let class = classify_small(&g.induced_subgraph(&comp)).expect("components are connected");
        raise(class.value().unwrap_or(5), LowerProvenance::Classifier);
    }
    raise(capacity_floor(g), LowerProvenance::Capacity);
    best
}

/// Smallest `k` the capacity count does not rule out on the total graph.
fn capacity_floor(g: &Graph) -> Color {
    let d = all_pairs_distances(&total_graph(g).graph);
    let powers = PowerGraphs::new(&d);
    let caps = CapacityProfile::new(&powers);
    let mut k = 1;
    while caps.infeasible(k) {
        k += 1;
    }
    k
}

/// `|V| - α + 1` if `g` has diameter exactly 2, which is then its exact
/// packing chromatic number.
pub fn diameter2_exact(g: &Graph) -> Result<Option<Color>, PackingError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::Empty.into());
    }
    if !g.is_connected() {
        return Err(PackingError::Disconnected);
    }
    let diameter = all_pairs_distances(g).diameter();
    Ok((diameter == Some(2)).then(|| (g.vertex_count() - max_independent_set(g).0 + 1) as Color))
}

pub fn bounds_report(g: &Graph) -> BoundsReport {
    let upper = g
        .components()
        .iter()
        .map(|comp| upper_bound_total(&g.induced_subgraph(comp)).expect("components are connected"))
        .max();
    let diameter = all_pairs_distances(g).diameter();
    BoundsReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        alpha: max_independent_set(g).0,
        nu: max_matching(g).0,
        diameter,
        lower: lower_bound_total(g),
        upper,
        diam2_exact: if g.vertex_count() > 0 && g.is_connected() {
            diameter2_exact(g).expect("checked connected")
        } else {
            None
        },
    }
}
