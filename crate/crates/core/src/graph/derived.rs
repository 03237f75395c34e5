use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};

/// A vertex or an edge of a graph. Edge endpoints are stored sorted, so
/// `Element::edge(2, 1) == Element::edge(1, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Element {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

impl Element {
    pub fn edge(u: Vertex, v: Vertex) -> Self {
        Element::Edge(u.min(v), u.max(v))
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, Element::Vertex(_))
    }

    /// Whether this element belongs to `g`.
    pub fn in_graph(&self, g: &Graph) -> bool {
        match *self {
            Element::Vertex(v) => v < g.vertex_count(),
            Element::Edge(u, v) => u < v && g.has_edge(u, v),
        }
    }

    /// Index of this element in [`elements`] order: vertices first, then
    /// edges in canonical order.
    pub fn index_in(&self, g: &Graph) -> Option<usize> {
        match *self {
            Element::Vertex(v) => (v < g.vertex_count()).then_some(v),
            Element::Edge(u, v) if u < v => g.edge_index(u, v).map(|e| g.vertex_count() + e),
            Element::Edge(..) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Edge(u, v) => write!(f, "e{u}-{v}"),
        }
    }
}

/// All elements of `g`: vertices `0..n`, then edges in canonical order.
pub fn elements(g: &Graph) -> Vec<Element> {
    (0..g.vertex_count())
        .map(Element::Vertex)
        .chain(g.edges().iter().map(|&(u, v)| Element::Edge(u, v)))
        .collect()
}

/// A graph whose vertices stand for elements of a source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `labels[i]` is the source element represented by vertex `i`.
    pub labels: Vec<Element>,
}

impl LabeledGraph {
    pub fn position(&self, element: &Element) -> Option<usize> {
        self.labels.iter().position(|l| l == element)
    }
}

/// Line graph: vertex `i` is the `i`-th edge of `g`; two vertices are
/// adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> LabeledGraph {
    let mut adjacent = Vec::new();
    for v in 0..g.vertex_count() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("neighbor edge exists"))
            .collect();
        for (a, &e) in incident.iter().enumerate() {
            for &f in &incident[a + 1..] {
                adjacent.push((e, f));
            }
        }
    }
    let graph = Graph::from_edges(g.edge_count(), adjacent)
        .expect("two distinct edges of a simple graph share at most one endpoint");
    let labels = g
        .edges()
        .iter()
        .map(|&(u, v)| Element::Edge(u, v))
        .collect();
    LabeledGraph { graph, labels }
}

/// Total graph: one vertex per element of `g` (in [`elements`] order).
/// Adjacent vertices, incident edges, and a vertex with each edge it ends
/// are joined.
pub fn total_graph(g: &Graph) -> LabeledGraph {
    let n = g.vertex_count();
    let line = line_graph(g);
    let shifted = |&(e, f): &(usize, usize)| (n + e, n + f);
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    edges.extend(line.graph.edges().iter().map(shifted));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
    }
    let graph = Graph::from_edges(n + g.edge_count(), edges)
        .expect("total graph edge classes are disjoint");
    LabeledGraph {
        graph,
        labels: elements(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn path(n: usize) -> Graph {
        generate(Family::Path(n)).unwrap()
    }

    #[test]
    fn line_graph_of_path_is_shorter_path() {
        let l = line_graph(&path(4));
        assert_eq!(l.graph, path(3));
        assert_eq!(
            l.labels,
            vec![
                Element::Edge(0, 1),
                Element::Edge(1, 2),
                Element::Edge(2, 3)
            ]
        );
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let l = line_graph(&generate(Family::Star(3)).unwrap());
        assert_eq!(l.graph.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn line_graph_of_c5_is_c5() {
        let l = line_graph(&generate(Family::Cycle(5)).unwrap());
        assert_eq!(l.graph.edge_count(), 5);
        assert!((0..5).all(|v| l.graph.degree(v) == 2));
        assert!(l.graph.is_connected());
    }

    #[test]
    fn total_graph_sizes_from_the_paths_section() {
        let t3 = total_graph(&path(3));
        assert_eq!((t3.graph.vertex_count(), t3.graph.edge_count()), (5, 7));
        assert_eq!(total_graph(&path(6)).graph.vertex_count(), 11);
        let c12 = generate(Family::Cycle(12)).unwrap();
        assert_eq!(total_graph(&c12).graph.vertex_count(), 24);
    }

    #[test]
    fn total_graph_of_path_is_a_d12_segment() {
        // u1, u1u2, u2, ... in order gives i ~ j iff |i - j| in {1, 2}
        let g = path(6);
        let t = total_graph(&g);
        let order: Vec<usize> = (0..6)
            .flat_map(|i| {
                let mut v = vec![i];
                if i + 1 < 6 {
                    v.push(Element::edge(i, i + 1).index_in(&g).unwrap());
                }
                v
            })
            .collect();
        let relabelled = t.graph.induced_subgraph(&order);
        assert_eq!(relabelled, generate(Family::D12Segment(11)).unwrap());
    }

    #[test]
    fn element_indexing() {
        let g = path(3);
        assert_eq!(Element::edge(2, 1).index_in(&g), Some(4));
        assert_eq!(Element::Vertex(3).index_in(&g), None);
        assert_eq!(Element::edge(0, 2).index_in(&g), None);
        assert!(!Element::Edge(2, 1).in_graph(&g));
        assert_eq!(Element::edge(1, 2).to_string(), "e1-2");
    }
}
