use std::collections::VecDeque;

use super::{Element, Graph, GraphError, Vertex};

/// Distance between vertices in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Distance from `u` to `v`; [`UNREACHABLE`] across components.
    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance, or `None` if the graph is disconnected.
    /// A single vertex has diameter 0.
    pub fn diameter(&self) -> Option<u32> {
        let mut max = 0;
        for &d in &self.dist {
            if d == UNREACHABLE {
                return None;
            }
            max = max.max(d);
        }
        Some(max)
    }

    /// Largest finite distance, ignoring unreachable pairs.
    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == UNREACHABLE {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}

/// Distance between two elements of `g`, computed from vertex distances:
/// edge-to-edge is the least endpoint distance plus one, vertex-to-edge the
/// least distance to an endpoint plus one. Agrees with the distance between
/// the corresponding vertices of the total graph.
pub fn element_distance(
    g: &Graph,
    d: &DistanceMatrix,
    a: &Element,
    b: &Element,
) -> Result<u32, GraphError> {
    for x in [a, b] {
        if !x.in_graph(g) {
            return Err(GraphError::NotAnElement(*x));
        }
    }
    let via = |min: u32| {
        if min == UNREACHABLE {
            UNREACHABLE
        } else {
            min + 1
        }
    };
    Ok(match (*a, *b) {
        (Element::Vertex(u), Element::Vertex(v)) => d.get(u, v),
        (Element::Edge(p, q), Element::Edge(r, s)) => {
            if (p, q) == (r, s) {
                0
            } else {
                via(d
                    .get(p, r)
                    .min(d.get(p, s))
                    .min(d.get(q, r))
                    .min(d.get(q, s)))
            }
        }
        (Element::Vertex(u), Element::Edge(p, q)) | (Element::Edge(p, q), Element::Vertex(u)) => {
            via(d.get(u, p).min(d.get(u, q)))
        }
    })
}
