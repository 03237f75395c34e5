use serde::{Deserialize, Serialize};

use crate::graph::{generate, Family, Graph};

use super::PackingError;

/// Packing total chromatic number of a connected graph, resolved only as
/// far as the small values: 2 never occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SmallClass {
    One,
    Three,
    Four,
    AtLeastFive,
}

impl SmallClass {
    pub fn value(self) -> Option<u32> {
        match self {
            SmallClass::One => Some(1),
            SmallClass::Three => Some(3),
            SmallClass::Four => Some(4),
            SmallClass::AtLeastFive => None,
        }
    }
}

/// `K1 -> 1`, `K2 -> 3`, `P3 -> 4`, everything else connected `-> >= 5`.
pub fn classify_small(g: &Graph) -> Result<SmallClass, PackingError> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(PackingError::Disconnected);
    }
    let candidates = [
        (Graph::empty(1), SmallClass::One),
        (generate(Family::Path(2))?, SmallClass::Three),
        (generate(Family::Path(3))?, SmallClass::Four),
    ];
    Ok(candidates
        .into_iter()
        .find(|(h, _)| isomorphic_tiny(g, h))
        .map_or(SmallClass::AtLeastFive, |(_, class)| class))
}

/// Isomorphism for graphs of at most three vertices: degree sequences
/// first, then every vertex bijection.
fn isomorphic_tiny(g: &Graph, h: &Graph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() || n > 3 {
        return false;
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..x.vertex_count()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return false;
    }
    permutations(n)
        .into_iter()
        .any(|p| g.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v])))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}
