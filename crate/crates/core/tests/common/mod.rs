#![allow(dead_code)]

use packem::graph::Vertex;
use packem::Graph;
use proptest::prelude::*;

/// Arbitrary simple graph on `min..=max` vertices.
pub fn graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Arbitrary connected graph: a random tree plus random extra edges.
pub fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min.max(1)..=max).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let pairs = n * (n - 1) / 2;
        (
            parents,
            proptest::collection::vec(proptest::bool::weighted(0.3), pairs),
        )
            .prop_map(move |(parents, bits)| {
                let tree: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p, i + 1))
                    .collect();
                let edges = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .zip(bits)
                    .filter(|(e, extra)| *extra || tree.contains(e))
                    .map(|(e, _)| e);
                Graph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
            })
    })
}

/// Floyd-Warshall over an explicit adjacency matrix; `None` is unreachable.
pub fn floyd(adj: &[Vec<bool>]) -> Vec<Vec<Option<u32>>> {
    let n = adj.len();
    let mut d: Vec<Vec<Option<u32>>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| match (u == v, adj[u][v]) {
                    (true, _) => Some(0),
                    (false, true) => Some(1),
                    _ => None,
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// The vertices-then-edges element list of `g` with the total-graph
/// adjacency written out from the definition.
pub fn total_adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let edges: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let size = n + edges.len();
    let mut adj = vec![vec![false; size]; size];
    let mut link = |a: usize, b: usize| {
        adj[a][b] = true;
        adj[b][a] = true;
    };
    for (i, &(u, v)) in edges.iter().enumerate() {
        link(u, v);
        link(u, n + i);
        link(v, n + i);
        for (j, &(x, y)) in edges.iter().enumerate().skip(i + 1) {
            if u == x || u == y || v == x || v == y {
                link(n + i, n + j);
            }
        }
    }
    adj
}
