//! Seeded random graphs for the randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, Vertex};

/// `G(n, p)`: every pair independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("distinct pairs form a simple graph")
}

/// A uniformly random labelled tree plus every other pair with
/// probability `p`; always connected.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push(ordered(order[i], parent));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("distinct pairs form a simple graph")
}

/// A random subgraph: a nonempty vertex subset, then each induced edge
/// kept with probability `p`.
pub fn random_subgraph<R: Rng + ?Sized>(rng: &mut R, g: &Graph, p: f64) -> Graph {
    let n = g.vertex_count();
    let mut keep: Vec<Vertex> = (0..n).filter(|_| rng.gen_bool(0.8)).collect();
    if keep.is_empty() && n > 0 {
        keep.push(rng.gen_range(0..n));
    }
    g.induced_subgraph(&keep)
        .spanning_subgraph(|_, _| rng.gen_bool(p))
}

fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}
