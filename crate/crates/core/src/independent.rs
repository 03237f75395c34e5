//! Exact maximum independent set by branch and bound.
//!
//! The search is the classic max-clique scheme run on the complement: at
//! every node the candidates are partitioned greedily into cliques of the
//! conflict graph, and since an independent set takes at most one vertex
//! per clique, the number of cliques bounds what the node can still add.

use crate::bitset::VertexSet;

/// Conflict graph as adjacency bitsets; `conflicts[v]` never contains `v`.
pub struct ConflictGraph {
    conflicts: Vec<VertexSet>,
}

impl ConflictGraph {
    pub fn new(conflicts: Vec<VertexSet>) -> Self {
        ConflictGraph { conflicts }
    }

    pub fn len(&self) -> usize {
        self.conflicts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conflicts.is_empty()
    }

    pub fn conflicts(&self, v: usize) -> &VertexSet {
        &self.conflicts[v]
    }

    /// A maximum independent set, sorted. Ties resolve deterministically.
    pub fn maximum_independent_set(&self) -> Vec<usize> {
        self.maximum_independent_subset(&VertexSet::full(self.len()))
    }

    /// A maximum independent set among `candidates`.
    pub fn maximum_independent_subset(&self, candidates: &VertexSet) -> Vec<usize> {
        let mut search = Search {
            graph: self,
            current: Vec::new(),
            best: Vec::new(),
        };
        search.expand(candidates.clone());
        let mut best = search.best;
        best.sort_unstable();
        best
    }

    /// Number of cliques in a greedy clique partition of `set`; an upper
    /// bound on the independence number of the subgraph induced by `set`.
    pub fn clique_cover_bound(&self, set: &VertexSet) -> usize {
        let mut left = set.clone();
        let mut count = 0;
        while !left.is_empty() {
            let mut pool = left.clone();
            while let Some(v) = pool.first() {
                left.remove(v);
                pool.remove(v);
                pool.intersect_with(&self.conflicts[v]);
            }
            count += 1;
        }
        count
    }

    /// Greedy clique partition in the order used for branching: vertices
    /// paired with the number of cliques opened so far (their bound).
    fn numbered(&self, set: &VertexSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(set.len());
        let mut left = set.clone();
        let mut clique = 0;
        while left.first().is_some() {
            clique += 1;
            let mut pool = left.clone();
            while let Some(v) = pool.first() {
                left.remove(v);
                pool.remove(v);
                pool.intersect_with(&self.conflicts[v]);
                out.push((v, clique));
            }
        }
        out
    }
}

struct Search<'a> {
    graph: &'a ConflictGraph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: VertexSet) {
        let order = self.graph.numbered(&candidates);
        for &(v, bound) in order.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return;
            }
            self.current.push(v);
            let mut next = candidates.clone();
            next.remove(v);
            next.difference_with(self.graph.conflicts(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_edges(n: usize, edges: &[(usize, usize)]) -> ConflictGraph {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        ConflictGraph::new(adj)
    }

    fn brute_force(n: usize, edges: &[(usize, usize)]) -> usize {
        (0u32..1 << n)
            .filter(|mask| {
                edges
                    .iter()
                    .all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_cases() {
        let c5: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let g = from_edges(5, &c5);
        let mis = g.maximum_independent_set();
        assert_eq!(mis.len(), 2);
        assert_eq!(g.clique_cover_bound(&VertexSet::full(5)), 3);

        let star: Vec<_> = (1..6).map(|i| (0, i)).collect();
        assert_eq!(
            from_edges(6, &star).maximum_independent_set(),
            vec![1, 2, 3, 4, 5]
        );
        assert_eq!(
            from_edges(0, &[]).maximum_independent_set(),
            Vec::<usize>::new()
        );
        assert_eq!(from_edges(1, &[]).maximum_independent_set(), vec![0]);
    }

    #[test]
    fn matches_subset_enumeration_on_pseudo_random_graphs() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let n = (next() % 13) as usize;
            let density = next() % 100;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next() % 100 < density {
                        edges.push((u, v));
                    }
                }
            }
            let g = from_edges(n, &edges);
            let mis = g.maximum_independent_set();
            assert_eq!(mis.len(), brute_force(n, &edges));
            for (i, &u) in mis.iter().enumerate() {
                for &v in &mis[i + 1..] {
                    assert!(!g.conflicts(u).contains(v));
                }
            }
            assert!(g.clique_cover_bound(&VertexSet::full(n)) >= mis.len());
        }
    }
}
