//! Exact color-class capacities.
//!
//! Color `i` can be given to at most as many vertices as the largest
//! `i`-packing (pairwise distance `> i`) holds, so `k` colors cover at most
//! the sum of the first `k` capacities.

use std::cell::RefCell;
use std::rc::Rc;

use crate::bitset::VertexSet;
use crate::graph::{DistanceMatrix, Vertex, UNREACHABLE};
use crate::independent::ConflictGraph;

use super::Color;

/// Distance powers of a host graph: in power `i`, two vertices conflict iff
/// they are at distance `1..=i`.
pub struct PowerGraphs<'a> {
    d: &'a DistanceMatrix,
    powers: RefCell<Vec<Rc<ConflictGraph>>>,
}

impl<'a> PowerGraphs<'a> {
    pub fn new(d: &'a DistanceMatrix) -> Self {
        PowerGraphs {
            d,
            powers: RefCell::new(Vec::new()),
        }
    }

    pub fn distances(&self) -> &DistanceMatrix {
        self.d
    }

    /// Conflict graph for color `i >= 1`.
    pub fn power(&self, i: Color) -> Rc<ConflictGraph> {
        assert!(i >= 1, "colors start at 1");
        let mut powers = self.powers.borrow_mut();
        while powers.len() < i as usize {
            let radius = powers.len() as u32 + 1;
            powers.push(Rc::new(conflict_graph(self.d, radius)));
        }
        powers[i as usize - 1].clone()
    }
}

fn conflict_graph(d: &DistanceMatrix, radius: u32) -> ConflictGraph {
    let n = d.len();
    let conflicts = (0..n)
        .map(|u| {
            let mut set = VertexSet::new(n);
            for (v, &dist) in d.row(u).iter().enumerate() {
                if v != u && dist != UNREACHABLE && dist <= radius {
                    set.insert(v);
                }
            }
            set
        })
        .collect();
    ConflictGraph::new(conflicts)
}

/// A largest set of vertices with pairwise distance greater than `i`.
pub fn max_i_packing(d: &DistanceMatrix, i: Color) -> (usize, Vec<Vertex>) {
    let witness = conflict_graph(d, i).maximum_independent_set();
    (witness.len(), witness)
}

/// Per-color capacities, computed on demand and memoized.
pub struct CapacityProfile<'a> {
    powers: &'a PowerGraphs<'a>,
    caps: RefCell<Vec<usize>>,
}

impl<'a> CapacityProfile<'a> {
    pub fn new(powers: &'a PowerGraphs<'a>) -> Self {
        CapacityProfile {
            powers,
            caps: RefCell::new(Vec::new()),
        }
    }

    /// Capacity of color `i >= 1`.
    pub fn capacity(&self, i: Color) -> usize {
        let mut caps = self.caps.borrow_mut();
        while caps.len() < i as usize {
            let color = caps.len() as Color + 1;
            let d = self.powers.distances();
            let cap = if color >= d.max_finite() {
                // every component collapses to a clique
                component_count(d)
            } else {
                self.powers.power(color).maximum_independent_set().len()
            };
            caps.push(cap);
        }
        caps[i as usize - 1]
    }

    /// Capacities of colors `1..=k`.
    pub fn profile(&self, k: Color) -> Vec<usize> {
        (1..=k).map(|i| self.capacity(i)).collect()
    }

    /// Upper bound on how many vertices `k` colors can cover.
    pub fn total(&self, k: Color) -> usize {
        (1..=k).map(|i| self.capacity(i)).sum()
    }

    /// Sound refutation: `k` colors cannot cover every vertex.
    pub fn infeasible(&self, k: Color) -> bool {
        self.total(k) < self.powers.distances().len()
    }
}

fn component_count(d: &DistanceMatrix) -> usize {
    (0..d.len())
        .filter(|&v| (0..v).all(|u| d.get(u, v) == UNREACHABLE))
        .count()
}

/// True iff the first `k` capacities sum to fewer than `|V|`.
pub fn capacity_infeasible(d: &DistanceMatrix, k: Color) -> bool {
    let powers = PowerGraphs::new(d);
    CapacityProfile::new(&powers).infeasible(k)
}
